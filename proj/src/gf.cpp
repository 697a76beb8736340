#include "vpec/gf.hpp"

#include "vpec/errors.hpp"

#include <stdexcept>
#include <string>

namespace vpec::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-order coefficient first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t len) {
    Poly d(len);
    for (std::uint32_t i = 0; i < len; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

bool irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= m / 2; ++d) {
        const std::uint64_t count = checked_pow(p, d);
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = digits_of(static_cast<std::uint32_t>(low), p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw InvalidParameters("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw InvalidParameters("field degree must be at least 1");
    if (checked_pow(p, m) > kMaxOrder) {
        throw InvalidParameters("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds 2^16");
    }
    const std::uint32_t lows = static_cast<std::uint32_t>(checked_pow(p, m));
    for (std::uint32_t low = 0; low < lows; ++low) {
        Poly f = digits_of(low, p, m);
        f.push_back(1);
        if (irreducible(f, p)) return Field(p, m, std::move(f));
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable: one always exists
}

Field Field::of_order(std::uint32_t q) {
    if (q < 2) throw InvalidParameters("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw InvalidParameters(std::to_string(q) + " is not a prime power");
    return build(p, m);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(checked_pow(p, m))), modulus_(std::move(modulus)) {
    if (q_ > kTableOrder) return;

    // Find a primitive element by testing orders against the prime factors of q-1.
    const std::uint32_t group = q_ - 1;
    const auto factors = prime_factors(group);
    auto slow_pow = [&](Element a, std::uint64_t e) {
        Element r = 1, b = a;
        while (e) {
            if (e & 1) r = poly_mul(r, b);
            b = poly_mul(b, b);
            e >>= 1;
        }
        return r;
    };
    Element generator = 0;
    for (Element g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto f : factors) {
            if (slow_pow(g, group / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = g;
            break;
        }
    }
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * static_cast<std::size_t>(group) + 1);
    t->log.assign(q_, 0);
    Element x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        t->exp[i] = x;
        t->log[x] = i;
        x = poly_mul(x, generator);
    }
    for (std::uint32_t i = group; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - group];
    tables_ = std::move(t);
}

Element Field::add(Element a, Element b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Element r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Element Field::neg(Element a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    Element r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::poly_mul(Element a, Element b) const {
    if (m_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    const Poly da = digits_of(a, p_, m_);
    const Poly db = digits_of(b, p_, m_);
    Poly prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
    }
    const Poly r = poly_mod(std::move(prod), modulus_, p_);
    Element out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

Element Field::mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return tables_->exp[tables_->log[a] + tables_->log[b]];
    return poly_mul(a, b);
}

Element Field::inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (tables_) return tables_->exp[(q_ - 1) - tables_->log[a]];
    return pow(a, q_ - 2);
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element result = 1, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace vpec::gf
