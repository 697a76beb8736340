#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace vpec::gf {

/// Field elements are indices in [0, q). The index of a0 + a1 x + ... is sum a_i p^i.
using Element = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxOrder = 1u << 16;
/// Fields up to this order get log/antilog tables.
inline constexpr std::uint32_t kTableOrder = 1u << 12;

bool is_prime(std::uint32_t n) noexcept;

/// Finite field GF(p^m) with a fixed monic irreducible modulus.
///
/// The modulus is the lexicographically least monic irreducible polynomial of degree m,
/// ordering candidates by the index of their lower-order coefficients. Copies share the
/// immutable arithmetic tables.
class Field {
public:
    /// Throws InvalidParameters for non-prime p, m == 0 or p^m > 2^16.
    static Field build(std::uint32_t p, std::uint32_t m);

    /// GF(q) for a prime power q.
    static Field of_order(std::uint32_t q);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Coefficients c_0..c_m of the modulus, c_m = 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return tables_ != nullptr; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    /// Throws std::domain_error for a == 0.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    bool contains(Element a) const noexcept { return a < q_; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    struct Tables {
        std::vector<Element> exp;  // length 2(q-1)
        std::vector<std::uint32_t> log;
    };

    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
    Element poly_mul(Element a, Element b) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

}  // namespace vpec::gf
