#include "vpec/bounds.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>

namespace vpec::bounds {

namespace {

Rational rat(std::uint64_t n, std::uint64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

void require_distortion(const Rational& d) {
    if (d < 0 || d > 1) throw InvalidParameters("distortion must lie in [0, 1]");
}

BigInt big_pow(std::uint32_t base, std::uint64_t exp) { return boost::multiprecision::pow(BigInt(base), exp); }

BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::uint64_t f_poly(std::uint64_t max_errors) {
    if (max_errors == 0) throw InvalidParameters("T must be positive");
    return max_errors + max_errors * max_errors / 4 + 1;
}

std::optional<Rational> converse_rate(std::size_t packets, std::size_t max_errors, const Rational& distortion,
                                      ConverseVariant variant) {
    if (packets <= max_errors) throw InvalidParameters("need N > T");
    require_distortion(distortion);
    const bool lossless_possible = packets >= 2 * max_errors + 1;
    if (variant == ConverseVariant::linear) {
        if (!lossless_possible) throw InvalidParameters("linear converse needs N >= 2T + 1");
        return (1 - distortion) / rat(packets - 2 * max_errors);
    }
    if (distortion > 0) return rat(1, packets - max_errors);
    if (!lossless_possible) return std::nullopt;
    return rat(1, packets - 2 * max_errors);
}

// ---------------------------------------------------------------------------
// Anticodes

std::size_t diametric_radius(std::uint32_t q, std::size_t n, std::size_t d) {
    if (q < 2) throw InvalidParameters("q must be at least 2");
    if (d >= n) throw InvalidParameters("need n - d >= 1");
    std::size_t r = d / 2;
    if (q > 2) {
        // 2r (q - 2) <= 2(n - d) - q
        const long long rhs = 2 * static_cast<long long>(n - d) - static_cast<long long>(q);
        if (rhs < 0) return 0;
        r = std::min<std::size_t>(r, static_cast<std::size_t>(rhs) / (2 * (q - 2)));
    }
    return r;
}

BigInt anticode_size(std::uint32_t q, std::size_t n, std::size_t d) {
    const std::size_t r = diametric_radius(q, n, d);
    const std::size_t head = n - d + 2 * r;
    BigInt head_count = 0;
    for (std::size_t ones = n - d + r; ones <= head; ++ones) {
        head_count += big_binomial(head, ones) * big_pow(q - 1, head - ones);
    }
    return head_count * big_pow(q, d - 2 * r);
}

std::vector<Word> diametric_set(std::uint32_t q, std::size_t n, std::size_t d, std::uint64_t budget) {
    const std::size_t r = diametric_radius(q, n, d);
    const std::uint64_t space = checked_pow(q, n);
    require_budget("diametric set enumeration", space, budget);
    const std::size_t head = n - d + 2 * r;
    std::vector<Word> out;
    for (std::uint64_t i = 0; i < space; ++i) {
        Word w = word_from_index(i, q, n);
        const auto ones = static_cast<std::size_t>(std::count(w.begin(), w.begin() + head, Symbol{1}));
        if (ones >= n - d + r) out.push_back(std::move(w));
    }
    return out;
}

bool is_anticode(const std::vector<Word>& words, std::size_t d) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (hamming_distance(words[i], words[j]) > d) return false;
        }
    }
    return true;
}

namespace {

using VertexSet = std::bitset<kMaxAnticodeVertices>;

// Maximum clique with greedy colouring bounds (Tomita-style).
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

    std::vector<std::size_t> run(const VertexSet& candidates, std::vector<std::size_t> seed) {
        current_ = std::move(seed);
        best_ = current_;
        expand(candidates);
        return best_;
    }

private:
    void expand(VertexSet p) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        colour(p, order, bound);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.size() + bound[idx] <= best_.size()) return;
            const std::size_t v = order[idx];
            current_.push_back(v);
            const VertexSet next = p & adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            p.reset(v);
        }
    }

    // Vertices in increasing colour order; bound[i] is the colour count up to order[i].
    void colour(VertexSet p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        std::size_t k = 0;
        while (p.any()) {
            ++k;
            VertexSet q = p;
            while (q.any()) {
                std::size_t v = 0;
                while (!q.test(v)) ++v;
                q.reset(v);
                q &= ~adj_[v];
                p.reset(v);
                order.push_back(v);
                bound.push_back(k);
            }
        }
    }

    std::vector<VertexSet> adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace

AnticodeSearch anticode_brute_force(std::uint32_t q, std::size_t n, std::size_t d) {
    if (q < 2 || n == 0) throw InvalidParameters("need q >= 2 and n >= 1");
    const std::uint64_t vertices = checked_pow(q, n);
    require_budget("exact anticode search", vertices, kMaxAnticodeVertices);
    std::vector<Word> words;
    for (std::uint64_t i = 0; i < vertices; ++i) words.push_back(word_from_index(i, q, n));
    std::vector<VertexSet> adj(vertices);
    for (std::size_t i = 0; i < vertices; ++i) {
        for (std::size_t j = 0; j < vertices; ++j) {
            if (i != j && hamming_distance(words[i], words[j]) <= d) adj[i].set(j);
        }
    }
    // Translations act transitively on the graph, so some maximum clique contains word 0.
    CliqueSearch search(adj);
    const auto clique = search.run(adj[0], {0});
    AnticodeSearch out;
    out.size = clique.size();
    for (auto v : clique) out.witness.push_back(words[v]);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

bool verify_diametric_witness(std::uint32_t q, std::size_t n, std::size_t d, std::uint64_t budget) {
    const auto set = diametric_set(q, n, d, budget);
    return BigInt(set.size()) == anticode_size(q, n, d) && is_anticode(set, d);
}

// ---------------------------------------------------------------------------
// Converse bounds

AnticodeBound converse_anticode(std::size_t packets, std::size_t max_errors, std::size_t k,
                                const Rational& distortion, std::uint32_t q, std::uint64_t precision) {
    if (packets < 2 * max_errors + 1) throw InvalidParameters("need N >= 2T + 1");
    if (k == 0) throw InvalidParameters("k must be positive");
    if (distortion < 0 || distortion >= 1) throw InvalidParameters("need 0 <= D < 1");
    if (precision == 0) throw InvalidParameters("precision must be positive");
    const Rational kd = distortion * k;
    if (!is_integer(kd)) throw InvalidParameters("kD must be an integer");
    const auto d = static_cast<std::size_t>(floor_of(kd));

    AnticodeBound out;
    out.anticode = anticode_size(q, k, d);
    const Rational scale = rat(1, packets - 2 * max_errors);

    // Exact power of q?
    BigInt rest = out.anticode;
    std::uint64_t exponent = 0;
    while (rest % q == 0) {
        rest /= q;
        ++exponent;
    }
    if (rest == 1) {
        out.exact = true;
        out.bound = (1 - rat(exponent, k)) * scale;
        out.bound_upper = out.bound;
        return out;
    }

    // u = ceil(precision * log_q Ant): smallest u with q^u >= Ant^precision.
    const BigInt target = boost::multiprecision::pow(out.anticode, precision);
    const double log2_q = std::log2(static_cast<double>(q));
    auto u = static_cast<std::uint64_t>(static_cast<double>(msb(target)) / log2_q);
    while (big_pow(q, u) < target) ++u;
    while (u > 0 && big_pow(q, u - 1) >= target) --u;
    out.bound = (1 - Rational(BigInt(u), BigInt(precision) * k)) * scale;
    out.bound_upper = (1 - Rational(BigInt(u - 1), BigInt(precision) * k)) * scale;
    return out;
}

Rational corollary1_bound(std::size_t packets, std::size_t max_errors, std::size_t k, const Rational& distortion,
                          std::uint32_t q) {
    if (packets < 2 * max_errors + 1) throw InvalidParameters("need N >= 2T + 1");
    require_distortion(distortion);
    const Rational floor_rate = rat(1, packets - max_errors);
    const Rational threshold = Rational(2 * k) * (1 - distortion) / 3 + 2;
    Rational main;
    if (Rational(q) >= threshold) {
        main = (1 - distortion) / rat(packets - 2 * max_errors);
    } else {
        main = converse_anticode(packets, max_errors, k, distortion, q).bound;
    }
    return std::max(main, floor_rate);
}

// ---------------------------------------------------------------------------
// Curves

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::converse: return "converse";
        case CurveKind::achievable: return "achievable";
        case CurveKind::reference: return "reference";
    }
    return "?";
}

bool RdCurve::contains(const RdPoint& p) const { return std::find(points.begin(), points.end(), p) != points.end(); }

std::optional<Rational> RdCurve::distortion_at(const Rational& R) const {
    std::optional<Rational> best;
    auto offer = [&](const Rational& d) {
        if (!best || d < *best) best = d;
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].R == R) offer(points[i].D);
        if (i + 1 < points.size()) {
            const auto& a = points[i];
            const auto& b = points[i + 1];
            if (a.R < R && R < b.R) offer(a.D + (b.D - a.D) * (R - a.R) / (b.R - a.R));
        }
    }
    return best;
}

const RdCurve* CurveSet::find(const std::string& name) const {
    for (const auto& c : curves) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::vector<RdPoint> lower_hull(std::vector<RdPoint> points) {
    std::sort(points.begin(), points.end(), [](const RdPoint& a, const RdPoint& b) {
        return a.R != b.R ? a.R < b.R : a.D < b.D;
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const RdPoint& a, const RdPoint& b) { return a.R == b.R; }),
                 points.end());
    std::vector<RdPoint> hull;
    for (const auto& p : points) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            // Drop a unless it lies strictly below the segment o-p.
            const Rational cross = (a.R - o.R) * (p.D - o.D) - (a.D - o.D) * (p.R - o.R);
            if (cross <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(p);
    }
    return hull;
}

CurveSet converse_curves(std::size_t packets, std::size_t max_errors) {
    if (max_errors == 0 || packets <= max_errors) throw InvalidParameters("need N > T >= 1");
    const std::size_t n = packets;
    const std::size_t t = max_errors;
    CurveSet set;

    RdCurve singleton{"converse_singleton", CurveKind::converse, {{rat(1, n - t), 1}, {rat(1, n - t), 0}}, ""};
    if (n >= 2 * t + 1) {
        singleton.points.push_back({rat(1, n - 2 * t), 0});
        singleton.note = "R >= 1/(N-T) for D > 0; D = 0 needs R >= 1/(N-2T)";
    } else {
        singleton.note = "R >= 1/(N-T) for D > 0; D = 0 is unattainable since N < 2T+1";
    }
    set.curves.push_back(std::move(singleton));

    if (n >= 2 * t + 1) {
        set.curves.push_back({"converse_linear",
                              CurveKind::converse,
                              {{rat(1, n - t), 1}, {rat(1, n - t), rat(t, n - t)}, {rat(1, n - 2 * t), 0}},
                              "max{(1-D)/(N-2T), 1/(N-T)}; linear codes, or any code once q >= 2k(1-D)/3 + 2"});
    } else {
        set.omitted.push_back({"converse_linear", "needs N >= 2T+1"});
    }
    return set;
}

CurveSet achievable_curves(std::size_t packets, std::size_t max_errors, const CurveOptions& options) {
    if (max_errors == 0 || packets <= max_errors) throw InvalidParameters("need N > T >= 1");
    const std::size_t n = packets;
    const std::size_t t = max_errors;
    const std::uint64_t f = f_poly(t);
    CurveSet set;

    if (n < 2 * t + 1) {
        for (const char* name : {"mds_timesharing", "polytope_reference", "cons1", "cons2", "cons2_extension"}) {
            set.omitted.push_back({name, "needs N >= 2T+1"});
        }
        return set;
    }

    const RdPoint mds_low{rat(1, n - t), 1};
    const RdPoint mds_high{rat(1, n - 2 * t), 0};
    set.curves.push_back({"mds_timesharing", CurveKind::achievable, {mds_low, mds_high},
                          "time sharing between [N, N-T] and [N, N-2T] MDS codes"});

    const bool polytope_ok = n >= f + 1;
    const RdPoint polytope{rat(1, n - t), rat(f, n)};
    if (polytope_ok) {
        set.curves.push_back({"polytope_reference", CurveKind::reference, {polytope, mds_high},
                              "external construction, not implemented"});
    } else {
        set.omitted.push_back({"polytope_reference", "needs N >= F(T)+1 = " + std::to_string(f + 1)});
    }

    std::vector<RdPoint> cons1_points{mds_high};
    std::vector<std::string> used;
    std::vector<std::string> skipped;
    for (std::size_t l : options.list_sizes) {
        std::string why;
        if (l < 2) why = "L < 2";
        else if (l * t > n) why = "L > N/T";
        else if (t % l != 0) why = "L does not divide T";
        if (!why.empty()) {
            skipped.push_back("L=" + std::to_string(l) + " (" + why + ")");
            continue;
        }
        cons1_points.push_back({rat(1, n - t - t / l), rat(l * t, n)});
        used.push_back(std::to_string(l));
    }
    if (used.empty()) {
        std::string reason = "no valid L";
        for (const auto& s : skipped) reason += "; " + s;
        set.omitted.push_back({"cons1", reason});
    } else {
        if (polytope_ok) cons1_points.push_back(polytope);
        RdCurve c{"cons1", CurveKind::achievable, lower_hull(cons1_points), "L in {"};
        for (std::size_t i = 0; i < used.size(); ++i) c.note += (i ? "," : "") + used[i];
        c.note += "}";
        if (polytope_ok) c.note += "; left end is the polytope reference point";
        if (c.points.size() < cons1_points.size()) c.note += "; dominated points dropped";
        for (const auto& s : skipped) c.note += "; skipped " + s;
        set.curves.push_back(std::move(c));
    }

    if (n == 2 * t + 1) {
        const RdPoint knee{rat(t + 1, n), rat(t, n)};
        std::string note = "repetition construction, s from 1 to T";
        if (options.q) {
            const bool optimal = Rational(*options.q) >= Rational(4 * (t + 2), 3);
            note += optimal ? "; meets the converse (q >= 4(T+2)/3)" : "; q below 4(T+2)/3, optimality not claimed";
        }
        set.curves.push_back({"cons2", CurveKind::achievable, {knee, {1, 0}}, note});
        if (polytope_ok) {
            set.curves.push_back({"cons2_extension", CurveKind::achievable, {polytope, knee},
                                  "time sharing with the polytope reference point"});
        } else {
            set.omitted.push_back({"cons2_extension", "polytope reference point unavailable"});
        }
    } else {
        set.omitted.push_back({"cons2", "needs N = 2T+1"});
        set.omitted.push_back({"cons2_extension", "needs N = 2T+1"});
    }
    return set;
}

CurveSet all_curves(std::size_t packets, std::size_t max_errors, const CurveOptions& options) {
    CurveSet out = converse_curves(packets, max_errors);
    CurveSet ach = achievable_curves(packets, max_errors, options);
    out.curves.insert(out.curves.end(), ach.curves.begin(), ach.curves.end());
    out.omitted.insert(out.omitted.end(), ach.omitted.begin(), ach.omitted.end());
    return out;
}

// ---------------------------------------------------------------------------
// Asymptotics

Rational mds_overall_distortion(const Rational& theta, const Rational& overall_rate) {
    return (1 - theta) / theta * (1 - (1 - 2 * theta) * overall_rate);
}

RdPoint lmds_overall_point(const Rational& theta, std::size_t list_size) {
    const Rational l(list_size);
    const Rational den = l - (l + 1) * theta;
    if (den <= 0) throw InvalidParameters("need theta < L/(L+1)");
    return {l / den, l * theta};
}

Rational comparison_function(std::size_t list_size, const Rational& x) {
    const Rational l(list_size);
    const Rational den = l - (l + 1) * x;
    if (den == 0) throw std::domain_error("comparison function has a pole at x = L/(L+1)");
    return l * x - (l - 1) / (l + 1) - (l - 1) / ((l + 1) * den);
}

AsymptoticCurves asymptotic_curves(const Rational& theta, const std::vector<std::size_t>& list_sizes) {
    if (theta <= 0 || theta >= Rational(1, 2)) throw InvalidParameters("need 0 < theta < 1/2");
    AsymptoticCurves out;
    out.theta = theta;
    const RdPoint low{1 / (1 - theta), 1};
    const RdPoint high{1 / (1 - 2 * theta), 0};
    out.curves.push_back({"converse_linear", CurveKind::converse, {low, {low.R, theta / (1 - theta)}, high},
                          "R^O >= max{(1-D)/(1-2theta), 1/(1-theta)}"});
    out.curves.push_back({"mds_timesharing", CurveKind::achievable, {low, high}, ""});
    for (std::size_t l : list_sizes) {
        if (l < 2) throw InvalidParameters("L must be at least 2");
        const RdPoint p = lmds_overall_point(theta, l);
        const Rational mds_d = mds_overall_distortion(theta, p.R);
        out.comparisons.push_back({l, theta <= Rational(1, l + 1), p.D, mds_d});
        if (p.D > 1) continue;
        out.curves.push_back({"lmds_L" + std::to_string(l), CurveKind::achievable, lower_hull({low, p, high}),
                              "time sharing with the MDS end points"});
    }
    return out;
}

}  // namespace vpec::bounds
