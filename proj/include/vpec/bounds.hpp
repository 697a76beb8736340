#pragma once

#include "vpec/errors.hpp"
#include "vpec/rational.hpp"
#include "vpec/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vpec::bounds {

/// T + floor(T^2 / 4) + 1.
std::uint64_t f_poly(std::uint64_t max_errors);

enum class ConverseVariant { singleton, linear };

/// Lower bound on the per-packet rate at distortion D in [0, 1].
///   singleton: 1/(N-T) for D > 0 and 1/(N-2T) for D = 0;
///   linear:    (1-D)/(N-2T), for linear codes, requires N >= 2T+1.
/// Returns nullopt when D = 0 and N <= 2T: no lossless code exists at all.
std::optional<Rational> converse_rate(std::size_t packets, std::size_t max_errors, const Rational& distortion,
                                      ConverseVariant variant);

/// Largest r >= 0 with 2r <= min{d, (2(n-d)-q)/(q-2)} (the second term is dropped for q = 2).
/// When no r >= 0 satisfies the second inequality the answer is 0.
std::size_t diametric_radius(std::uint32_t q, std::size_t n, std::size_t d);

/// Maximum size of a q-ary length-n code with diameter at most d, from the diametric set
/// K_r = {x : at least n-d+r of the first n-d+2r coordinates equal 1}. Requires n - d >= 1, q >= 2.
BigInt anticode_size(std::uint32_t q, std::size_t n, std::size_t d);

/// Explicit K_r (symbols 0..q-1, the distinguished symbol is 1). Throws BudgetExceeded past the budget.
std::vector<Word> diametric_set(std::uint32_t q, std::size_t n, std::size_t d,
                                std::uint64_t budget = kDefaultBudget);

/// Every pair of words is within Hamming distance d.
bool is_anticode(const std::vector<Word>& words, std::size_t d);

/// Largest vertex count accepted by the exact search.
inline constexpr std::uint64_t kMaxAnticodeVertices = 256;

struct AnticodeSearch {
    std::uint64_t size = 0;
    std::vector<Word> witness;
};

/// Exact maximum anticode by branch-and-bound clique search on the graph of words at distance
/// <= d. Throws BudgetExceeded when q^n > kMaxAnticodeVertices.
AnticodeSearch anticode_brute_force(std::uint32_t q, std::size_t n, std::size_t d);

/// Builds K_r and checks it is an anticode of the size anticode_size predicts.
bool verify_diametric_witness(std::uint32_t q, std::size_t n, std::size_t d,
                              std::uint64_t budget = kDefaultBudget);

struct AnticodeBound {
    /// Valid lower bound on R.
    Rational bound;
    /// Bound computed with a rational upper estimate of the logarithm; equals `bound` when exact.
    Rational bound_upper;
    bool exact = false;
    BigInt anticode;
};

/// (1 - log_q(Ant_q(k, kD)) / k) / (N - 2T). kD must be an integer and 0 <= D < 1, N >= 2T+1.
/// When Ant is a power of q the result is exact; otherwise log_q(Ant) is bracketed in steps of
/// 1/precision and the upper end is used, so `bound` never overstates.
AnticodeBound converse_anticode(std::size_t packets, std::size_t max_errors, std::size_t k,
                                const Rational& distortion, std::uint32_t q, std::uint64_t precision = 1024);

/// max{(1-D)/(N-2T), 1/(N-T)} when q >= 2k(1-D)/3 + 2, else the anticode bound in place of the
/// first term.
Rational corollary1_bound(std::size_t packets, std::size_t max_errors, std::size_t k, const Rational& distortion,
                          std::uint32_t q);

struct RdPoint {
    Rational R;
    Rational D;
    friend bool operator==(const RdPoint&, const RdPoint&) = default;
};

enum class CurveKind { converse, achievable, reference };
std::string to_string(CurveKind kind);

/// Points joined piecewise linearly, ordered by non-decreasing R.
struct RdCurve {
    std::string name;
    CurveKind kind = CurveKind::achievable;
    std::vector<RdPoint> points;
    std::string note;

    bool contains(const RdPoint& p) const;
    /// Smallest D on the curve at rate R, nullopt outside [R_min, R_max].
    std::optional<Rational> distortion_at(const Rational& R) const;
};

struct OmittedCurve {
    std::string name;
    std::string reason;
};

struct CurveSet {
    std::vector<RdCurve> curves;
    std::vector<OmittedCurve> omitted;

    const RdCurve* find(const std::string& name) const;
};

/// Lower convex hull of a point set in the (R, D) plane, ordered by R. Time sharing makes every
/// point on it achievable when the inputs are.
std::vector<RdPoint> lower_hull(std::vector<RdPoint> points);

struct CurveOptions {
    /// L values for the interleaved L-MDS construction; invalid ones are skipped with a reason.
    std::vector<std::size_t> list_sizes{2, 3};
    /// Alphabet size, used only to annotate whether the closed-form converse applies.
    std::optional<std::uint32_t> q;
};

/// Converse curves (singleton, linear).
CurveSet converse_curves(std::size_t packets, std::size_t max_errors);

/// MDS time sharing, polytope reference, cons1 (over the valid L), cons2 and its extension.
CurveSet achievable_curves(std::size_t packets, std::size_t max_errors, const CurveOptions& options = {});

/// Both of the above, converse first. Throws InvalidParameters when N <= T.
CurveSet all_curves(std::size_t packets, std::size_t max_errors, const CurveOptions& options = {});

/// Overall-rate regime T/N = theta as N grows.
struct AsymptoticCurves {
    Rational theta;
    /// Curves in the (R^O, D) plane.
    std::vector<RdCurve> curves;
    /// The polytope distortion grows like F(T)/N and diverges; no curve is emitted for it.
    bool polytope_diverges = true;
    struct Comparison {
        std::size_t list_size;
        /// theta <= 1/(L+1): the L-MDS point is asserted to beat MDS time sharing.
        bool asserted;
        Rational lmds_distortion;
        Rational mds_distortion;
    };
    std::vector<Comparison> comparisons;
};

/// ((1-theta)/theta) (1 - (1-2theta) R^O).
Rational mds_overall_distortion(const Rational& theta, const Rational& overall_rate);

/// (L / (L - (L+1) theta), L theta). Requires theta < L/(L+1).
RdPoint lmds_overall_point(const Rational& theta, std::size_t list_size);

/// L x - (L-1)/(L+1) - (L-1) / ((L+1)(L - (L+1) x)); vanishes at x = 1/(L+1).
Rational comparison_function(std::size_t list_size, const Rational& x);

/// Requires 0 < theta < 1/2 and every L >= 2.
AsymptoticCurves asymptotic_curves(const Rational& theta, const std::vector<std::size_t>& list_sizes = {2, 3});

}  // namespace vpec::bounds
