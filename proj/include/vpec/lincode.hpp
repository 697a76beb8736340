#pragma once

#include "vpec/errors.hpp"
#include "vpec/gf.hpp"
#include "vpec/rational.hpp"
#include "vpec/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vpec::lincode {

/// Evaluation points and column multipliers of a generalized Reed-Solomon code.
struct GrsParams {
    std::vector<gf::Element> points;
    std::vector<gf::Element> multipliers;
};

/// Linear [n, k] code over GF(q) given by a full-rank k x n generator matrix.
class LinearCode {
public:
    /// Throws InvalidParameters when the generator is ragged, has out-of-field entries,
    /// or does not have full row rank.
    LinearCode(gf::Field field, Matrix generator);

    const gf::Field& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return k_; }
    const Matrix& generator() const noexcept { return generator_; }

    /// message * generator.
    Word encode(std::span<const Symbol> message) const;

    /// True when `word` lies in the row space of the generator.
    bool contains(std::span<const Symbol> word) const;

    /// Columns forming an information set (pivot columns of the reduced generator).
    const std::vector<std::size_t>& information_set() const noexcept { return info_set_; }

    /// q^k, saturating.
    std::uint64_t codeword_count() const noexcept;

private:
    gf::Field field_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Matrix generator_;
    Matrix reduced_;  // reduced row echelon form, identity on info_set_
    std::vector<std::size_t> info_set_;
};

/// Rank of a matrix over the field.
std::size_t rank(const gf::Field& field, Matrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> invert(const gf::Field& field, const Matrix& m);

Matrix multiply(const gf::Field& field, const Matrix& a, const Matrix& b);

/// Generator rows multiplier_j * point_j^i. Requires n <= q, k <= n, distinct points,
/// nonzero multipliers.
LinearCode grs_build(const gf::Field& field, std::size_t n, std::size_t k, const GrsParams& params);

/// All q^k codewords, indexed by message in lexicographic order.
std::vector<Word> enumerate_codewords(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Minimum Hamming weight over nonzero codewords (n + 1 for the zero code is never returned:
/// k >= 1 is required).
std::size_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Generator of the same code whose columns start, start+1, ..., start+k-1 (mod n) form the
/// identity. Throws InvalidParameters when that window is singular (code not MDS).
Matrix systematic_window_generator(const LinearCode& code, std::size_t start);

/// Result of an exhaustive list-decodability check.
struct ListDecodingReport {
    bool holds = true;
    std::uint64_t received_words_checked = 0;
    /// When the property fails: a received word and the offending codewords.
    std::optional<Word> witness;
    std::vector<Word> witness_codewords;
    /// Largest list size seen (ordinary check) or smallest (L+1)-sum seen (strong check).
    std::uint64_t extremal_value = 0;
};

/// Exhaustive check that every y in GF(q)^n has at most `list_size` codewords within
/// distance `radius`. Requires q^n and q^k within budget.
ListDecodingReport check_list_decodable(const LinearCode& code, std::size_t radius, std::size_t list_size,
                                        std::uint64_t budget = kDefaultBudget);
bool is_list_decodable(const LinearCode& code, std::size_t radius, std::size_t list_size,
                       std::uint64_t budget = kDefaultBudget);

/// Exhaustive check that for every y, any L+1 distinct codewords have distance sum
/// exceeding (L+1) * radius. Requires radius > 0.
///
/// The distance profile of y to the code equals the weight profile of the coset y + C, so it
/// suffices to scan the q^(n-k) coset representatives vanishing on the information set; the
/// minimum over (L+1)-subsets is the sum of the L+1 smallest distances.
ListDecodingReport check_strongly_list_decodable(const LinearCode& code, const Rational& radius,
                                                 std::size_t list_size,
                                                 std::uint64_t budget = kDefaultBudget);
bool is_strongly_list_decodable(const LinearCode& code, const Rational& radius, std::size_t list_size,
                                std::uint64_t budget = kDefaultBudget);

/// L(n-k)/(L+1).
Rational l_mds_radius(std::size_t n, std::size_t k, std::size_t list_size);

/// Throws InvalidParameters unless 1 <= L <= min{q-1, C(n-1, k-1)} and k < n.
void require_l_mds_preconditions(const LinearCode& code, std::size_t list_size);

bool is_l_mds(const LinearCode& code, std::size_t list_size, std::uint64_t budget = kDefaultBudget);

struct SearchResult {
    GrsParams params;
    LinearCode code;
    /// Zero-based iteration at which the witness was found.
    std::uint64_t iteration;
};

/// Samples GRS parameters from a seeded stream (one independent substream per iteration)
/// and returns the first L-MDS code. Returns nullopt when max_iters is exhausted.
/// Throws InvalidParameters when n > q or the L-MDS preconditions cannot hold.
std::optional<SearchResult> search_l_mds(const gf::Field& field, std::size_t n, std::size_t k,
                                         std::size_t list_size, std::uint64_t seed, std::uint64_t max_iters,
                                         std::uint64_t budget = kDefaultBudget);

/// SplitMix64 mix of (seed, stream), used to derive independent substreams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace vpec::lincode
