#pragma once

#include "vpec/lincode.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vpec::interleave {

/// l x n array whose row i is a word of constituent i. Columns act as symbols of GF(q)^l.
using CodeArray = Matrix;

/// Number of columns in which the arrays differ in at least one entry.
/// Throws InvalidParameters on shape mismatch.
std::size_t column_distance(const CodeArray& a, const CodeArray& b);

/// Interleaving of l linear codes of common length n (n <= 64). Each constituent's codebook is
/// enumerated once at construction, in message-lexicographic order; identical constituents share it.
class InterleavedCode {
public:
    InterleavedCode(const lincode::LinearCode& base, std::size_t levels, std::uint64_t budget = kDefaultBudget);
    explicit InterleavedCode(std::vector<lincode::LinearCode> constituents, std::uint64_t budget = kDefaultBudget);

    std::size_t levels() const noexcept { return constituents_.size(); }
    std::size_t length() const noexcept { return n_; }
    std::uint32_t alphabet() const noexcept { return constituents_.front().field().order(); }
    const lincode::LinearCode& constituent(std::size_t level) const { return constituents_.at(level); }
    const std::vector<Word>& codebook(std::size_t level) const { return *codebooks_.at(level); }

    /// Number of array codewords, saturating.
    std::uint64_t size() const noexcept;

    bool contains(const CodeArray& array) const;

    /// Array codeword for the given per-row codebook indices.
    CodeArray assemble(const std::vector<std::uint64_t>& row_indices) const;

private:
    std::vector<lincode::LinearCode> constituents_;
    std::vector<std::shared_ptr<const std::vector<Word>>> codebooks_;
    std::size_t n_ = 0;
};

/// All array codewords within column distance `radius` of `received`, in lexicographic order of
/// the row messages.
///
/// Rows are list decoded one at a time by exhaustive search; each partial array that survived the
/// previous rows is extended by every row candidate, and extensions whose prefix column distance
/// exceeds the radius are dropped. Prefix distance never decreases as rows are added, so the
/// result is exact. Requires q > C(L+1, 2), the condition under which the list stays within L.
std::vector<CodeArray> iterative_list_decode(const InterleavedCode& code, const CodeArray& received,
                                             std::size_t radius, std::size_t list_size);

/// Brute-force reference: scans every array codeword. Requires size() <= budget.
std::vector<CodeArray> brute_force_list(const InterleavedCode& code, const CodeArray& received, std::size_t radius,
                                        std::uint64_t budget = kDefaultBudget);

struct SamplingOptions {
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
};

struct PreservationReport {
    bool holds = true;
    bool exhaustive = false;
    std::uint64_t arrays_checked = 0;
    /// Largest list seen (ordinary check) or smallest 3-sum of column distances (strong check).
    std::uint64_t extremal_value = 0;
    std::optional<CodeArray> witness;
    std::vector<CodeArray> witness_codewords;
    /// Strong check only: whether the radius bound and constituent conditions were met.
    bool preconditions_met = true;
    std::vector<std::string> precondition_failures;
};

/// Checks that the l-level interleaving of `base` is (radius, L)-list decodable.
/// Exhaustive over all q^(l n) arrays when that fits the budget, otherwise sampled: uniform
/// arrays, codewords with up to `radius` columns overwritten, and column mixes of L+1 codewords.
/// Throws InvalidParameters when q <= C(L+1, 2) or the base itself is not (radius, L)-list decodable.
PreservationReport check_preservation(const lincode::LinearCode& base, std::size_t radius, std::size_t list_size,
                                      std::size_t levels, const SamplingOptions& options = {});

/// Checks that every received array has summed column distance > 3 radius to any three distinct
/// codewords of the interleaving of `constituents`. The minimum over triples is the sum of the
/// three smallest distances, computed against the full array codebook.
///
/// Preconditions (radius <= (2d-1)/3 and each constituent strongly-(radius, 2)-list decodable) are
/// evaluated and reported rather than enforced, so callers can see both the precondition status and
/// the empirical outcome. Samples include embeddings of constituent-level witnesses.
PreservationReport check_strong_preservation(const std::vector<lincode::LinearCode>& constituents,
                                             const Rational& radius, const SamplingOptions& options = {});

}  // namespace vpec::interleave
