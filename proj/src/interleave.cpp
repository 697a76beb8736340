#include "vpec/interleave.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace vpec::interleave {

namespace {

using Mask = std::uint64_t;

Mask diff_mask(const Word& a, const Word& b) {
    Mask m = 0;
    for (std::size_t j = 0; j < a.size(); ++j) m |= static_cast<Mask>(a[j] != b[j]) << j;
    return m;
}

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

void require_shape(const InterleavedCode& code, const CodeArray& array) {
    if (array.size() != code.levels()) throw InvalidParameters("array has wrong number of rows");
    for (const auto& row : array) {
        if (row.size() != code.length()) throw InvalidParameters("array row has wrong length");
        for (auto s : row) {
            if (s >= code.alphabet()) throw InvalidParameters("array entry outside the field");
        }
    }
}

// masks[level][c] = columns where codeword c of that level differs from received row `level`.
std::vector<std::vector<Mask>> row_masks(const InterleavedCode& code, const CodeArray& received) {
    std::vector<std::vector<Mask>> masks(code.levels());
    for (std::size_t i = 0; i < code.levels(); ++i) {
        const auto& book = code.codebook(i);
        masks[i].reserve(book.size());
        for (const auto& c : book) masks[i].push_back(diff_mask(c, received[i]));
    }
    return masks;
}

// Calls fn(indices, mask) for every array codeword, level 0 most significant.
template <typename Fn>
void for_each_codeword(const std::vector<std::vector<Mask>>& masks, Fn&& fn) {
    const std::size_t levels = masks.size();
    std::vector<std::uint64_t> idx(levels, 0);
    std::vector<Mask> acc(levels + 1, 0);
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == levels) {
            fn(static_cast<const std::vector<std::uint64_t>&>(idx), acc[levels]);
            return;
        }
        for (std::uint64_t c = 0; c < masks[level].size(); ++c) {
            idx[level] = c;
            acc[level + 1] = acc[level] | masks[level][c];
            self(self, level + 1);
        }
    };
    rec(rec, 0);
}

CodeArray random_array(std::mt19937_64& rng, std::size_t levels, std::size_t n, std::uint32_t q) {
    std::uniform_int_distribution<Symbol> sym(0, q - 1);
    CodeArray a(levels, Word(n));
    for (auto& row : a) {
        for (auto& s : row) s = sym(rng);
    }
    return a;
}

CodeArray random_codeword(std::mt19937_64& rng, const InterleavedCode& code) {
    std::vector<std::uint64_t> idx(code.levels());
    for (std::size_t i = 0; i < code.levels(); ++i) {
        idx[i] = std::uniform_int_distribution<std::uint64_t>(0, code.codebook(i).size() - 1)(rng);
    }
    return code.assemble(idx);
}

// Sample kinds used by both preservation checks: uniform arrays, a codeword with up to `radius`
// columns overwritten, and arrays whose columns are drawn blockwise from `mix` random codewords.
CodeArray adversarial_sample(std::mt19937_64& rng, const InterleavedCode& code, std::size_t kind, std::size_t radius,
                             std::size_t mix) {
    const std::size_t n = code.length();
    const std::size_t levels = code.levels();
    const std::uint32_t q = code.alphabet();
    switch (kind % 3) {
    case 0:
        return random_array(rng, levels, n, q);
    case 1: {
        CodeArray a = random_codeword(rng, code);
        std::vector<std::size_t> cols(n);
        for (std::size_t j = 0; j < n; ++j) cols[j] = j;
        std::shuffle(cols.begin(), cols.end(), rng);
        const std::size_t t = std::uniform_int_distribution<std::size_t>(0, std::min(radius, n))(rng);
        const CodeArray noise = random_array(rng, levels, n, q);
        for (std::size_t c = 0; c < t; ++c) {
            for (std::size_t i = 0; i < levels; ++i) a[i][cols[c]] = noise[i][cols[c]];
        }
        return a;
    }
    default: {
        std::vector<CodeArray> sources;
        for (std::size_t m = 0; m < mix; ++m) sources.push_back(random_codeword(rng, code));
        std::vector<std::size_t> cols(n);
        for (std::size_t j = 0; j < n; ++j) cols[j] = j;
        std::shuffle(cols.begin(), cols.end(), rng);
        CodeArray a(levels, Word(n));
        for (std::size_t c = 0; c < n; ++c) {
            const auto& src = sources[c * mix / n];
            for (std::size_t i = 0; i < levels; ++i) a[i][cols[c]] = src[i][cols[c]];
        }
        return a;
    }
    }
}

}  // namespace

std::size_t column_distance(const CodeArray& a, const CodeArray& b) {
    if (a.size() != b.size()) throw InvalidParameters("column_distance: row count mismatch");
    if (a.empty()) return 0;
    const std::size_t n = a[0].size();
    std::size_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        bool differs = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].size() != n || b[i].size() != n) throw InvalidParameters("column_distance: shape mismatch");
            differs |= a[i][j] != b[i][j];
        }
        d += differs;
    }
    return d;
}

InterleavedCode::InterleavedCode(const lincode::LinearCode& base, std::size_t levels, std::uint64_t budget) {
    if (levels == 0) throw InvalidParameters("interleaving needs at least one level");
    if (base.length() > 64) throw InvalidParameters("interleaved codes support length <= 64");
    auto book = std::make_shared<const std::vector<Word>>(lincode::enumerate_codewords(base, budget));
    constituents_.assign(levels, base);
    codebooks_.assign(levels, book);
    n_ = base.length();
}

InterleavedCode::InterleavedCode(std::vector<lincode::LinearCode> constituents, std::uint64_t budget)
    : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw InvalidParameters("interleaving needs at least one level");
    n_ = constituents_.front().length();
    if (n_ > 64) throw InvalidParameters("interleaved codes support length <= 64");
    for (const auto& c : constituents_) {
        if (c.length() != n_) throw InvalidParameters("constituent codes must share a length");
        if (!(c.field() == constituents_.front().field())) throw InvalidParameters("constituents must share a field");
        codebooks_.push_back(std::make_shared<const std::vector<Word>>(lincode::enumerate_codewords(c, budget)));
    }
}

std::uint64_t InterleavedCode::size() const noexcept {
    std::uint64_t total = 1;
    for (const auto& book : codebooks_) {
        const std::uint64_t s = book->size();
        if (total > UINT64_MAX / s) return UINT64_MAX;
        total *= s;
    }
    return total;
}

bool InterleavedCode::contains(const CodeArray& array) const {
    if (array.size() != levels()) return false;
    for (std::size_t i = 0; i < levels(); ++i) {
        if (array[i].size() != n_ || !constituents_[i].contains(array[i])) return false;
    }
    return true;
}

CodeArray InterleavedCode::assemble(const std::vector<std::uint64_t>& row_indices) const {
    CodeArray a;
    a.reserve(levels());
    for (std::size_t i = 0; i < levels(); ++i) a.push_back(codebooks_[i]->at(row_indices.at(i)));
    return a;
}

std::vector<CodeArray> iterative_list_decode(const InterleavedCode& code, const CodeArray& received,
                                             std::size_t radius, std::size_t list_size) {
    if (list_size == 0) throw InvalidParameters("list size must be positive");
    if (code.alphabet() <= checked_binomial(list_size + 1, 2)) {
        throw InvalidParameters("iterative list decoding requires q > C(L+1, 2)");
    }
    require_shape(code, received);

    struct Partial {
        Mask mask;
        std::vector<std::uint64_t> rows;
    };
    std::vector<Partial> survivors{{0, {}}};
    for (std::size_t level = 0; level < code.levels() && !survivors.empty(); ++level) {
        const auto& book = code.codebook(level);
        // Row list: codewords within the radius of this received row.
        std::vector<std::pair<std::uint64_t, Mask>> row_list;
        for (std::uint64_t c = 0; c < book.size(); ++c) {
            const Mask m = diff_mask(book[c], received[level]);
            if (popcount(m) <= radius) row_list.emplace_back(c, m);
        }
        std::vector<Partial> next;
        for (const auto& s : survivors) {
            for (const auto& [c, m] : row_list) {
                const Mask joined = s.mask | m;
                if (popcount(joined) > radius) continue;
                Partial p{joined, s.rows};
                p.rows.push_back(c);
                next.push_back(std::move(p));
            }
        }
        survivors = std::move(next);
    }

    std::vector<CodeArray> out;
    out.reserve(survivors.size());
    for (const auto& s : survivors) out.push_back(code.assemble(s.rows));
    return out;
}

std::vector<CodeArray> brute_force_list(const InterleavedCode& code, const CodeArray& received, std::size_t radius,
                                        std::uint64_t budget) {
    require_shape(code, received);
    require_budget("brute-force array list", code.size(), budget);
    std::vector<CodeArray> out;
    for_each_codeword(row_masks(code, received), [&](const std::vector<std::uint64_t>& idx, Mask m) {
        if (popcount(m) <= radius) out.push_back(code.assemble(idx));
    });
    return out;
}

PreservationReport check_preservation(const lincode::LinearCode& base, std::size_t radius, std::size_t list_size,
                                      std::size_t levels, const SamplingOptions& options) {
    const std::uint32_t q = base.field().order();
    if (q <= checked_binomial(list_size + 1, 2)) {
        throw InvalidParameters("preservation requires q > C(L+1, 2)");
    }
    if (!lincode::is_list_decodable(base, radius, list_size, options.budget)) {
        throw InvalidParameters("base code is not (radius, L)-list decodable");
    }
    const InterleavedCode code(base, levels, options.budget);
    const std::size_t n = base.length();
    PreservationReport report;

    const std::uint64_t space = checked_pow(q, levels * n);
    if (space <= options.budget) {
        // Scatter the column ball of every array codeword into per-array counters.
        report.exhaustive = true;
        report.arrays_checked = space;
        const std::uint64_t column_values = checked_pow(q, levels);
        std::vector<std::uint8_t> counts(space, 0);
        std::optional<std::uint64_t> bad;
        // Masks against the zero array are unused; this only walks the codeword tuples.
        const auto walk = row_masks(code, CodeArray(levels, Word(n, 0)));
        for_each_codeword(walk, [&](const std::vector<std::uint64_t>& idx, Mask) {
            if (bad) return;
            const CodeArray center = code.assemble(idx);
            CodeArray y = center;
            auto index_of = [&] {
                std::uint64_t v = 0;
                for (const auto& row : y) {
                    for (auto s : row) v = v * q + s;
                }
                return v;
            };
            auto rec = [&](auto&& self, std::size_t next, std::size_t used) -> void {
                if (bad) return;
                const std::uint64_t at = index_of();
                if (counts[at] < 255) ++counts[at];
                report.extremal_value = std::max<std::uint64_t>(report.extremal_value, counts[at]);
                if (counts[at] > list_size) {
                    bad = at;
                    return;
                }
                if (used == radius) return;
                for (std::size_t j = next; j < n; ++j) {
                    for (std::uint64_t shift = 1; shift < column_values; ++shift) {
                        // Column value = original column + shift, digitwise in base q.
                        std::uint64_t carry = shift;
                        for (std::size_t i = levels; i-- > 0;) {
                            y[i][j] = static_cast<Symbol>((center[i][j] + carry) % q);
                            carry /= q;
                        }
                        self(self, j + 1, used + 1);
                        if (bad) return;
                    }
                    for (std::size_t i = 0; i < levels; ++i) y[i][j] = center[i][j];
                }
            };
            rec(rec, 0, 0);
        });
        if (bad) {
            report.holds = false;
            const Word flat = word_from_index(*bad, q, levels * n);
            CodeArray y(levels);
            for (std::size_t i = 0; i < levels; ++i) y[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
            report.witness_codewords = brute_force_list(code, y, radius, options.budget);
            report.witness = std::move(y);
        }
        return report;
    }

    const bool brute = code.size() <= 100'000;
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        std::mt19937_64 rng(lincode::derive_seed(options.seed, s));
        const CodeArray y = adversarial_sample(rng, code, s, radius, list_size + 1);
        const auto list = brute ? brute_force_list(code, y, radius, options.budget)
                                : iterative_list_decode(code, y, radius, list_size);
        ++report.arrays_checked;
        report.extremal_value = std::max<std::uint64_t>(report.extremal_value, list.size());
        if (list.size() > list_size) {
            report.holds = false;
            report.witness = y;
            report.witness_codewords = list;
            break;
        }
    }
    return report;
}

PreservationReport check_strong_preservation(const std::vector<lincode::LinearCode>& constituents,
                                             const Rational& radius, const SamplingOptions& options) {
    if (radius <= 0) throw InvalidParameters("strong preservation needs a positive radius");
    const InterleavedCode code(constituents, options.budget);
    const std::size_t levels = code.levels();
    const std::size_t n = code.length();
    const std::uint32_t q = code.alphabet();
    PreservationReport report;
    report.extremal_value = UINT64_MAX;

    std::size_t d = n;
    for (const auto& c : constituents) d = std::min(d, lincode::min_distance(c, options.budget));
    if (radius > Rational(2 * static_cast<long>(d) - 1, 3)) {
        report.preconditions_met = false;
        report.precondition_failures.push_back("radius " + to_exact(radius) + " exceeds (2d-1)/3 = " +
                                               to_exact(Rational(2 * static_cast<long>(d) - 1, 3)));
    }
    std::vector<Word> constituent_witnesses(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        try {
            const auto r = lincode::check_strongly_list_decodable(constituents[i], radius, 2, options.budget);
            if (!r.holds) {
                report.preconditions_met = false;
                report.precondition_failures.push_back("constituent " + std::to_string(i) +
                                                       " is not strongly-(radius, 2)-list decodable");
                constituent_witnesses[i] = *r.witness;
            }
        } catch (const BudgetExceeded&) {
            report.preconditions_met = false;
            report.precondition_failures.push_back("constituent " + std::to_string(i) + " could not be verified");
        }
    }
    if (code.size() < 3) return report;

    const Rational limit = radius * 3;
    auto examine = [&](const CodeArray& y) {
        ++report.arrays_checked;
        std::uint64_t best[3] = {UINT64_MAX, UINT64_MAX, UINT64_MAX};
        std::vector<std::uint64_t> best_idx[3];
        for_each_codeword(row_masks(code, y), [&](const std::vector<std::uint64_t>& idx, Mask m) {
            const std::uint64_t dist = popcount(m);
            if (dist >= best[2]) return;
            std::size_t slot = 2;
            while (slot > 0 && best[slot - 1] > dist) {
                best[slot] = best[slot - 1];
                best_idx[slot] = best_idx[slot - 1];
                --slot;
            }
            best[slot] = dist;
            best_idx[slot] = idx;
        });
        const std::uint64_t sum = best[0] + best[1] + best[2];
        report.extremal_value = std::min(report.extremal_value, sum);
        if (report.holds && Rational(sum) <= limit) {
            report.holds = false;
            report.witness = y;
            for (const auto& idx : best_idx) report.witness_codewords.push_back(code.assemble(idx));
        }
    };

    const std::uint64_t space = checked_pow(q, levels * n);
    if (space <= options.budget) {
        // The column distance profile of y equals that of y - c for any codeword c, so one
        // representative per coset suffices: rows vanishing on each constituent's information set.
        report.exhaustive = true;
        std::vector<std::vector<Word>> reps(levels);
        for (std::size_t i = 0; i < levels; ++i) {
            const auto& info = constituents[i].information_set();
            std::vector<std::size_t> free_cols;
            for (std::size_t j = 0; j < n; ++j) {
                if (std::find(info.begin(), info.end(), j) == info.end()) free_cols.push_back(j);
            }
            const std::uint64_t count = checked_pow(q, free_cols.size());
            for (std::uint64_t v = 0; v < count; ++v) {
                const Word digits = word_from_index(v, q, free_cols.size());
                Word w(n, 0);
                for (std::size_t t = 0; t < free_cols.size(); ++t) w[free_cols[t]] = digits[t];
                reps[i].push_back(std::move(w));
            }
        }
        CodeArray y(levels);
        auto rec = [&](auto&& self, std::size_t level) -> void {
            if (!report.holds) return;
            if (level == levels) {
                examine(y);
                return;
            }
            for (const auto& r : reps[level]) {
                y[level] = r;
                self(self, level + 1);
            }
        };
        rec(rec, 0);
        return report;
    }

    // Constituent witnesses embedded in an otherwise zero array come first.
    for (std::size_t i = 0; i < levels && report.holds; ++i) {
        if (constituent_witnesses[i].empty()) continue;
        CodeArray y(levels, Word(n, 0));
        y[i] = constituent_witnesses[i];
        examine(y);
    }
    for (std::uint64_t s = 0; s < options.samples && report.holds; ++s) {
        std::mt19937_64 rng(lincode::derive_seed(options.seed, s));
        const std::size_t reach = static_cast<std::size_t>(floor_of(radius)) + 1;
        examine(adversarial_sample(rng, code, s, reach, 3));
    }
    return report;
}

}  // namespace vpec::interleave
