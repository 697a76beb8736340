#include "vpec/lincode.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace vpec::lincode {

namespace {

// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> reduce(const gf::Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const gf::Element scale = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const gf::Element factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Calls fn(positions, count) for every support of size <= radius, then expands values.
// Visits each word at distance <= radius from center exactly once.
template <typename Fn>
void for_each_in_ball(const Word& center, std::size_t radius, std::uint32_t q, Fn&& fn) {
    const std::size_t n = center.size();
    Word y = center;
    std::vector<std::size_t> pos;
    // Recursive over chosen positions in increasing order.
    auto rec = [&](auto&& self, std::size_t next) -> void {
        fn(static_cast<const Word&>(y));
        if (pos.size() == radius) return;
        for (std::size_t j = next; j < n; ++j) {
            pos.push_back(j);
            for (std::uint32_t shift = 1; shift < q; ++shift) {
                y[j] = (center[j] + shift) % q;
                self(self, j + 1);
            }
            y[j] = center[j];
            pos.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::size_t rank(const gf::Field& field, Matrix m) { return reduce(field, m).size(); }

std::optional<Matrix> invert(const gf::Field& field, const Matrix& m) {
    const std::size_t k = m.size();
    Matrix aug(k, Word(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i].size() != k) throw InvalidParameters("invert: matrix is not square");
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][k + i] = 1;
    }
    const auto pivots = reduce(field, aug);
    if (pivots.size() < k || pivots[k - 1] != k - 1) return std::nullopt;
    Matrix out(k, Word(k));
    for (std::size_t i = 0; i < k; ++i) std::copy(aug[i].begin() + k, aug[i].end(), out[i].begin());
    return out;
}

Matrix multiply(const gf::Field& field, const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    Matrix out(a.size(), Word(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw InvalidParameters("multiply: shape mismatch");
        for (std::size_t t = 0; t < inner; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] = field.add(out[i][j], field.mul(a[i][t], b[t][j]));
            }
        }
    }
    return out;
}

LinearCode::LinearCode(gf::Field field, Matrix generator) : field_(std::move(field)), generator_(std::move(generator)) {
    k_ = generator_.size();
    if (k_ == 0) throw InvalidParameters("generator must have at least one row");
    n_ = generator_[0].size();
    if (n_ == 0) throw InvalidParameters("code length must be positive");
    for (const auto& row : generator_) {
        if (row.size() != n_) throw InvalidParameters("generator rows have unequal length");
        for (auto x : row) {
            if (!field_.contains(x)) throw InvalidParameters("generator entry outside the field");
        }
    }
    reduced_ = generator_;
    info_set_ = reduce(field_, reduced_);
    if (info_set_.size() != k_) {
        throw InvalidParameters("generator has rank " + std::to_string(info_set_.size()) + " < k = " +
                                std::to_string(k_));
    }
}

Word LinearCode::encode(std::span<const Symbol> message) const {
    if (message.size() != k_) {
        throw InvalidParameters("message length " + std::to_string(message.size()) + " != k = " +
                                std::to_string(k_));
    }
    Word out(n_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        if (!field_.contains(message[i])) throw InvalidParameters("message symbol outside the field");
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            out[j] = field_.add(out[j], field_.mul(message[i], generator_[i][j]));
        }
    }
    return out;
}

bool LinearCode::contains(std::span<const Symbol> word) const {
    if (word.size() != n_) return false;
    for (std::size_t j = 0; j < n_; ++j) {
        Symbol expected = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            expected = field_.add(expected, field_.mul(word[info_set_[i]], reduced_[i][j]));
        }
        if (expected != word[j]) return false;
    }
    return true;
}

std::uint64_t LinearCode::codeword_count() const noexcept { return checked_pow(field_.order(), k_); }

LinearCode grs_build(const gf::Field& field, std::size_t n, std::size_t k, const GrsParams& params) {
    if (n > field.order()) throw InvalidParameters("GRS length exceeds field size");
    if (k == 0 || k > n) throw InvalidParameters("GRS dimension must satisfy 1 <= k <= n");
    if (params.points.size() != n || params.multipliers.size() != n) {
        throw InvalidParameters("GRS parameter vectors must have length n");
    }
    std::vector<gf::Element> sorted = params.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidParameters("GRS evaluation points must be distinct");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!field.contains(params.points[j]) || !field.contains(params.multipliers[j])) {
            throw InvalidParameters("GRS parameter outside the field");
        }
        if (params.multipliers[j] == 0) throw InvalidParameters("GRS column multipliers must be nonzero");
    }
    Matrix g(k, Word(n));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g[i][j] = field.mul(params.multipliers[j], field.pow(params.points[j], i));
        }
    }
    return LinearCode(field, std::move(g));
}

std::vector<Word> enumerate_codewords(const LinearCode& code, std::uint64_t budget) {
    const std::uint64_t count = code.codeword_count();
    require_budget("codeword enumeration", count, budget);
    std::vector<Word> out;
    out.reserve(count);
    const auto q = code.field().order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        out.push_back(code.encode(word_from_index(idx, q, code.dimension())));
    }
    return out;
}

std::size_t min_distance(const LinearCode& code, std::uint64_t budget) {
    const auto words = enumerate_codewords(code, budget);
    std::size_t best = code.length();
    for (std::size_t i = 1; i < words.size(); ++i) best = std::min(best, hamming_weight(words[i]));
    return best;
}

Matrix systematic_window_generator(const LinearCode& code, std::size_t start) {
    const std::size_t n = code.length(), k = code.dimension();
    if (start >= n) throw InvalidParameters("window start outside [0, n)");
    Matrix window(k, Word(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < k; ++r) window[i][r] = code.generator()[i][(start + r) % n];
    }
    auto inverse = invert(code.field(), window);
    if (!inverse) {
        throw InvalidParameters("columns " + std::to_string(start) + ".." + std::to_string((start + k - 1) % n) +
                                " are linearly dependent; code is not MDS");
    }
    return multiply(code.field(), *inverse, code.generator());
}

ListDecodingReport check_list_decodable(const LinearCode& code, std::size_t radius, std::size_t list_size,
                                        std::uint64_t budget) {
    const auto q = code.field().order();
    const std::size_t n = code.length();
    const std::uint64_t space = checked_pow(q, n);
    require_budget("received-word enumeration", space, budget);
    const auto words = enumerate_codewords(code, budget);

    ListDecodingReport report;
    report.received_words_checked = space;
    // counts[y] = |C ∩ B(y, radius)|, accumulated by scattering each codeword's ball.
    std::vector<std::uint16_t> counts(space, 0);
    for (const auto& c : words) {
        for_each_in_ball(c, radius, q, [&](const Word& y) {
            auto& slot = counts[index_of_word(y, q)];
            if (slot < UINT16_MAX) ++slot;
        });
    }
    const auto worst = std::max_element(counts.begin(), counts.end());
    report.extremal_value = *worst;
    if (*worst > list_size) {
        report.holds = false;
        Word y = word_from_index(static_cast<std::uint64_t>(worst - counts.begin()), q, n);
        for (const auto& c : words) {
            if (hamming_distance(c, y) <= radius) report.witness_codewords.push_back(c);
        }
        report.witness = std::move(y);
    }
    return report;
}

bool is_list_decodable(const LinearCode& code, std::size_t radius, std::size_t list_size, std::uint64_t budget) {
    return check_list_decodable(code, radius, list_size, budget).holds;
}

ListDecodingReport check_strongly_list_decodable(const LinearCode& code, const Rational& radius,
                                                 std::size_t list_size, std::uint64_t budget) {
    if (radius <= 0) throw InvalidParameters("strong list-decoding radius must be positive");
    if (list_size == 0) throw InvalidParameters("list size must be positive");
    const auto q = code.field().order();
    const std::size_t n = code.length(), k = code.dimension();
    require_budget("received-word enumeration", checked_pow(q, n), budget);
    const auto words = enumerate_codewords(code, budget);
    const Rational threshold = radius * static_cast<long>(list_size + 1);

    ListDecodingReport report;
    report.extremal_value = UINT64_MAX;
    if (words.size() < list_size + 1) return report;  // fewer than L+1 codewords: vacuous

    std::vector<bool> info(n, false);
    for (auto c : code.information_set()) info[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j) {
        if (!info[j]) free_cols.push_back(j);
    }
    const std::uint64_t cosets = checked_pow(q, n - k);
    std::vector<std::size_t> dist(words.size());
    for (std::uint64_t idx = 0; idx < cosets; ++idx) {
        const Word free_part = word_from_index(idx, q, free_cols.size());
        Word y(n, 0);
        for (std::size_t t = 0; t < free_cols.size(); ++t) y[free_cols[t]] = free_part[t];
        for (std::size_t i = 0; i < words.size(); ++i) dist[i] = hamming_distance(words[i], y);
        std::vector<std::size_t> order(words.size());
        std::iota(order.begin(), order.end(), 0);
        std::partial_sort(order.begin(), order.begin() + static_cast<long>(list_size + 1), order.end(),
                          [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        std::uint64_t sum = 0;
        for (std::size_t t = 0; t <= list_size; ++t) sum += dist[order[t]];
        ++report.received_words_checked;
        if (sum < report.extremal_value) report.extremal_value = sum;
        if (Rational(sum) <= threshold && report.holds) {
            report.holds = false;
            report.witness = y;
            for (std::size_t t = 0; t <= list_size; ++t) report.witness_codewords.push_back(words[order[t]]);
        }
    }
    return report;
}

bool is_strongly_list_decodable(const LinearCode& code, const Rational& radius, std::size_t list_size,
                                std::uint64_t budget) {
    return check_strongly_list_decodable(code, radius, list_size, budget).holds;
}

Rational l_mds_radius(std::size_t n, std::size_t k, std::size_t list_size) {
    return Rational(BigInt(list_size * (n - k)), BigInt(list_size + 1));
}

void require_l_mds_preconditions(const LinearCode& code, std::size_t list_size) {
    const std::size_t n = code.length(), k = code.dimension();
    const std::uint64_t q = code.field().order();
    if (k >= n) throw InvalidParameters("L-MDS requires k < n");
    if (list_size < 1) throw InvalidParameters("L-MDS requires L >= 1");
    if (list_size > q - 1) {
        throw InvalidParameters("L = " + std::to_string(list_size) + " exceeds q - 1 = " + std::to_string(q - 1));
    }
    const std::uint64_t binom = checked_binomial(n - 1, k - 1);
    if (list_size > binom) {
        throw InvalidParameters("L = " + std::to_string(list_size) + " exceeds C(n-1, k-1) = " +
                                std::to_string(binom));
    }
}

bool is_l_mds(const LinearCode& code, std::size_t list_size, std::uint64_t budget) {
    require_l_mds_preconditions(code, list_size);
    return is_strongly_list_decodable(code, l_mds_radius(code.length(), code.dimension(), list_size), list_size,
                                      budget);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::optional<SearchResult> search_l_mds(const gf::Field& field, std::size_t n, std::size_t k,
                                         std::size_t list_size, std::uint64_t seed, std::uint64_t max_iters,
                                         std::uint64_t budget) {
    const std::uint32_t q = field.order();
    if (n > q) throw InvalidParameters("GRS length n = " + std::to_string(n) + " exceeds q = " + std::to_string(q));
    if (k == 0 || k >= n) throw InvalidParameters("search requires 1 <= k < n");
    if (list_size < 1 || list_size > q - 1 || list_size > checked_binomial(n - 1, k - 1)) {
        throw InvalidParameters("L = " + std::to_string(list_size) + " violates L <= min{q-1, C(n-1,k-1)}");
    }
    std::vector<gf::Element> all(q);
    std::iota(all.begin(), all.end(), 0);
    for (std::uint64_t iter = 0; iter < max_iters; ++iter) {
        std::mt19937_64 rng(derive_seed(seed, iter));
        GrsParams params;
        std::vector<gf::Element> pool = all;
        // Partial Fisher-Yates: first n entries become a uniform n-subset in random order.
        for (std::size_t i = 0; i < n; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, q - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        params.points.assign(pool.begin(), pool.begin() + static_cast<long>(n));
        std::uniform_int_distribution<gf::Element> nonzero(1, q - 1);
        for (std::size_t j = 0; j < n; ++j) params.multipliers.push_back(nonzero(rng));
        LinearCode code = grs_build(field, n, k, params);
        if (is_l_mds(code, list_size, budget)) return SearchResult{std::move(params), std::move(code), iter};
    }
    return std::nullopt;
}

}  // namespace vpec::lincode
