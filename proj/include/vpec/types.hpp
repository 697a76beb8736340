#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vpec {

/// A source or channel symbol. Over GF(q) this is the field element index.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
/// Row-major dense matrix.
using Matrix = std::vector<Word>;

inline std::size_t hamming_distance(const Word& a, const Word& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline std::size_t hamming_weight(const Word& a) {
    std::size_t w = 0;
    for (auto s : a) w += s != 0;
    return w;
}

/// Digits of `index` in base `q`, most significant first, so index order is lexicographic order.
inline Word word_from_index(std::uint64_t index, std::uint32_t q, std::size_t length) {
    Word w(length);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
    return w;
}

inline std::uint64_t index_of_word(const Word& w, std::uint32_t q) {
    std::uint64_t index = 0;
    for (auto s : w) index = index * q + s;
    return index;
}

}  // namespace vpec
