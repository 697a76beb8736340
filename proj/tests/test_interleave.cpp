#include "doctest.h"

#include "vpec/interleave.hpp"

#include <algorithm>
#include <random>

using namespace vpec;
using namespace vpec::interleave;
using vpec::lincode::LinearCode;

namespace {

LinearCode witness_code() {
    return lincode::grs_build(gf::Field::of_order(7), 5, 2, {{3, 6, 1, 5, 4}, {2, 3, 5, 2, 1}});
}

CodeArray random_array(std::mt19937& rng, std::size_t rows, std::size_t n, std::uint32_t q) {
    std::uniform_int_distribution<Symbol> sym(0, q - 1);
    CodeArray a(rows, Word(n));
    for (auto& r : a) {
        for (auto& s : r) s = sym(rng);
    }
    return a;
}

// Literal triple enumeration over all array codewords.
bool triples_ok(const InterleavedCode& code, const CodeArray& y, const Rational& tau) {
    std::vector<CodeArray> all;
    std::vector<std::uint64_t> idx(code.levels(), 0);
    while (true) {
        all.push_back(code.assemble(idx));
        std::size_t i = code.levels();
        while (i-- > 0) {
            if (++idx[i] < code.codebook(i).size()) break;
            idx[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            for (std::size_t c = b + 1; c < all.size(); ++c) {
                const auto sum = column_distance(y, all[a]) + column_distance(y, all[b]) + column_distance(y, all[c]);
                if (Rational(sum) <= tau * 3) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("column distance") {
    const CodeArray a{{1, 2, 3}, {4, 5, 6}};
    CHECK(column_distance(a, a) == 0);
    CodeArray b = a;
    b[1][2] = 0;
    CHECK(column_distance(a, b) == 1);
    b = a;
    b[0][0] = 0;
    b[1][0] = 0;
    CHECK(column_distance(a, b) == 1);
    b[1][1] = 9;
    CHECK(column_distance(a, b) == 2);
    CHECK_THROWS_AS(column_distance(a, CodeArray{{1, 2, 3}}), InvalidParameters);
    CHECK_THROWS_AS(column_distance(a, CodeArray{{1, 2}, {4, 5}}), InvalidParameters);
}

TEST_CASE("interleaved code basics") {
    const InterleavedCode code(witness_code(), 2);
    CHECK(code.levels() == 2);
    CHECK(code.size() == 2401);
    const CodeArray c = code.assemble({5, 17});
    CHECK(code.contains(c));
    CodeArray broken = c;
    broken[1][0] = (broken[1][0] + 1) % 7;
    CHECK_FALSE(code.contains(broken));
    CHECK_THROWS_AS(InterleavedCode(std::vector<LinearCode>{}), InvalidParameters);
    CHECK_THROWS_AS(InterleavedCode(std::vector<LinearCode>{witness_code(),
                                                             LinearCode(gf::Field::of_order(7), Matrix{{1, 1, 1}})}),
                    InvalidParameters);
}

TEST_CASE("iterative decoding matches brute force") {
    const InterleavedCode code(witness_code(), 2);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        CodeArray y;
        if (trial % 2 == 0) {
            y = random_array(rng, 2, 5, 7);
        } else {
            y = code.assemble({rng() % 49, rng() % 49});
            for (int k = 0; k < 2; ++k) {
                const auto col = rng() % 5;
                y[0][col] = rng() % 7;
                y[1][col] = rng() % 7;
            }
        }
        for (std::size_t tau = 0; tau <= 2; ++tau) {
            const auto fast = iterative_list_decode(code, y, tau, 2);
            const auto slow = brute_force_list(code, y, tau);
            CHECK(fast == slow);
            CHECK(fast.size() <= 2);
            // Canonical order: lexicographic in the row messages.
            std::vector<std::vector<std::size_t>> msgs;
            for (const auto& a : fast) {
                std::vector<std::size_t> m;
                for (std::size_t i = 0; i < 2; ++i) {
                    const auto& book = code.codebook(i);
                    m.push_back(std::find(book.begin(), book.end(), a[i]) - book.begin());
                }
                msgs.push_back(m);
            }
            CHECK(std::is_sorted(msgs.begin(), msgs.end()));
        }
    }
}

TEST_CASE("codeword with two replaced columns is recovered") {
    const InterleavedCode code(witness_code(), 2);
    const CodeArray original = code.assemble({12, 40});
    CodeArray y = original;
    y[0][1] = (y[0][1] + 3) % 7;
    y[1][1] = (y[1][1] + 1) % 7;
    y[1][4] = (y[1][4] + 5) % 7;
    const auto list = iterative_list_decode(code, y, 2, 2);
    CHECK(std::find(list.begin(), list.end(), original) != list.end());
    CHECK(list.size() <= 2);
    // A codeword is in its own list at radius zero, alone.
    CHECK(iterative_list_decode(code, original, 0, 2) == std::vector<CodeArray>{original});
}

TEST_CASE("binary repetition counterexample") {
    const LinearCode rep(gf::Field::of_order(2), Matrix{{1, 1}});
    const InterleavedCode code(rep, 2);
    const CodeArray y{{0, 1}, {0, 1}};
    CHECK_THROWS_AS(iterative_list_decode(code, y, 2, 2), InvalidParameters);
    CHECK(brute_force_list(code, y, 2).size() == 4);
    // Every array is within column distance 2 of all four codewords.
    std::mt19937 rng(1);
    for (int i = 0; i < 10; ++i) CHECK(brute_force_list(code, random_array(rng, 2, 2, 2), 2).size() == 4);
}

TEST_CASE("preservation check") {
    SamplingOptions opts;
    opts.samples = 300;
    const auto report = check_preservation(witness_code(), 2, 2, 2, opts);
    CHECK(report.holds);
    CHECK_FALSE(report.exhaustive);
    CHECK(report.arrays_checked == 300);
    CHECK(report.extremal_value <= 2);

    CHECK(check_preservation(witness_code(), 0, 1, 2, opts).holds);
    const LinearCode small(gf::Field::of_order(3), Matrix{{1, 1, 1}});
    CHECK_THROWS_AS(check_preservation(small, 1, 2, 2), InvalidParameters);
    // Base not (3, 2)-list decodable.
    CHECK_THROWS_AS(check_preservation(witness_code(), 3, 2, 2), InvalidParameters);
}

TEST_CASE("exhaustive preservation agrees with a full scan") {
    const auto f4 = gf::Field::of_order(4);
    const auto base = lincode::grs_build(f4, 4, 2, {{0, 1, 2, 3}, {1, 1, 1, 1}});
    const auto report = check_preservation(base, 1, 1, 2);
    CHECK(report.exhaustive);
    CHECK(report.holds);
    CHECK(report.arrays_checked == 65536);

    const InterleavedCode code(base, 2);
    std::size_t oracle = 0;
    for (std::uint64_t v = 0; v < 65536; ++v) {
        const Word flat = word_from_index(v, 4, 8);
        const CodeArray y{Word(flat.begin(), flat.begin() + 4), Word(flat.begin() + 4, flat.end())};
        oracle = std::max(oracle, brute_force_list(code, y, 1).size());
    }
    CHECK(report.extremal_value == oracle);
}

TEST_CASE("strong preservation") {
    const auto base = witness_code();
    SamplingOptions opts;
    opts.samples = 200;

    const auto at_bound = check_strong_preservation({base, base}, 2, opts);
    CHECK(at_bound.preconditions_met);
    CHECK(at_bound.holds);
    CHECK(at_bound.extremal_value > 6);

    const auto above = check_strong_preservation({base, base}, Rational(7, 3), opts);
    CHECK_FALSE(above.preconditions_met);
    CHECK_FALSE(above.holds);
    REQUIRE(above.witness.has_value());
    REQUIRE(above.witness_codewords.size() == 3);
    std::size_t sum = 0;
    for (const auto& c : above.witness_codewords) sum += column_distance(*above.witness, c);
    CHECK(sum <= 7);

    CHECK(check_strong_preservation({base, base}, Rational(1, 3), opts).holds);
}

TEST_CASE("single level strong preservation reduces to the code itself") {
    std::mt19937 rng(4);
    const auto f5 = gf::Field::of_order(5);
    const auto code = lincode::grs_build(f5, 4, 2, {{0, 2, 3, 4}, {1, 4, 2, 3}});
    for (long num = 1; num <= 6; ++num) {
        const Rational tau(num, 3);
        const auto r = check_strong_preservation({code}, tau);
        CHECK(r.exhaustive);
        CHECK(r.holds == lincode::is_strongly_list_decodable(code, tau, 2));
    }
}

TEST_CASE("exhaustive strong preservation against literal triples") {
    const LinearCode rep(gf::Field::of_order(3), Matrix{{1, 1, 1}});
    const InterleavedCode code(rep, 2);
    for (long num = 1; num <= 4; ++num) {
        const Rational tau(num, 3);
        bool oracle = true;
        for (std::uint64_t v = 0; v < 729 && oracle; ++v) {
            const Word flat = word_from_index(v, 3, 6);
            oracle = triples_ok(code, {Word(flat.begin(), flat.begin() + 3), Word(flat.begin() + 3, flat.end())}, tau);
        }
        const auto r = check_strong_preservation({rep, rep}, tau);
        CAPTURE(num);
        CHECK(r.exhaustive);
        CHECK(r.holds == oracle);
    }
}
