#include "doctest.h"

#include "vpec/lincode.hpp"

#include <algorithm>
#include <random>

using namespace vpec;
using namespace vpec::lincode;

namespace {

LinearCode repetition(const gf::Field& f, std::size_t n) { return LinearCode(f, Matrix{Word(n, 1)}); }

GrsParams golden_witness() { return {{3, 6, 1, 5, 4}, {2, 3, 5, 2, 1}}; }

GrsParams random_grs(std::mt19937& rng, std::uint32_t q, std::size_t n) {
    std::vector<gf::Element> pts(q);
    for (std::uint32_t i = 0; i < q; ++i) pts[i] = i;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(n);
    std::uniform_int_distribution<gf::Element> nz(1, q - 1);
    std::vector<gf::Element> mult(n);
    for (auto& m : mult) m = nz(rng);
    return {pts, mult};
}

// Definition-level oracle: every y, every (L+1)-subset of codewords.
bool strong_oracle(const LinearCode& code, const Rational& tau, std::size_t L) {
    const auto words = enumerate_codewords(code);
    const auto q = code.field().order();
    const std::uint64_t space = checked_pow(q, code.length());
    std::vector<std::size_t> pick(L + 1);
    for (std::uint64_t yi = 0; yi < space; ++yi) {
        const Word y = word_from_index(yi, q, code.length());
        std::vector<std::size_t> d(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) d[i] = hamming_distance(words[i], y);
        // Enumerate combinations of size L+1.
        for (std::size_t i = 0; i <= L; ++i) pick[i] = i;
        while (true) {
            std::size_t sum = 0;
            for (auto p : pick) sum += d[p];
            if (Rational(sum) <= tau * static_cast<long>(L + 1)) return false;
            std::size_t i = L + 1;
            while (i-- > 0 && pick[i] == words.size() - (L + 1) + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++pick[i];
            for (std::size_t j = i + 1; j <= L; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

bool list_oracle(const LinearCode& code, std::size_t tau, std::size_t L) {
    const auto words = enumerate_codewords(code);
    const auto q = code.field().order();
    for (std::uint64_t yi = 0; yi < checked_pow(q, code.length()); ++yi) {
        const Word y = word_from_index(yi, q, code.length());
        std::size_t count = 0;
        for (const auto& c : words) count += hamming_distance(c, y) <= tau;
        if (count > L) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("GRS construction over GF(7)") {
    const auto f = gf::Field::of_order(7);
    const auto code = grs_build(f, 5, 2, {{0, 1, 2, 3, 4}, {1, 1, 1, 1, 1}});
    CHECK(code.generator() == Matrix{{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}});
    CHECK(min_distance(code) == 4);
    CHECK(code.codeword_count() == 49);
    CHECK(enumerate_codewords(code).size() == 49);
    CHECK(code.encode(Word{1, 1}) == Word{1, 2, 3, 4, 5});
    CHECK(code.encode(Word{0, 0}) == Word(5, 0));
    CHECK(code.encode(Word{0, 1}) == code.generator()[1]);
    CHECK_THROWS_AS(code.encode(Word{1}), InvalidParameters);
    CHECK_THROWS_AS(grs_build(f, 5, 2, {{0, 1, 2, 3, 3}, {1, 1, 1, 1, 1}}), InvalidParameters);
    CHECK_THROWS_AS(grs_build(f, 5, 2, {{0, 1, 2, 3, 4}, {1, 0, 1, 1, 1}}), InvalidParameters);
    CHECK_THROWS_AS(grs_build(f, 8, 2, {{}, {}}), InvalidParameters);
}

TEST_CASE("minimum distance of small codes") {
    const auto f2 = gf::Field::of_order(2);
    CHECK(min_distance(repetition(f2, 4)) == 4);
    CHECK(min_distance(repetition(gf::Field::of_order(5), 3)) == 3);
    // [3,2] parity code: codewords 000, 011, 101, 110 -> minimum weight 2.
    const LinearCode parity(f2, Matrix{{1, 0, 1}, {0, 1, 1}});
    const auto words = enumerate_codewords(parity);
    REQUIRE(words.size() == 4);
    std::size_t oracle = 3;
    for (const auto& w : words) {
        if (hamming_weight(w) > 0) oracle = std::min(oracle, hamming_weight(w));
    }
    CHECK(oracle == 2);
    CHECK(min_distance(parity) == oracle);
    CHECK_THROWS_AS(min_distance(repetition(f2, 4), 1), BudgetExceeded);
}

TEST_CASE("rank deficient generators are rejected") {
    const auto f = gf::Field::of_order(3);
    CHECK_THROWS_AS(LinearCode(f, Matrix{{1, 2, 0}, {2, 1, 0}}), InvalidParameters);
    CHECK_THROWS_AS(LinearCode(f, Matrix{{1, 3, 0}}), InvalidParameters);
}

TEST_CASE("membership") {
    const auto f = gf::Field::of_order(7);
    const auto code = grs_build(f, 5, 2, golden_witness());
    for (const auto& c : enumerate_codewords(code)) CHECK(code.contains(c));
    Word bad = code.encode(Word{3, 4});
    bad[2] = f.add(bad[2], 1);
    CHECK_FALSE(code.contains(bad));
}

TEST_CASE("systematic window generators") {
    const auto f = gf::Field::of_order(7);
    const auto code = grs_build(f, 5, 2, golden_witness());
    for (std::size_t start = 0; start < 5; ++start) {
        CAPTURE(start);
        const Matrix g = systematic_window_generator(code, start);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) CHECK(g[r][(start + c) % 5] == (r == c ? 1u : 0u));
        }
        // Same row space: stacking does not increase the rank.
        Matrix stacked = code.generator();
        stacked.insert(stacked.end(), g.begin(), g.end());
        CHECK(rank(f, stacked) == 2);
        // Unit message e_r carries a 1 at window column r.
        const LinearCode li(f, g);
        CHECK(li.encode(Word{0, 1})[(start + 1) % 5] == 1);
    }
    // Wrap: start at the last column -> identity in columns 4 and 0.
    const Matrix wrap = systematic_window_generator(code, 4);
    CHECK(wrap[0][4] == 1);
    CHECK(wrap[0][0] == 0);
    CHECK(wrap[1][0] == 1);

    const LinearCode not_mds(f, Matrix{{1, 0, 1, 1}, {0, 1, 1, 0}});
    CHECK_THROWS_AS(systematic_window_generator(not_mds, 3), InvalidParameters);
}

TEST_CASE("ordinary list decodability") {
    const auto f3 = gf::Field::of_order(3);
    CHECK(is_list_decodable(repetition(f3, 4), 4, 3));
    CHECK_FALSE(is_list_decodable(repetition(f3, 4), 4, 2));
    const auto f7 = gf::Field::of_order(7);
    const auto witness = grs_build(f7, 5, 2, golden_witness());
    CHECK(is_list_decodable(witness, 0, 1));
    CHECK(is_list_decodable(witness, 2, 2));
    const auto report = check_list_decodable(witness, 3, 2);
    CHECK_FALSE(report.holds);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness_codewords.size() > 2);
    for (const auto& c : report.witness_codewords) CHECK(hamming_distance(c, *report.witness) <= 3);

    std::mt19937 rng(11);
    const auto f4 = gf::Field::of_order(4);
    for (int trial = 0; trial < 6; ++trial) {
        const auto code = grs_build(f4, 4, 2, random_grs(rng, 4, 4));
        for (std::size_t tau = 0; tau <= 3; ++tau) {
            for (std::size_t L = 1; L <= 3; ++L) CHECK(is_list_decodable(code, tau, L) == list_oracle(code, tau, L));
        }
    }
}

TEST_CASE("strong list decodability against the subset oracle") {
    std::mt19937 rng(5);
    const auto f5 = gf::Field::of_order(5);
    for (int trial = 0; trial < 3; ++trial) {
        const auto code = grs_build(f5, 4, 2, random_grs(rng, 5, 4));
        for (long num = 1; num <= 6; ++num) {
            const Rational tau(num, 3);
            CAPTURE(num);
            CHECK(is_strongly_list_decodable(code, tau, 2) == strong_oracle(code, tau, 2));
        }
    }
    const LinearCode parity(gf::Field::of_order(2), Matrix{{1, 0, 1}, {0, 1, 1}});
    for (long num = 1; num <= 4; ++num) {
        CHECK(is_strongly_list_decodable(parity, Rational(num, 2), 1) == strong_oracle(parity, Rational(num, 2), 1));
    }
}

TEST_CASE("strong implies ordinary at the floor radius") {
    std::mt19937 rng(3);
    for (std::uint32_t q : {4u, 5u, 7u}) {
        const auto f = gf::Field::of_order(q);
        const auto code = grs_build(f, 4, 2, random_grs(rng, q, 4));
        for (std::size_t L = 1; L <= 3; ++L) {
            for (long num = 1; num <= static_cast<long>(4 * (L + 1)); ++num) {
                const Rational tau(num, static_cast<long>(L + 1));
                if (is_strongly_list_decodable(code, tau, L)) {
                    CHECK(is_list_decodable(code, static_cast<std::size_t>(floor_of(tau)), L));
                }
            }
        }
    }
}

TEST_CASE("no linear code beats the strong list-decoding bound") {
    std::mt19937 rng(17);
    for (std::uint32_t q : {4u, 5u, 7u}) {
        const auto f = gf::Field::of_order(q);
        for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 2}, {5, 2}, {4, 3}}) {
            if (n > q) continue;
            const auto code = grs_build(f, n, k, random_grs(rng, q, n));
            for (std::size_t L = 1; L <= std::min<std::size_t>(q - 1, checked_binomial(n - 1, k - 1)); ++L) {
                const Rational above = l_mds_radius(n, k, L) + Rational(1, static_cast<long>(L + 1));
                CHECK_FALSE(is_strongly_list_decodable(code, above, L));
            }
        }
    }
}

TEST_CASE("L-MDS verification") {
    const auto f7 = gf::Field::of_order(7);
    CHECK(l_mds_radius(5, 2, 2) == 2);
    const auto witness = grs_build(f7, 5, 2, golden_witness());
    CHECK(is_l_mds(witness, 2));
    CHECK(min_distance(witness) == 4);
    CHECK(check_strongly_list_decodable(witness, 2, 2).extremal_value == 7);
    CHECK_FALSE(is_strongly_list_decodable(witness, Rational(7, 3), 2));
    CHECK_THROWS_AS(is_l_mds(witness, 5), InvalidParameters);  // L > C(4, 1)
    CHECK_THROWS_AS(is_l_mds(witness, 7), InvalidParameters);  // L > q - 1

    // Every L-MDS code found is MDS.
    std::mt19937 rng(23);
    int passes = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto code = grs_build(f7, 5, 2, random_grs(rng, 7, 5));
        if (is_l_mds(code, 2)) {
            ++passes;
            CHECK(min_distance(code) == 4);
        }
    }
    CHECK(passes > 20);
}

TEST_CASE("seeded L-MDS search") {
    const auto f7 = gf::Field::of_order(7);
    const auto found = search_l_mds(f7, 5, 2, 2, 1, 100);
    REQUIRE(found.has_value());
    CHECK(found->iteration == 0);
    CHECK(found->params.points == golden_witness().points);
    CHECK(found->params.multipliers == golden_witness().multipliers);
    CHECK(is_l_mds(found->code, 2));
    const auto again = search_l_mds(f7, 5, 2, 2, 1, 100);
    CHECK(again->params.points == found->params.points);

    CHECK_FALSE(search_l_mds(f7, 5, 2, 2, 1, 0).has_value());
    CHECK_THROWS_AS(search_l_mds(gf::Field::of_order(2), 5, 2, 2, 1, 10), InvalidParameters);
}

TEST_CASE("GRS codes are MDS for small parameters") {
    std::mt19937 rng(29);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
        const auto f = gf::Field::of_order(q);
        for (std::size_t n = 2; n <= std::min<std::size_t>(6, q); ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                if (checked_pow(q, k) > 200'000) continue;
                const auto code = grs_build(f, n, k, random_grs(rng, q, n));
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(min_distance(code) == n - k + 1);
            }
        }
    }
}
