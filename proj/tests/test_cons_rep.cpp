#include "doctest.h"

#include "vpec/cons_rep.hpp"

#include <random>
#include <set>

using namespace vpec;
using namespace vpec::rep;
using core::PacketSet;
using core::ReconstructionWord;

namespace {

// Exhaustive soundness: every message, every corruption of at most T packets.
struct Sweep {
    std::uint64_t evaluations = 0;
    std::uint64_t wrong = 0;
    std::size_t max_erasures = 0;
};

Sweep sweep(const RepetitionCode& code, RepDecoder decoder) {
    Sweep out;
    const core::PacketLayout layout{code.packets(), code.packet_length(), code.alphabet()};
    const std::uint64_t messages = checked_pow(code.alphabet(), code.packets());
    for (std::uint64_t m = 0; m < messages; ++m) {
        const Word x = word_from_index(m, code.alphabet(), code.packets());
        const PacketSet sent = code.encode(x);
        core::for_each_corruption(layout, sent, code.max_errors(), [&](const core::Corruption& c) {
            const auto y = decoder == RepDecoder::alg1 ? code.decode_alg1(core::apply_corruption(sent, c))
                                                       : code.decode_alg2(core::apply_corruption(sent, c));
            ++out.evaluations;
            std::size_t erased = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (!y[i]) {
                    ++erased;
                } else if (*y[i] != x[i]) {
                    ++out.wrong;
                }
            }
            out.max_erasures = std::max(out.max_erasures, erased);
            return true;
        });
    }
    return out;
}

}  // namespace

TEST_CASE("windows") {
    const RepetitionCode code(2, 2, 2);
    // S_5 = {5, 1} in one-based terms.
    CHECK(code.window(4) == std::vector<std::size_t>{4, 0});
    CHECK(code.complement(4) == std::vector<std::size_t>{1, 2, 3});
    const RepetitionCode s1(3, 1, 2);
    for (std::size_t j = 0; j < 7; ++j) CHECK(s1.window(j) == std::vector<std::size_t>{j});
    // Packets omitting x_i are exactly i, i-1, ..., i-s+1.
    const RepetitionCode s3(4, 3, 2);
    for (std::size_t i = 0; i < 9; ++i) {
        std::set<std::size_t> omit;
        for (std::size_t j = 0; j < 9; ++j) {
            if (s3.in_window(j, i)) omit.insert(j);
        }
        CHECK(omit == std::set<std::size_t>{i, (i + 8) % 9, (i + 7) % 9});
    }
    CHECK_THROWS_AS(code.window(5), InvalidParameters);
}

TEST_CASE("encoding") {
    const RepetitionCode code(1, 1, 3);
    const auto p = code.encode({0, 1, 2});
    CHECK(p == PacketSet{{1, 2}, {0, 2}, {0, 1}});
    CHECK(code.rate() == make_rational(2, 3));
    CHECK(code.distortion_budget() == make_rational(1, 3));

    const RepetitionCode wide(3, 2, 11);
    Word x(7);
    for (std::size_t i = 0; i < 7; ++i) x[i] = static_cast<Symbol>(i + 3);
    const auto packets = wide.encode(x);
    for (const auto& pk : packets) CHECK(pk.size() == 5);
    for (std::size_t i = 0; i < 7; ++i) {
        std::size_t appearances = 0;
        for (const auto& pk : packets) appearances += std::count(pk.begin(), pk.end(), x[i]);
        CHECK(appearances == 5);
    }
    CHECK(wide.rate() == make_rational(5, 7));
    CHECK_THROWS_AS(code.encode({0, 1}), InvalidParameters);
    CHECK_THROWS_AS(code.encode({0, 1, 3}), InvalidParameters);
    CHECK_THROWS_AS(RepetitionCode(2, 3, 2), InvalidParameters);
    CHECK_THROWS_AS(RepetitionCode(2, 0, 2), InvalidParameters);
}

TEST_CASE("candidates") {
    const RepetitionCode code(1, 1, 3);
    PacketSet y = code.encode({0, 1, 2});
    const auto clean = code.candidates(y, 1);
    CHECK(clean.symbols == std::vector<Symbol>{1, 1});
    y[0] = {2, 2};
    CHECK(code.candidates(y, 1).symbols == std::vector<Symbol>{1, 2});
    const auto a2 = code.candidates(y, 1);
    CHECK(std::multiset<Symbol>(a2.symbols.begin(), a2.symbols.end()) == std::multiset<Symbol>{2, 1});

    const RepetitionCode big(4, 3, 5);
    std::mt19937 rng(2);
    Word x(9);
    for (auto& s : x) s = rng() % 5;
    const auto packets = big.encode(x);
    for (std::size_t i = 0; i < 9; ++i) {
        const auto ms = big.candidates(packets, i);
        CHECK(ms.symbols.size() == 6);
        CHECK(std::count(ms.symbols.begin(), ms.symbols.end(), x[i]) == 6);
        for (auto j : ms.packets) CHECK_FALSE(big.in_window(j, i));
    }
}

TEST_CASE("most frequent") {
    CHECK(most_frequent({2, 1}) == std::pair<Symbol, std::size_t>{1, 1});
    CHECK(most_frequent({0, 0, 1}) == std::pair<Symbol, std::size_t>{0, 2});
    CHECK(most_frequent({5}) == std::pair<Symbol, std::size_t>{5, 1});
    CHECK(most_frequent({3, 1, 3, 1, 2}) == std::pair<Symbol, std::size_t>{1, 2});
    CHECK(most_frequent({4, 4, 2, 2, 2, 4, 4}) == std::pair<Symbol, std::size_t>{4, 4});
    CHECK_THROWS_AS(most_frequent({}), InvalidParameters);

    std::mt19937 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Symbol> v(1 + rng() % 9);
        for (auto& s : v) s = rng() % 4;
        std::size_t best = 0;
        Symbol arg = 0;
        for (Symbol c = 0; c < 4; ++c) {
            const auto f = static_cast<std::size_t>(std::count(v.begin(), v.end(), c));
            if (f > best) {
                best = f;
                arg = c;
            }
        }
        CHECK(most_frequent(v) == std::pair<Symbol, std::size_t>{arg, best});
    }
}

TEST_CASE("majority decoder") {
    const RepetitionCode code(1, 1, 3);
    const Word x{0, 1, 2};
    PacketSet y = code.encode(x);
    CHECK(code.decode_alg1(y) == ReconstructionWord{0, 1, 2});
    y[0] = {2, 2};
    CHECK(code.decode_alg1(y) == ReconstructionWord{0, std::nullopt, 2});
    CHECK(core::erasure_distortion(x, code.decode_alg1(y)) == core::Distortion(make_rational(1, 3)));
    CHECK_THROWS_AS(RepetitionCode(2, 2, 2).decode_alg1(RepetitionCode(2, 2, 2).encode({0, 0, 0, 0, 0})),
                    InvalidParameters);

    for (auto [t, q] : {std::pair<std::size_t, std::uint32_t>{1, 3}, {2, 2}}) {
        const auto r = sweep(RepetitionCode(t, 1, q), RepDecoder::alg1);
        CHECK(r.wrong == 0);
        CHECK(r.max_erasures == 1);
    }
}

TEST_CASE("find_pair") {
    const RepetitionCode code(2, 2, 2);
    CHECK(code.find_pair({0, 1, 2}) == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK_FALSE(code.find_pair({0, 1}).has_value());
    CHECK_FALSE(code.find_pair({3}).has_value());
    const RepetitionCode s1(3, 1, 2);
    CHECK(s1.find_pair({2, 3}) == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(s1.find_pair({0, 6}) == std::pair<std::size_t, std::size_t>{0, 6});

    // Any s+1 indices admit a pair, for every (T, s) up to T = 4.
    for (std::size_t t = 1; t <= 4; ++t) {
        for (std::size_t s = 1; s <= t; ++s) {
            const RepetitionCode c(t, s, 2);
            const std::size_t n = 2 * t + 1;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != s + 1) continue;
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask >> i & 1) idx.push_back(i);
                }
                const auto p = c.find_pair(idx);
                REQUIRE(p.has_value());
                const std::size_t diff = (p->second + n - p->first) % n;
                CHECK(diff >= s);
                CHECK(diff <= n - s);
            }
        }
    }
}

TEST_CASE("U and Z flags") {
    // Clean instance, T = 2, s = 2: |A| = 3, |B| = 2, everything agrees.
    // U = [2 <= 2 - 3] is false. Z = [2 >= 2 + 3 - 2] is false as well.
    const auto f = uz_flags({7, 7, 7}, {4, 4, 4}, {7, 7}, {4, 4}, 2, 2);
    CHECK(f.xi1 == 7);
    CHECK(f.xi2 == 4);
    CHECK_FALSE(f.u1);
    CHECK_FALSE(f.u2);
    CHECK_FALSE(f.z1);
    CHECK_FALSE(f.z2);

    // Both estimates wrong implies both U flags: T = 2, s = 1, packets 1 and 2 of 5 altered.
    const RepetitionCode code(2, 1, 3);
    const Word x{0, 0, 0, 0, 0};
    PacketSet y = code.encode(x);
    y[3] = {1, 1, 1, 1};
    y[4] = {1, 1, 1, 1};
    // Check the implications over every admissible pair.
    for (std::size_t i1 = 0; i1 < 5; ++i1) {
        for (std::size_t i2 = 0; i2 < 5; ++i2) {
            const std::size_t diff = (i2 + 5 - i1) % 5;
            if (diff < 1 || diff > 4) continue;
            const auto a1 = code.candidates(y, i1).symbols;
            const auto a2 = code.candidates(y, i2).symbols;
            std::vector<Symbol> b1, b2;
            // With s = 1 the packets omitting x_i are just packet i.
            for (auto j : code.window(i2)) b1.push_back(code.symbol_at(y, i1, j));
            for (auto j : code.window(i1)) b2.push_back(code.symbol_at(y, i2, j));
            const auto fl = uz_flags(a1, a2, b1, b2, 2, 1);
            if (fl.xi1 != x[i1] && fl.xi2 != x[i2]) {
                CHECK(fl.u1);
                CHECK(fl.u2);
            }
            if (fl.u1) CHECK(fl.xi1 != x[i1]);
            if (fl.u2) CHECK(fl.xi2 != x[i2]);
        }
    }
}

TEST_CASE("general decoder soundness, exhaustive") {
    const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> cases{
        {1, 1, 2}, {1, 1, 3}, {2, 1, 2}, {2, 2, 2}};
    for (const auto& [t, s, q] : cases) {
        CAPTURE(t);
        CAPTURE(s);
        CAPTURE(q);
        const auto r = sweep(RepetitionCode(t, s, q), RepDecoder::alg2);
        CHECK(r.wrong == 0);
        CHECK(r.max_erasures <= s);
        CHECK(r.max_erasures == s);
    }
}

TEST_CASE("general decoder without corruption") {
    std::mt19937 rng(8);
    for (std::size_t t = 1; t <= 6; ++t) {
        for (std::size_t s = 1; s <= t; ++s) {
            const RepetitionCode code(t, s, 5);
            Word x(2 * t + 1);
            for (auto& v : x) v = rng() % 5;
            const auto y = code.decode_alg2(code.encode(x));
            for (std::size_t i = 0; i < x.size(); ++i) CHECK(y[i] == std::optional<Symbol>(x[i]));
        }
    }
}

TEST_CASE("general decoder under random attacks at larger T") {
    std::mt19937_64 rng(10);
    for (std::size_t t : {3u, 5u, 8u}) {
        for (std::size_t s : {std::size_t{1}, t / 2 + 1, t}) {
            const RepetitionCode code(t, s, 3);
            const core::PacketLayout layout{code.packets(), code.packet_length(), 3};
            for (int trial = 0; trial < 200; ++trial) {
                Word x(2 * t + 1);
                for (auto& v : x) v = rng() % 3;
                const auto sent = code.encode(x);
                const auto y = code.decode_alg2(core::apply_corruption(sent, core::random_corruption(layout, sent, t, rng)));
                const auto d = core::erasure_distortion(x, y);
                REQUIRE_FALSE(d.is_infinite());
                CHECK(core::erasure_count(y) <= s);
            }
        }
    }
}

TEST_CASE("batched transmission") {
    const RepetitionCode code(1, 1, 3);
    const Word x{0, 1, 2};
    CHECK(code.encode_batched(x) == code.encode(x));
    CHECK(code.decode_batched(code.encode(x), 1) == code.decode_alg2(code.encode(x)));

    const RepetitionCode big(2, 2, 4);
    std::mt19937_64 rng(12);
    Word msg(15);
    for (auto& v : msg) v = rng() % 4;
    const auto sent = big.encode_batched(msg);
    for (const auto& p : sent) CHECK(p.size() == 9);
    const auto y = big.decode_batched(sent, 3);
    for (std::size_t i = 0; i < 15; ++i) CHECK(y[i] == std::optional<Symbol>(msg[i]));

    const RepetitionScheme scheme(big, 3);
    CHECK(scheme.rate() == big.rate());
    const core::PacketLayout layout = scheme.layout();
    for (int trial = 0; trial < 300; ++trial) {
        Word m(15);
        for (auto& v : m) v = rng() % 4;
        const auto s = scheme.encode(m);
        const auto out = scheme.decode(core::apply_corruption(s, core::random_corruption(layout, s, 2, rng)));
        const auto d = core::erasure_distortion(m, out);
        REQUIRE_FALSE(d.is_infinite());
        CHECK(d.value() <= make_rational(2, 5));
    }
    CHECK_THROWS_AS(big.encode_batched(Word(7, 0)), InvalidParameters);
}

TEST_CASE("majority and general decoders agree wherever both decide") {
    // Erasure positions are not identical: the general decoder sometimes resolves a symbol the
    // majority decoder erases, and the other way round. Both are sound, so decided symbols match.
    const RepetitionCode code(1, 1, 3);
    const core::PacketLayout layout{3, 2, 3};
    std::uint64_t different_positions = 0;
    for (std::uint64_t m = 0; m < 27; ++m) {
        const Word x = word_from_index(m, 3, 3);
        const PacketSet sent = code.encode(x);
        core::for_each_corruption(layout, sent, 1, [&](const core::Corruption& c) {
            const auto y = core::apply_corruption(sent, c);
            const auto a = code.decode_alg1(y);
            const auto b = code.decode_alg2(y);
            bool same = true;
            for (std::size_t i = 0; i < 3; ++i) {
                if (a[i] && b[i]) CHECK(*a[i] == *b[i]);
                same = same && a[i].has_value() == b[i].has_value();
            }
            CHECK(core::erasure_count(a) <= 1);
            CHECK(core::erasure_count(b) <= 1);
            different_positions += !same;
            return true;
        });
    }
    CHECK(different_positions > 0);
}
