#pragma once

#include "vpec/core.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vpec::rep {

/// Multiset of received candidates for one source symbol, with the packet each came from.
struct CandidateMultiset {
    std::size_t index = 0;
    std::vector<Symbol> symbols;
    std::vector<std::size_t> packets;
};

/// Most frequent symbol and its frequency; ties go to the smallest symbol.
/// A majority-vote pass settles the common case in linear time before falling back to full counting.
std::pair<Symbol, std::size_t> most_frequent(const std::vector<Symbol>& symbols);

/// Frequency of `value` in `symbols`.
std::size_t frequency(const std::vector<Symbol>& symbols, Symbol value);

struct UzFlags {
    bool u1 = false, u2 = false, z1 = false, z2 = false;
    Symbol xi1 = 0, xi2 = 0;
};

/// U_l = [F_{B_l}(xi_l) <= T - F_{A_{3-l}}(xi_{3-l})], Z_l = [F_{B_l}(xi_l) >= s + F_{A_{3-l}}(xi_{3-l}) - T],
/// with xi_l the most frequent symbol of A_l.
UzFlags uz_flags(const std::vector<Symbol>& a1, const std::vector<Symbol>& a2, const std::vector<Symbol>& b1,
                 const std::vector<Symbol>& b2, std::size_t max_errors, std::size_t s);

enum class RepDecoder { alg1, alg2 };

/// Repetition-style code on N = 2T+1 packets. Packet j carries every source symbol except those
/// in the cyclic window {j, ..., j+s-1}. Indices are zero-based.
class RepetitionCode {
public:
    /// Requires 1 <= s <= T and q >= 2.
    RepetitionCode(std::size_t max_errors, std::size_t s, std::uint32_t q);

    std::size_t max_errors() const noexcept { return t_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t packets() const noexcept { return n_; }
    std::size_t packet_length() const noexcept { return n_ - s_; }
    std::uint32_t alphabet() const noexcept { return q_; }
    Rational rate() const;
    Rational distortion_budget() const;

    /// Window S_j (cyclic, in order j, j+1, ...) and its complement in increasing order.
    std::vector<std::size_t> window(std::size_t j) const;
    std::vector<std::size_t> complement(std::size_t j) const;
    bool in_window(std::size_t j, std::size_t i) const noexcept;

    core::PacketSet encode(const Word& message) const;

    /// Symbol of packet j standing for source index i (i must not lie in S_j).
    Symbol symbol_at(const core::PacketSet& received, std::size_t i, std::size_t j) const;

    /// A_i: candidates for x_i from every packet that carries it.
    CandidateMultiset candidates(const core::PacketSet& received, std::size_t i) const;

    /// Lexicographically first (i1, i2) in `indices` (sorted) with i2 - i1 mod N in [s, N - s].
    std::optional<std::pair<std::size_t, std::size_t>> find_pair(const std::vector<std::size_t>& indices) const;

    /// Majority decoder for s = 1: resolve symbols seen at least T+1 times; if any remain, erase the
    /// smallest unresolved index i and read every other symbol from packet i.
    core::ReconstructionWord decode_alg1(const core::PacketSet& received) const;

    /// General decoder. Never outputs a wrong symbol and erases at most s symbols when at most T
    /// packets are altered.
    core::ReconstructionWord decode_alg2(const core::PacketSet& received) const;

    /// m = k / N independent rounds; packet j is the concatenation of its per-round packets.
    core::PacketSet encode_batched(const Word& message) const;
    core::ReconstructionWord decode_batched(const core::PacketSet& received, std::size_t rounds,
                                            RepDecoder decoder = RepDecoder::alg2) const;

private:
    void require_packets(const core::PacketSet& received) const;
    std::size_t position_in_packet(std::size_t i, std::size_t j) const noexcept;

    std::size_t t_, s_, n_;
    std::uint32_t q_;
};

/// Batched repetition code as a VPEC scheme with k = rounds * (2T+1).
class RepetitionScheme : public core::VpecScheme {
public:
    RepetitionScheme(RepetitionCode code, std::size_t rounds = 1, RepDecoder decoder = RepDecoder::alg2);

    core::PacketLayout layout() const override;
    std::size_t message_length() const override { return rounds_ * code_.packets(); }
    std::size_t error_budget() const override { return code_.max_errors(); }
    Rational distortion_budget() const override { return code_.distortion_budget(); }
    core::PacketSet encode(const Word& message) const override { return code_.encode_batched(message); }
    core::ReconstructionWord decode(const core::PacketSet& received) const override;

    const RepetitionCode& code() const noexcept { return code_; }

private:
    RepetitionCode code_;
    std::size_t rounds_;
    RepDecoder decoder_;
};

}  // namespace vpec::rep
