#pragma once

#include "vpec/core.hpp"
#include "vpec/interleave.hpp"
#include "vpec/lincode.hpp"

#include <vector>

namespace vpec::lmds {

/// Derived parameters of the interleaved L-MDS construction.
struct LmdsParameters {
    std::size_t packets = 0;     // N
    std::size_t max_errors = 0;  // T, also the list-decoding radius
    std::size_t list_size = 0;   // L
    Rational rho;                // 1 - (1 + 1/L) T / N
    std::size_t dimension = 0;   // rho N, the base code dimension
    std::size_t message_length = 0;  // rho N^2
    Rational packet_rate;        // 1 / (rho N)
    Rational distortion;         // L T / N
};

/// Validates 2 <= L <= N/T, L | T, N >= 2T + 1 and rho N >= 1.
LmdsParameters lmds_parameters(std::size_t packets, std::size_t max_errors, std::size_t list_size);

struct LmdsDecodeResult {
    core::ReconstructionWord output;
    /// Received array was a codeword and was read directly.
    bool codeword = false;
    std::size_t list_size = 0;
    std::vector<std::size_t> erased_columns;
    /// No codeword within distance T; the output is all erasures.
    bool empty_list = false;
};

/// Each packet is one column of an N x N array whose row i is the i-th block of the message encoded
/// with a generator that is systematic on columns i, ..., i + rho N - 1 (mod N).
class LmdsVpecCode : public core::VpecScheme {
public:
    /// Requires `base` to be [N, rho N], q > C(L+1, 2), and (T, L)-list decodable (checked
    /// exhaustively within the budget). Throws InvalidParameters otherwise.
    LmdsVpecCode(const lincode::LinearCode& base, std::size_t max_errors, std::size_t list_size,
                 std::uint64_t budget = kDefaultBudget);

    const LmdsParameters& parameters() const noexcept { return params_; }
    const lincode::LinearCode& base() const noexcept { return base_; }
    const Matrix& window_generator(std::size_t row) const { return generators_.at(row); }

    core::PacketLayout layout() const override;
    std::size_t message_length() const override { return params_.message_length; }
    std::size_t error_budget() const override { return params_.max_errors; }
    Rational distortion_budget() const override { return params_.distortion; }
    core::PacketSet encode(const Word& message) const override { return packetize(encode_array(message)); }
    core::ReconstructionWord decode(const core::PacketSet& received) const override;

    interleave::CodeArray encode_array(const Word& message) const;
    /// Packet j is column j.
    core::PacketSet packetize(const interleave::CodeArray& array) const;
    interleave::CodeArray depacketize(const core::PacketSet& packets) const;

    /// A received codeword is read directly; otherwise the array is list decoded at radius T, every
    /// column on which two list members disagree is erased, and the rest is read from the first member.
    LmdsDecodeResult decode_array(const interleave::CodeArray& received) const;

    /// Message coordinates whose systematic position lies in column j.
    std::vector<std::size_t> info_coordinates(std::size_t column) const;

private:
    core::ReconstructionWord read_message(const interleave::CodeArray& array,
                                          const std::vector<bool>& erased) const;

    lincode::LinearCode base_;
    LmdsParameters params_;
    std::vector<Matrix> generators_;
    interleave::InterleavedCode interleaved_;
};

}  // namespace vpec::lmds
