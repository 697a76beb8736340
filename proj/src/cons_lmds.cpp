#include "vpec/cons_lmds.hpp"

#include <algorithm>

namespace vpec::lmds {

LmdsParameters lmds_parameters(std::size_t packets, std::size_t max_errors, std::size_t list_size) {
    if (max_errors == 0) throw InvalidParameters("T must be positive");
    if (packets < 2 * max_errors + 1) throw InvalidParameters("need N >= 2T + 1");
    if (list_size < 2) throw InvalidParameters("need L >= 2");
    if (list_size * max_errors > packets) throw InvalidParameters("need L <= N / T");
    if (max_errors % list_size != 0) throw InvalidParameters("L must divide T");
    const std::size_t reach = max_errors + max_errors / list_size;  // (1 + 1/L) T
    if (reach >= packets) throw InvalidParameters("rho N must be positive");

    LmdsParameters p;
    p.packets = packets;
    p.max_errors = max_errors;
    p.list_size = list_size;
    p.dimension = packets - reach;
    p.rho = make_rational(static_cast<long long>(p.dimension), static_cast<long long>(packets));
    p.message_length = p.dimension * packets;
    p.packet_rate = make_rational(1, static_cast<long long>(p.dimension));
    p.distortion = make_rational(static_cast<long long>(list_size * max_errors), static_cast<long long>(packets));
    return p;
}

namespace {

LmdsParameters checked_parameters(const lincode::LinearCode& base, std::size_t max_errors, std::size_t list_size,
                                  std::uint64_t budget) {
    const LmdsParameters p = lmds_parameters(base.length(), max_errors, list_size);
    if (base.dimension() != p.dimension) {
        throw InvalidParameters("base code must have dimension rho N = " + std::to_string(p.dimension));
    }
    if (base.field().order() <= checked_binomial(list_size + 1, 2)) {
        throw InvalidParameters("field too small: need q > C(L+1, 2)");
    }
    if (!lincode::is_list_decodable(base, max_errors, list_size, budget)) {
        throw InvalidParameters("base code is not (T, L)-list decodable");
    }
    return p;
}

}  // namespace

LmdsVpecCode::LmdsVpecCode(const lincode::LinearCode& base, std::size_t max_errors, std::size_t list_size,
                           std::uint64_t budget)
    : base_(base),
      params_(checked_parameters(base, max_errors, list_size, budget)),
      interleaved_(base, base.length(), budget) {
    for (std::size_t i = 0; i < params_.packets; ++i) {
        generators_.push_back(lincode::systematic_window_generator(base_, i));
    }
}

core::PacketLayout LmdsVpecCode::layout() const {
    return {params_.packets, params_.packets, base_.field().order()};
}

interleave::CodeArray LmdsVpecCode::encode_array(const Word& message) const {
    if (message.size() != params_.message_length) throw InvalidParameters("message has wrong length");
    const auto& f = base_.field();
    const std::size_t n = params_.packets;
    const std::size_t k = params_.dimension;
    interleave::CodeArray array(n, Word(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& g = generators_[i];
        for (std::size_t r = 0; r < k; ++r) {
            const Symbol x = message[i * k + r];
            if (!f.contains(x)) throw InvalidParameters("message symbol outside the field");
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) array[i][j] = f.add(array[i][j], f.mul(x, g[r][j]));
        }
    }
    return array;
}

core::PacketSet LmdsVpecCode::packetize(const interleave::CodeArray& array) const {
    const std::size_t n = params_.packets;
    if (array.size() != n) throw InvalidParameters("array must be N x N");
    core::PacketSet packets(n, Word(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (array[i].size() != n) throw InvalidParameters("array must be N x N");
        for (std::size_t j = 0; j < n; ++j) packets[j][i] = array[i][j];
    }
    return packets;
}

interleave::CodeArray LmdsVpecCode::depacketize(const core::PacketSet& packets) const {
    core::require_layout(layout(), packets);
    const std::size_t n = params_.packets;
    interleave::CodeArray array(n, Word(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) array[i][j] = packets[j][i];
    }
    return array;
}

core::ReconstructionWord LmdsVpecCode::read_message(const interleave::CodeArray& array,
                                                    const std::vector<bool>& erased) const {
    const std::size_t n = params_.packets;
    const std::size_t k = params_.dimension;
    core::ReconstructionWord out(params_.message_length);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t col = (i + c) % n;
            if (!erased[col]) out[i * k + c] = array[i][col];
        }
    }
    return out;
}

LmdsDecodeResult LmdsVpecCode::decode_array(const interleave::CodeArray& received) const {
    const std::size_t n = params_.packets;
    LmdsDecodeResult result;
    // Array codewords are more than T columns apart, so a received codeword was not corrupted.
    if (interleaved_.contains(received)) {
        result.codeword = true;
        result.list_size = 1;
        result.output = read_message(received, std::vector<bool>(n, false));
        return result;
    }
    const auto list = interleave::iterative_list_decode(interleaved_, received, params_.max_errors,
                                                        params_.list_size);
    result.list_size = list.size();
    if (list.empty()) {
        result.empty_list = true;
        result.output.assign(params_.message_length, std::nullopt);
        return result;
    }
    std::vector<bool> erased(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 1; m < list.size() && !erased[j]; ++m) {
            for (std::size_t i = 0; i < n; ++i) {
                if (list[m][i][j] != list[0][i][j]) {
                    erased[j] = true;
                    break;
                }
            }
        }
        if (erased[j]) result.erased_columns.push_back(j);
    }
    result.output = read_message(list.front(), erased);
    return result;
}

core::ReconstructionWord LmdsVpecCode::decode(const core::PacketSet& received) const {
    return decode_array(depacketize(received)).output;
}

std::vector<std::size_t> LmdsVpecCode::info_coordinates(std::size_t column) const {
    const std::size_t n = params_.packets;
    if (column >= n) throw InvalidParameters("column out of range");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = (column + n - i) % n;
        if (c < params_.dimension) out.push_back(i * params_.dimension + c);
    }
    return out;
}

}  // namespace vpec::lmds
