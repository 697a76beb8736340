#include "vpec/cons_rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vpec::rep {

std::pair<Symbol, std::size_t> most_frequent(const std::vector<Symbol>& symbols) {
    if (symbols.empty()) throw InvalidParameters("most_frequent: empty multiset");
    // Majority vote: if any symbol fills more than half the multiset, it is this candidate.
    Symbol candidate = symbols[0];
    std::size_t votes = 0;
    for (auto s : symbols) {
        if (votes == 0) {
            candidate = s;
            votes = 1;
        } else {
            votes += s == candidate ? 1 : static_cast<std::size_t>(-1);
        }
    }
    const std::size_t count = frequency(symbols, candidate);
    if (2 * count > symbols.size()) return {candidate, count};

    std::map<Symbol, std::size_t> counts;
    for (auto s : symbols) ++counts[s];
    std::pair<Symbol, std::size_t> best{0, 0};
    for (const auto& [s, c] : counts) {
        if (c > best.second) best = {s, c};  // map order gives the smallest symbol on ties
    }
    return best;
}

std::size_t frequency(const std::vector<Symbol>& symbols, Symbol value) {
    return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), value));
}

UzFlags uz_flags(const std::vector<Symbol>& a1, const std::vector<Symbol>& a2, const std::vector<Symbol>& b1,
                 const std::vector<Symbol>& b2, std::size_t max_errors, std::size_t s) {
    const auto [xi1, fa1] = most_frequent(a1);
    const auto [xi2, fa2] = most_frequent(a2);
    const long t = static_cast<long>(max_errors);
    const long fb1 = static_cast<long>(frequency(b1, xi1));
    const long fb2 = static_cast<long>(frequency(b2, xi2));
    UzFlags f;
    f.xi1 = xi1;
    f.xi2 = xi2;
    f.u1 = fb1 <= t - static_cast<long>(fa2);
    f.u2 = fb2 <= t - static_cast<long>(fa1);
    f.z1 = fb1 >= static_cast<long>(s) + static_cast<long>(fa2) - t;
    f.z2 = fb2 >= static_cast<long>(s) + static_cast<long>(fa1) - t;
    return f;
}

RepetitionCode::RepetitionCode(std::size_t max_errors, std::size_t s, std::uint32_t q)
    : t_(max_errors), s_(s), n_(2 * max_errors + 1), q_(q) {
    if (max_errors < 1) throw InvalidParameters("repetition code needs T >= 1");
    if (s < 1 || s > max_errors) throw InvalidParameters("repetition code needs 1 <= s <= T");
    if (q < 2) throw InvalidParameters("alphabet needs at least two symbols");
}

Rational RepetitionCode::rate() const {
    return make_rational(static_cast<long long>(n_ - s_), static_cast<long long>(n_));
}

Rational RepetitionCode::distortion_budget() const {
    return make_rational(static_cast<long long>(s_), static_cast<long long>(n_));
}

bool RepetitionCode::in_window(std::size_t j, std::size_t i) const noexcept { return (i + n_ - j) % n_ < s_; }

std::vector<std::size_t> RepetitionCode::window(std::size_t j) const {
    if (j >= n_) throw InvalidParameters("window index out of range");
    std::vector<std::size_t> w;
    for (std::size_t c = 0; c < s_; ++c) w.push_back((j + c) % n_);
    return w;
}

std::vector<std::size_t> RepetitionCode::complement(std::size_t j) const {
    if (j >= n_) throw InvalidParameters("window index out of range");
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!in_window(j, i)) w.push_back(i);
    }
    return w;
}

std::size_t RepetitionCode::position_in_packet(std::size_t i, std::size_t j) const noexcept {
    // Packet j lists the complement of S_j in increasing order, so x_i sits after every smaller
    // index outside the window.
    const std::size_t end = j + s_;
    std::size_t below = 0;
    if (end <= n_) {
        below = i > j ? std::min(i - j, s_) : 0;
    } else {
        below = (i > j ? i - j : 0) + std::min(i, end - n_);
    }
    return i - below;
}

void RepetitionCode::require_packets(const core::PacketSet& received) const {
    core::require_layout({n_, packet_length(), q_}, received);
}

core::PacketSet RepetitionCode::encode(const Word& message) const {
    if (message.size() != n_) throw InvalidParameters("message length must be 2T+1");
    for (auto s : message) {
        if (s >= q_) throw InvalidParameters("message symbol outside the alphabet");
    }
    core::PacketSet packets(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!in_window(j, i)) packets[j].push_back(message[i]);
        }
    }
    return packets;
}

Symbol RepetitionCode::symbol_at(const core::PacketSet& received, std::size_t i, std::size_t j) const {
    if (in_window(j, i)) throw InvalidParameters("packet does not carry this source symbol");
    return received[j][position_in_packet(i, j)];
}

CandidateMultiset RepetitionCode::candidates(const core::PacketSet& received, std::size_t i) const {
    if (i >= n_) throw InvalidParameters("source index out of range");
    CandidateMultiset ms;
    ms.index = i;
    // Packets i-s+1, ..., i omit x_i; the other N-s packets follow cyclically from i+1.
    for (std::size_t c = 1; c <= n_ - s_; ++c) {
        const std::size_t j = (i + c) % n_;
        ms.symbols.push_back(received[j][position_in_packet(i, j)]);
        ms.packets.push_back(j);
    }
    return ms;
}

std::optional<std::pair<std::size_t, std::size_t>> RepetitionCode::find_pair(
    const std::vector<std::size_t>& indices) const {
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            const std::size_t diff = (indices[b] + n_ - indices[a]) % n_;
            if (diff >= s_ && diff <= n_ - s_) return std::make_pair(indices[a], indices[b]);
        }
    }
    return std::nullopt;
}

core::ReconstructionWord RepetitionCode::decode_alg1(const core::PacketSet& received) const {
    if (s_ != 1) throw InvalidParameters("the majority decoder requires s = 1");
    require_packets(received);
    core::ReconstructionWord y(n_);
    std::optional<std::size_t> unresolved;
    for (std::size_t i = 0; i < n_; ++i) {
        const auto [v, f] = most_frequent(candidates(received, i).symbols);
        if (f >= t_ + 1) {
            y[i] = v;
        } else if (!unresolved) {
            unresolved = i;
        }
    }
    if (!unresolved) return y;
    const std::size_t i = *unresolved;
    for (std::size_t j = 0; j < n_; ++j) {
        if (j != i) y[j] = symbol_at(received, j, i);
    }
    y[i] = std::nullopt;
    return y;
}

core::ReconstructionWord RepetitionCode::decode_alg2(const core::PacketSet& received) const {
    require_packets(received);
    core::ReconstructionWord y(n_);
    std::vector<bool> open(n_, false);
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < n_; ++i) {
        const auto [v, f] = most_frequent(candidates(received, i).symbols);
        if (f >= t_ + 1) {
            y[i] = v;
        } else {
            open[i] = true;
            remaining.push_back(i);
        }
    }

    // B: candidates for x_a from the packets that omit x_b.
    auto cross = [&](std::size_t a, std::size_t b) {
        std::vector<Symbol> out;
        for (auto j : window((b + n_ + 1 - s_) % n_)) out.push_back(symbol_at(received, a, j));
        return out;
    };

    while (remaining.size() > s_) {
        const auto pair = find_pair(remaining);
        if (!pair) throw std::logic_error("no admissible index pair although more than s indices remain");
        const auto [i1, i2] = *pair;
        const auto a1 = candidates(received, i1).symbols;
        const auto a2 = candidates(received, i2).symbols;
        const auto b1 = cross(i1, i2);
        const auto b2 = cross(i2, i1);
        const UzFlags f = uz_flags(a1, a2, b1, b2, t_, s_);

        const std::size_t before = remaining.size();
        for (int l = 1; l <= 2; ++l) {
            const bool u = l == 1 ? f.u1 : f.u2;
            const bool z = l == 1 ? f.z1 : f.z2;
            const bool z_other = l == 1 ? f.z2 : f.z1;
            const std::size_t mine = l == 1 ? i1 : i2;
            const std::size_t other = l == 1 ? i2 : i1;
            // An index resolved earlier in this iteration is not assigned again.
            if (u) {
                if (open[other]) {
                    y[other] = most_frequent(l == 1 ? b2 : b1).first;
                    open[other] = false;
                }
            } else if (z || !z_other) {
                if (open[mine]) {
                    y[mine] = l == 1 ? f.xi1 : f.xi2;
                    open[mine] = false;
                }
            }
        }
        std::erase_if(remaining, [&](std::size_t i) { return !open[i]; });
        if (remaining.size() == before) throw std::logic_error("pair step resolved no index");
    }
    return y;
}

core::PacketSet RepetitionCode::encode_batched(const Word& message) const {
    if (message.empty() || message.size() % n_ != 0) throw InvalidParameters("message length must be a multiple of 2T+1");
    const std::size_t rounds = message.size() / n_;
    core::PacketSet packets(n_);
    Word round(n_);
    for (std::size_t r = 0; r < rounds; ++r) {
        for (std::size_t i = 0; i < n_; ++i) round[i] = message[i * rounds + r];
        const auto part = encode(round);
        for (std::size_t j = 0; j < n_; ++j) packets[j].insert(packets[j].end(), part[j].begin(), part[j].end());
    }
    return packets;
}

core::ReconstructionWord RepetitionCode::decode_batched(const core::PacketSet& received, std::size_t rounds,
                                                        RepDecoder decoder) const {
    if (rounds == 0) throw InvalidParameters("need at least one round");
    core::require_layout({n_, rounds * packet_length(), q_}, received);
    core::ReconstructionWord out(rounds * n_);
    core::PacketSet part(n_);
    const std::size_t len = packet_length();
    for (std::size_t r = 0; r < rounds; ++r) {
        for (std::size_t j = 0; j < n_; ++j) {
            part[j].assign(received[j].begin() + static_cast<std::ptrdiff_t>(r * len),
                           received[j].begin() + static_cast<std::ptrdiff_t>((r + 1) * len));
        }
        const auto y = decoder == RepDecoder::alg1 ? decode_alg1(part) : decode_alg2(part);
        for (std::size_t i = 0; i < n_; ++i) out[i * rounds + r] = y[i];
    }
    return out;
}

RepetitionScheme::RepetitionScheme(RepetitionCode code, std::size_t rounds, RepDecoder decoder)
    : code_(std::move(code)), rounds_(rounds), decoder_(decoder) {
    if (rounds == 0) throw InvalidParameters("need at least one round");
    if (decoder == RepDecoder::alg1 && code_.s() != 1) throw InvalidParameters("the majority decoder requires s = 1");
}

core::PacketLayout RepetitionScheme::layout() const {
    return {code_.packets(), rounds_ * code_.packet_length(), code_.alphabet()};
}

core::ReconstructionWord RepetitionScheme::decode(const core::PacketSet& received) const {
    return code_.decode_batched(received, rounds_, decoder_);
}

}  // namespace vpec::rep
