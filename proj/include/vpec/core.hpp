#pragma once

#include "vpec/errors.hpp"
#include "vpec/rational.hpp"
#include "vpec/types.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace vpec::core {

/// N packets, each of `packet_length` symbols from an alphabet of size q.
struct PacketLayout {
    std::size_t packets = 1;
    std::size_t packet_length = 1;
    std::uint32_t q = 2;

    /// q^packet_length, saturating.
    std::uint64_t packet_alphabet() const noexcept { return checked_pow(q, packet_length); }
    void validate() const;
};

using PacketSet = std::vector<Word>;

/// Throws InvalidParameters unless `packets` matches the layout.
void require_layout(const PacketLayout& layout, const PacketSet& packets);

/// Decoder output: nullopt marks an erasure.
using ReconstructionWord = std::vector<std::optional<Symbol>>;

/// Exact erasure distortion. Infinity is a distinct state and means a wrong symbol was output.
class Distortion {
public:
    Distortion() = default;
    explicit Distortion(Rational value) : value_(std::move(value)) {}
    static Distortion infinite() {
        Distortion d;
        d.infinite_ = true;
        return d;
    }

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws std::logic_error when infinite.
    const Rational& value() const;
    /// "p/q", or "inf".
    std::string to_string() const;

    friend bool operator==(const Distortion& a, const Distortion& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Distortion& a, const Distortion& b);

private:
    Rational value_{0};
    bool infinite_ = false;
};

/// Per symbol: 0 when equal, 1 when erased, infinity when wrong; averaged over k.
Distortion erasure_distortion(const Word& source, const ReconstructionWord& output);

std::size_t erasure_count(const ReconstructionWord& output);

/// A T-VPEC encoder/decoder pair over a common symbol alphabet of size layout().q.
class VpecScheme {
public:
    virtual ~VpecScheme() = default;
    virtual PacketLayout layout() const = 0;
    virtual std::size_t message_length() const = 0;
    /// T the scheme is designed for and its distortion budget D at up to T errors.
    virtual std::size_t error_budget() const = 0;
    virtual Rational distortion_budget() const = 0;
    virtual PacketSet encode(const Word& message) const = 0;
    virtual ReconstructionWord decode(const PacketSet& received) const = 0;

    /// Per-packet rate: packet length / k.
    Rational rate() const;
};

/// Packets in `altered` (increasing) are replaced by the matching entries of `values`.
struct Corruption {
    std::vector<std::size_t> altered;
    std::vector<Word> values;
};

PacketSet apply_corruption(const PacketSet& sent, const Corruption& corruption);

enum class AdversaryMode { exhaustive, random, swap };

std::string to_string(AdversaryMode mode);
/// Throws ParseError for unknown names.
AdversaryMode parse_adversary(const std::string& name);

/// Sum over t <= T of C(N, t) (|Q| - 1)^t, saturating.
std::uint64_t corruption_count(const PacketLayout& layout, std::size_t max_errors);

/// Every corruption of at most `max_errors` packets, each altered packet set to a different value:
/// by error count, then support (lexicographic), then values. Stops early when fn returns false.
void for_each_corruption(const PacketLayout& layout, const PacketSet& sent, std::size_t max_errors,
                         const std::function<bool(const Corruption&)>& fn);

/// Uniform error count in [0, T], uniform support, uniform different values.
Corruption random_corruption(const PacketLayout& layout, const PacketSet& sent, std::size_t max_errors,
                             std::mt19937_64& rng);

/// Replaces min(T, N) uniformly chosen packets by those of `other` (another codeword).
/// Packets that already agree are left out of the support.
Corruption swap_corruption(const PacketSet& sent, const PacketSet& other, std::size_t max_errors,
                           std::mt19937_64& rng);

/// One evaluated (message, corruption) pair.
struct TraceEvent {
    Word message;
    Corruption corruption;
    ReconstructionWord output;
    Distortion distortion;
};

struct DistortionOptions {
    AdversaryMode mode = AdversaryMode::exhaustive;
    /// Trials for random and swap modes.
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
    unsigned threads = 0;
    /// Called for every evaluation in deterministic order. Forces single-threaded evaluation.
    std::function<void(const TraceEvent&)> trace;
};

struct DistortionReport {
    /// Exact maximum in exhaustive mode, a lower bound otherwise.
    Distortion worst;
    Distortion mean;
    std::uint64_t evaluations = 0;
    std::uint64_t wrong_symbol_events = 0;
    std::size_t max_erasures = 0;
    bool exhaustive = false;
    /// First evaluation attaining the worst value.
    std::optional<TraceEvent> worst_case;
};

/// Maximum distortion over messages and corruptions of at most `max_errors` packets.
/// Exhaustive mode throws BudgetExceeded when q^k times corruption_count exceeds the budget.
/// Random and swap modes draw each trial from its own seeded substream.
DistortionReport worst_case_distortion(const VpecScheme& scheme, std::size_t max_errors,
                                       const DistortionOptions& options = {});

/// Codeword table indexed by message index (word_from_index order over the alphabet).
struct CodeTable {
    PacketLayout layout;
    std::size_t message_length = 0;
    std::vector<PacketSet> codewords;
};

/// Tabulates all q^k codewords of a scheme. Throws BudgetExceeded past the budget.
CodeTable tabulate(const VpecScheme& scheme, std::uint64_t budget = kDefaultBudget);

std::size_t packet_distance(const PacketSet& a, const PacketSet& b);

struct Lemma1Report {
    bool holds = true;
    bool distance_ok = true;
    bool agreement_ok = true;
    std::size_t min_distance = 0;
    std::size_t required_distance = 0;
    /// Smallest common agreement set over all received words with a nonempty ball.
    std::size_t min_agreement = 0;
    std::size_t required_agreement = 0;
    std::optional<PacketSet> witness;
};

/// Checks the two conditions characterising a T-VPEC code with distortion D: packet distance at
/// least T+1 (2T+1 when D = 0), and for every received word a common agreement set of at least
/// (1-D)k message coordinates among all codewords within distance T.
/// Enumerates all |Q|^N received words; throws BudgetExceeded past the budget.
Lemma1Report verify_lemma1(const CodeTable& table, std::size_t max_errors, const Rational& max_distortion,
                           std::uint64_t budget = kDefaultBudget);

struct BallDecodeResult {
    ReconstructionWord output;
    std::size_t ball_size = 0;
    /// True when no codeword lies within distance T (output is all erasures).
    bool empty_ball = false;
};

/// Keeps the coordinates on which every message with a codeword within distance T agrees.
BallDecodeResult ball_intersection_decode(const CodeTable& table, const PacketSet& received, std::size_t max_errors);

/// A tabulated code decoded by ball intersection.
class EnumeratedScheme : public VpecScheme {
public:
    EnumeratedScheme(CodeTable table, std::size_t max_errors, Rational max_distortion);

    PacketLayout layout() const override { return table_.layout; }
    std::size_t message_length() const override { return table_.message_length; }
    std::size_t error_budget() const override { return max_errors_; }
    Rational distortion_budget() const override { return max_distortion_; }
    PacketSet encode(const Word& message) const override;
    ReconstructionWord decode(const PacketSet& received) const override;

    const CodeTable& table() const noexcept { return table_; }

private:
    CodeTable table_;
    std::size_t max_errors_;
    Rational max_distortion_;
};

}  // namespace vpec::core
