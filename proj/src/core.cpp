#include "vpec/core.hpp"

#include "vpec/lincode.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace vpec::core {

void PacketLayout::validate() const {
    if (packets == 0) throw InvalidParameters("layout needs at least one packet");
    if (packet_length == 0) throw InvalidParameters("packet length must be positive");
    if (q < 2) throw InvalidParameters("alphabet needs at least two symbols");
}

void require_layout(const PacketLayout& layout, const PacketSet& packets) {
    if (packets.size() != layout.packets) throw InvalidParameters("wrong number of packets");
    for (const auto& p : packets) {
        if (p.size() != layout.packet_length) throw InvalidParameters("packet has wrong length");
        for (auto s : p) {
            if (s >= layout.q) throw InvalidParameters("packet symbol outside the alphabet");
        }
    }
}

const Rational& Distortion::value() const {
    if (infinite_) throw std::logic_error("infinite distortion has no rational value");
    return value_;
}

std::string Distortion::to_string() const { return infinite_ ? "inf" : to_exact(value_); }

std::strong_ordering operator<=>(const Distortion& a, const Distortion& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Distortion erasure_distortion(const Word& source, const ReconstructionWord& output) {
    if (source.size() != output.size()) throw InvalidParameters("erasure_distortion: length mismatch");
    if (source.empty()) throw InvalidParameters("erasure_distortion: empty words");
    std::size_t erased = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (!output[i]) {
            ++erased;
        } else if (*output[i] != source[i]) {
            return Distortion::infinite();
        }
    }
    return Distortion(make_rational(static_cast<long long>(erased), static_cast<long long>(source.size())));
}

std::size_t erasure_count(const ReconstructionWord& output) {
    return static_cast<std::size_t>(std::count(output.begin(), output.end(), std::nullopt));
}

Rational VpecScheme::rate() const {
    return make_rational(static_cast<long long>(layout().packet_length), static_cast<long long>(message_length()));
}

PacketSet apply_corruption(const PacketSet& sent, const Corruption& corruption) {
    PacketSet out = sent;
    for (std::size_t i = 0; i < corruption.altered.size(); ++i) out.at(corruption.altered[i]) = corruption.values.at(i);
    return out;
}

std::string to_string(AdversaryMode mode) {
    switch (mode) {
    case AdversaryMode::exhaustive:
        return "exhaustive";
    case AdversaryMode::random:
        return "random";
    case AdversaryMode::swap:
        return "swap";
    }
    return "unknown";
}

AdversaryMode parse_adversary(const std::string& name) {
    if (name == "exhaustive") return AdversaryMode::exhaustive;
    if (name == "random") return AdversaryMode::random;
    if (name == "swap") return AdversaryMode::swap;
    throw ParseError("unknown adversary mode: " + name);
}

std::uint64_t corruption_count(const PacketLayout& layout, std::size_t max_errors) {
    const std::uint64_t alternatives = layout.packet_alphabet() - 1;
    std::uint64_t total = 0;
    for (std::size_t t = 0; t <= std::min(max_errors, layout.packets); ++t) {
        const std::uint64_t ways = checked_binomial(layout.packets, t);
        const std::uint64_t values = checked_pow(alternatives, t);
        if (ways != 0 && values > UINT64_MAX / ways) return UINT64_MAX;
        const std::uint64_t term = ways * values;
        if (total > UINT64_MAX - term) return UINT64_MAX;
        total += term;
    }
    return total;
}

void for_each_corruption(const PacketLayout& layout, const PacketSet& sent, std::size_t max_errors,
                         const std::function<bool(const Corruption&)>& fn) {
    require_layout(layout, sent);
    const std::uint64_t alphabet = layout.packet_alphabet();
    if (alphabet == UINT64_MAX) throw BudgetExceeded("packet alphabet", alphabet, kDefaultBudget);
    std::vector<std::uint64_t> original(layout.packets);
    for (std::size_t j = 0; j < layout.packets; ++j) original[j] = index_of_word(sent[j], layout.q);

    bool stop = false;
    Corruption c;
    // Values for the current support, one alternative index per altered packet.
    auto values = [&](auto&& self, std::size_t slot) -> void {
        if (stop) return;
        if (slot == c.altered.size()) {
            stop = !fn(c);
            return;
        }
        const std::uint64_t base = original[c.altered[slot]];
        for (std::uint64_t v = 1; v < alphabet && !stop; ++v) {
            c.values[slot] = word_from_index((base + v) % alphabet, layout.q, layout.packet_length);
            self(self, slot + 1);
        }
    };
    auto supports = [&](auto&& self, std::size_t next, std::size_t size) -> void {
        if (stop) return;
        if (c.altered.size() == size) {
            c.values.assign(size, Word{});
            values(values, 0);
            return;
        }
        for (std::size_t j = next; j < layout.packets && !stop; ++j) {
            c.altered.push_back(j);
            self(self, j + 1, size);
            c.altered.pop_back();
        }
    };
    for (std::size_t t = 0; t <= std::min(max_errors, layout.packets) && !stop; ++t) supports(supports, 0, t);
}

Corruption random_corruption(const PacketLayout& layout, const PacketSet& sent, std::size_t max_errors,
                             std::mt19937_64& rng) {
    const std::size_t t = std::uniform_int_distribution<std::size_t>(0, std::min(max_errors, layout.packets))(rng);
    std::vector<std::size_t> order(layout.packets);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Corruption c;
    c.altered.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    std::sort(c.altered.begin(), c.altered.end());
    std::uniform_int_distribution<Symbol> sym(0, layout.q - 1);
    for (auto j : c.altered) {
        Word w;
        do {
            w.assign(layout.packet_length, 0);
            for (auto& s : w) s = sym(rng);
        } while (w == sent[j]);
        c.values.push_back(std::move(w));
    }
    return c;
}

Corruption swap_corruption(const PacketSet& sent, const PacketSet& other, std::size_t max_errors,
                           std::mt19937_64& rng) {
    if (sent.size() != other.size()) throw InvalidParameters("swap_corruption: packet count mismatch");
    std::vector<std::size_t> order(sent.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(std::min(max_errors, sent.size()));
    std::sort(order.begin(), order.end());
    Corruption c;
    for (auto j : order) {
        if (sent[j] == other[j]) continue;
        c.altered.push_back(j);
        c.values.push_back(other[j]);
    }
    return c;
}

namespace {

struct Partial {
    std::uint64_t evaluations = 0;
    std::uint64_t wrong = 0;
    std::uint64_t erasures = 0;
    std::size_t max_erasures = 0;
    std::optional<TraceEvent> worst;
};

void record(Partial& p, TraceEvent&& event, const std::function<void(const TraceEvent&)>& trace) {
    ++p.evaluations;
    if (event.distortion.is_infinite()) {
        ++p.wrong;
    } else {
        const std::size_t e = erasure_count(event.output);
        p.erasures += e;
        p.max_erasures = std::max(p.max_erasures, e);
    }
    if (trace) trace(event);
    if (!p.worst || event.distortion > p.worst->distortion) p.worst = std::move(event);
}

// Merges `b` into `a`, where b covers later work units.
void merge(Partial& a, Partial&& b) {
    a.evaluations += b.evaluations;
    a.wrong += b.wrong;
    a.erasures += b.erasures;
    a.max_erasures = std::max(a.max_erasures, b.max_erasures);
    if (b.worst && (!a.worst || b.worst->distortion > a.worst->distortion)) a.worst = std::move(b.worst);
}

}  // namespace

DistortionReport worst_case_distortion(const VpecScheme& scheme, std::size_t max_errors,
                                       const DistortionOptions& options) {
    const PacketLayout layout = scheme.layout();
    layout.validate();
    const std::size_t k = scheme.message_length();
    if (max_errors >= layout.packets) throw InvalidParameters("error budget must be below the packet count");
    const bool exhaustive = options.mode == AdversaryMode::exhaustive;

    std::uint64_t units = options.trials;
    if (exhaustive) {
        units = checked_pow(layout.q, k);
        const std::uint64_t per = corruption_count(layout, max_errors);
        const std::uint64_t total = (per != 0 && units > UINT64_MAX / per) ? UINT64_MAX : units * per;
        require_budget("exhaustive adversary (messages x corruptions)", total, options.budget);
    }

    auto evaluate = [&](const Word& x, const PacketSet& sent, const Corruption& c, Partial& p) {
        TraceEvent event;
        event.output = scheme.decode(apply_corruption(sent, c));
        event.distortion = erasure_distortion(x, event.output);
        // Copies are only kept when the event is traced or becomes the new worst case.
        if (options.trace || !p.worst || event.distortion > p.worst->distortion) {
            event.message = x;
            event.corruption = c;
        }
        record(p, std::move(event), options.trace);
    };

    auto run_unit = [&](std::uint64_t unit, Partial& p) {
        if (exhaustive) {
            const Word x = word_from_index(unit, layout.q, k);
            const PacketSet sent = scheme.encode(x);
            for_each_corruption(layout, sent, max_errors, [&](const Corruption& c) {
                evaluate(x, sent, c, p);
                return true;
            });
            return;
        }
        std::mt19937_64 rng(lincode::derive_seed(options.seed, unit));
        std::uniform_int_distribution<Symbol> sym(0, layout.q - 1);
        Word x(k);
        for (auto& s : x) s = sym(rng);
        const PacketSet sent = scheme.encode(x);
        if (options.mode == AdversaryMode::random) {
            evaluate(x, sent, random_corruption(layout, sent, max_errors, rng), p);
        } else {
            Word other(k);
            for (auto& s : other) s = sym(rng);
            evaluate(x, sent, swap_corruption(sent, scheme.encode(other), max_errors, rng), p);
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (options.trace) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(units, 1)));

    std::vector<Partial> partials(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned w) {
        try {
            const std::uint64_t begin = units * w / threads;
            const std::uint64_t end = units * (w + 1) / threads;
            for (std::uint64_t u = begin; u < end; ++u) run_unit(u, partials[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Partial total;
    for (auto& p : partials) merge(total, std::move(p));

    DistortionReport report;
    report.exhaustive = exhaustive;
    report.evaluations = total.evaluations;
    report.wrong_symbol_events = total.wrong;
    report.max_erasures = total.max_erasures;
    if (total.worst) report.worst = total.worst->distortion;
    if (total.wrong > 0) {
        report.mean = Distortion::infinite();
    } else if (total.evaluations > 0) {
        report.mean = Distortion(Rational(total.erasures) /
                                 (Rational(total.evaluations) * static_cast<long long>(k)));
    }
    report.worst_case = std::move(total.worst);
    return report;
}

CodeTable tabulate(const VpecScheme& scheme, std::uint64_t budget) {
    CodeTable table;
    table.layout = scheme.layout();
    table.message_length = scheme.message_length();
    const std::uint64_t count = checked_pow(table.layout.q, table.message_length);
    require_budget("codeword table", count, budget);
    table.codewords.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        table.codewords.push_back(scheme.encode(word_from_index(m, table.layout.q, table.message_length)));
    }
    return table;
}

std::size_t packet_distance(const PacketSet& a, const PacketSet& b) {
    if (a.size() != b.size()) throw InvalidParameters("packet_distance: packet count mismatch");
    std::size_t d = 0;
    for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
    return d;
}

namespace {

// Codewords as rows of packet indices, for fast distance evaluation.
std::vector<std::vector<std::uint64_t>> packet_indices(const CodeTable& table) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(table.codewords.size());
    for (const auto& cw : table.codewords) {
        require_layout(table.layout, cw);
        std::vector<std::uint64_t> row;
        for (const auto& p : cw) row.push_back(index_of_word(p, table.layout.q));
        out.push_back(std::move(row));
    }
    return out;
}

std::size_t index_distance(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
    return d;
}

// Number of coordinates on which all listed messages agree.
std::size_t common_agreement(const std::vector<Word>& messages) {
    if (messages.empty()) return 0;
    std::size_t agree = 0;
    for (std::size_t i = 0; i < messages[0].size(); ++i) {
        bool all = true;
        for (const auto& m : messages) all = all && m[i] == messages[0][i];
        agree += all;
    }
    return agree;
}

void require_table(const CodeTable& table) {
    table.layout.validate();
    if (table.codewords.size() != checked_pow(table.layout.q, table.message_length)) {
        throw InvalidParameters("code table must list one codeword per message");
    }
}

}  // namespace

Lemma1Report verify_lemma1(const CodeTable& table, std::size_t max_errors, const Rational& max_distortion,
                           std::uint64_t budget) {
    require_table(table);
    if (max_distortion < 0 || max_distortion > 1) throw InvalidParameters("distortion must lie in [0, 1]");
    const std::uint64_t alphabet = table.layout.packet_alphabet();
    const std::uint64_t space = checked_pow(alphabet, table.layout.packets);
    require_budget("received-word space |Q|^N", space, budget);

    const auto idx = packet_indices(table);
    const std::size_t k = table.message_length;
    Lemma1Report report;
    report.required_distance = max_distortion == 0 ? 2 * max_errors + 1 : max_errors + 1;
    report.min_distance = table.layout.packets + 1;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const std::size_t d = index_distance(idx[a], idx[b]);
            if (d < report.min_distance) {
                report.min_distance = d;
                if (d < report.required_distance && report.distance_ok) {
                    report.distance_ok = false;
                    report.witness = table.codewords[b];
                }
            }
        }
    }

    // ceil((1 - D) k)
    const Rational need = (Rational(1) - max_distortion) * static_cast<long long>(k);
    report.required_agreement = static_cast<std::size_t>(floor_of(need));
    if (!is_integer(need)) ++report.required_agreement;
    report.min_agreement = k;

    std::vector<std::uint64_t> y(table.layout.packets);
    std::vector<Word> ball;
    for (std::uint64_t v = 0; v < space; ++v) {
        std::uint64_t rest = v;
        for (std::size_t j = table.layout.packets; j-- > 0;) {
            y[j] = rest % alphabet;
            rest /= alphabet;
        }
        ball.clear();
        for (std::size_t m = 0; m < idx.size(); ++m) {
            if (index_distance(idx[m], y) <= max_errors) ball.push_back(word_from_index(m, table.layout.q, k));
        }
        if (ball.empty()) continue;
        const std::size_t agree = common_agreement(ball);
        if (agree < report.min_agreement) report.min_agreement = agree;
        if (agree < report.required_agreement && report.agreement_ok) {
            report.agreement_ok = false;
            if (report.distance_ok) {
                PacketSet w;
                for (auto p : y) w.push_back(word_from_index(p, table.layout.q, table.layout.packet_length));
                report.witness = std::move(w);
            }
        }
    }
    report.holds = report.distance_ok && report.agreement_ok;
    return report;
}

BallDecodeResult ball_intersection_decode(const CodeTable& table, const PacketSet& received, std::size_t max_errors) {
    require_table(table);
    require_layout(table.layout, received);
    const std::size_t k = table.message_length;
    BallDecodeResult result;
    std::optional<Word> first;
    std::vector<bool> agree(k, true);
    for (std::size_t m = 0; m < table.codewords.size(); ++m) {
        if (packet_distance(table.codewords[m], received) > max_errors) continue;
        ++result.ball_size;
        const Word x = word_from_index(m, table.layout.q, k);
        if (!first) {
            first = x;
            continue;
        }
        for (std::size_t i = 0; i < k; ++i) agree[i] = agree[i] && x[i] == (*first)[i];
    }
    result.output.assign(k, std::nullopt);
    if (!first) {
        result.empty_ball = true;
        return result;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (agree[i]) result.output[i] = (*first)[i];
    }
    return result;
}

EnumeratedScheme::EnumeratedScheme(CodeTable table, std::size_t max_errors, Rational max_distortion)
    : table_(std::move(table)), max_errors_(max_errors), max_distortion_(std::move(max_distortion)) {
    require_table(table_);
}

PacketSet EnumeratedScheme::encode(const Word& message) const {
    if (message.size() != table_.message_length) throw InvalidParameters("message has wrong length");
    for (auto s : message) {
        if (s >= table_.layout.q) throw InvalidParameters("message symbol outside the alphabet");
    }
    return table_.codewords[index_of_word(message, table_.layout.q)];
}

ReconstructionWord EnumeratedScheme::decode(const PacketSet& received) const {
    return ball_intersection_decode(table_, received, max_errors_).output;
}

}  // namespace vpec::core
