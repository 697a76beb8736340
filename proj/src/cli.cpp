#include "vpec/cli.hpp"

#include "vpec/bounds.hpp"
#include "vpec/cons_lmds.hpp"
#include "vpec/cons_rep.hpp"
#include "vpec/core.hpp"
#include "vpec/io.hpp"
#include "vpec/lincode.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>

namespace vpec::cli {

namespace {

using io::json;

/// Signals a nonzero exit after the report has been written.
struct ExitWith {
    int code;
};

/// Flag values resolved with precedence: command line, then the --config JSON file, then defaults.
/// Every resolved value is recorded so it can be echoed into the output.
class Params {
public:
    explicit Params(CLI::App* app) : app_(app) {
        app_->add_option("--config", config_path_, "JSON file with default values for any option");
    }

    void value(const std::string& name, const std::string& help) {
        options_[name] = app_->add_option("--" + name, scalars_[name], help);
    }
    void list(const std::string& name, const std::string& help) {
        options_[name] = app_->add_option("--" + name, lists_[name], help);
    }
    void flag(const std::string& name, const std::string& help) {
        options_[name] = app_->add_flag("--" + name, flags_[name], help);
    }

    void load_config() {
        if (config_path_.empty()) return;
        config_ = io::read_json_file(config_path_);
        if (!config_.is_object()) throw ParseError("config file must hold a JSON object");
    }

    bool given(const std::string& name) const {
        return options_.at(name)->count() > 0 || config_.contains(key(name));
    }

    std::optional<std::string> raw(const std::string& name) const {
        if (options_.at(name)->count() > 0) return scalars_.at(name);
        const auto k = key(name);
        if (config_.contains(k)) {
            const auto& v = config_.at(k);
            return v.is_string() ? v.get<std::string>() : v.dump();
        }
        return std::nullopt;
    }

    std::string text(const std::string& name, const std::string& fallback) {
        const std::string v = raw(name).value_or(fallback);
        effective_[key(name)] = v;
        return v;
    }

    std::uint64_t integer(const std::string& name, std::optional<std::uint64_t> fallback = std::nullopt) {
        const auto r = raw(name);
        if (!r && !fallback) throw ParseError("missing required option --" + name);
        const std::uint64_t v = r ? parse_uint(name, *r) : *fallback;
        effective_[key(name)] = v;
        return v;
    }

    std::optional<std::uint64_t> maybe_integer(const std::string& name) {
        if (!given(name)) return std::nullopt;
        return integer(name);
    }

    Rational rational(const std::string& name, std::optional<Rational> fallback = std::nullopt) {
        const auto r = raw(name);
        if (!r && !fallback) throw ParseError("missing required option --" + name);
        const Rational v = r ? parse_rational(unquote(*r)) : *fallback;
        effective_[key(name)] = to_exact(v);
        return v;
    }

    std::vector<std::uint64_t> integers(const std::string& name, std::vector<std::uint64_t> fallback) {
        std::vector<std::uint64_t> out;
        if (options_.at(name)->count() > 0) {
            for (const auto& s : lists_.at(name)) out.push_back(parse_uint(name, s));
        } else if (config_.contains(key(name))) {
            const auto& v = config_.at(key(name));
            if (v.is_array()) {
                for (const auto& x : v) out.push_back(parse_uint(name, x.is_string() ? x.get<std::string>() : x.dump()));
            } else {
                out.push_back(parse_uint(name, v.is_string() ? v.get<std::string>() : v.dump()));
            }
        } else {
            out = std::move(fallback);
        }
        effective_[key(name)] = out;
        return out;
    }

    bool enabled(const std::string& name) {
        bool v = flags_.at(name);
        if (!v && config_.contains(key(name))) {
            const auto& c = config_.at(key(name));
            if (!c.is_boolean()) throw ParseError("config key '" + key(name) + "' must be a boolean");
            v = c.get<bool>();
        }
        effective_[key(name)] = v;
        return v;
    }

    const json& effective() const { return effective_; }

private:
    static std::string key(const std::string& name) {
        std::string k = name;
        for (auto& c : k) {
            if (c == '-') c = '_';
        }
        return k;
    }

    static std::string unquote(const std::string& s) {
        if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
        return s;
    }

    static std::uint64_t parse_uint(const std::string& name, const std::string& text) {
        const std::string s = unquote(text);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("--" + name + " expects a non-negative integer, got '" + s + "'");
        }
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError("--" + name + " is out of range");
        }
    }

    CLI::App* app_;
    std::string config_path_;
    json config_ = json::object();
    std::map<std::string, CLI::Option*> options_;
    std::map<std::string, std::string> scalars_;
    std::map<std::string, std::vector<std::string>> lists_;
    std::map<std::string, bool> flags_;
    json effective_ = json::object();
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("VPEC_BUDGET")) {
        const std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("VPEC_BUDGET must be a non-negative integer");
        }
        return std::stoull(s);
    }
    return kDefaultBudget;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + path + "'");
    file << content;
}

std::string as_text(const json& j) { return j.dump(2) + "\n"; }

core::AdversaryMode adversary_of(Params& p) { return core::parse_adversary(p.text("adversary", "exhaustive")); }

rep::RepDecoder decoder_of(Params& p) {
    const auto name = p.text("decoder", "alg2");
    if (name == "alg1") return rep::RepDecoder::alg1;
    if (name == "alg2") return rep::RepDecoder::alg2;
    throw ParseError("unknown decoder '" + name + "' (expected alg1 or alg2)");
}

// ---------------------------------------------------------------------------
// Scheme construction shared by simulate, verify and decode.

struct BuiltScheme {
    std::unique_ptr<core::VpecScheme> scheme;
    json params;
    std::unique_ptr<lmds::LmdsVpecCode> lmds;  // set for the L-MDS construction
    std::unique_ptr<rep::RepetitionCode> rep;
};

void add_scheme_options(Params& p) {
    p.value("construction", "rep or lmds");
    p.value("t", "maximum number of altered packets T");
    p.value("s", "erasure parameter s (rep, default T)");
    p.value("q", "alphabet size (default 2 for rep, 7 for lmds)");
    p.value("rounds", "batched rounds for rep (default 1)");
    p.value("decoder", "alg1 or alg2 (rep, default alg2)");
    p.value("n", "number of packets N (lmds)");
    p.value("l", "list size L (lmds, default 2)");
    p.value("code", "base code JSON file (lmds); searched for when absent");
    p.value("search-seed", "seed for the base code search (default 1)");
    p.value("max-iters", "search iterations (default 10000)");
}

BuiltScheme build_scheme(Params& p, std::uint64_t budget) {
    BuiltScheme b;
    const auto construction = p.text("construction", "");
    const auto t = p.integer("t");
    if (construction == "rep") {
        const auto s = p.integer("s", t);
        const auto q = static_cast<std::uint32_t>(p.integer("q", 2));
        const auto rounds = p.integer("rounds", 1);
        const auto decoder = decoder_of(p);
        b.rep = std::make_unique<rep::RepetitionCode>(t, s, q);
        b.scheme = std::make_unique<rep::RepetitionScheme>(*b.rep, rounds, decoder);
        b.params = {{"T", t}, {"s", s}, {"q", q}, {"N", b.rep->packets()}, {"rounds", rounds},
                    {"decoder", decoder == rep::RepDecoder::alg1 ? "alg1" : "alg2"}};
        return b;
    }
    if (construction == "lmds") {
        const auto l = p.integer("l", 2);
        std::optional<lincode::LinearCode> base;
        json origin;
        if (p.given("code")) {
            const auto path = p.text("code", "");
            base = io::code_from_json(io::read_json_file(path)).code;
            origin = {{"code_file", path}};
        } else {
            const auto n = p.integer("n");
            const auto q = static_cast<std::uint32_t>(p.integer("q", 7));
            const auto seed = p.integer("search-seed", 1);
            const auto iters = p.integer("max-iters", 10'000);
            const auto params = lmds::lmds_parameters(n, t, l);
            const auto found = lincode::search_l_mds(gf::Field::of_order(q), n, params.dimension, l, seed, iters, budget);
            if (!found) throw ExitWith{kSearchExhausted};
            base = found->code;
            origin = {{"search_seed", seed}, {"search_iteration", found->iteration},
                      {"points", found->params.points}, {"multipliers", found->params.multipliers}};
        }
        b.lmds = std::make_unique<lmds::LmdsVpecCode>(*base, t, l, budget);
        const auto& lp = b.lmds->parameters();
        b.params = {{"T", t}, {"L", l}, {"N", lp.packets}, {"q", base->field().order()},
                    {"k", lp.message_length}, {"rho", to_exact(lp.rho)}, {"base", origin}};
        b.scheme = std::make_unique<lmds::LmdsVpecCode>(*b.lmds);
        return b;
    }
    throw ParseError("--construction must be rep or lmds");
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_bounds(Params& p, std::ostream& out, std::ostream& err) {
    const auto n = p.integer("n");
    const auto t = p.integer("t");
    bounds::CurveOptions opts;
    const auto ls = p.integers("l", {2, 3});
    opts.list_sizes.assign(ls.begin(), ls.end());
    if (const auto q = p.maybe_integer("q")) opts.q = static_cast<std::uint32_t>(*q);
    const auto format = p.text("format", "csv");
    const auto path = p.text("out", "-");
    if (format != "csv" && format != "json") throw ParseError("--format must be csv or json");

    if (n <= t || t == 0) {
        err << json{{"error", "infeasible"}, {"reason", "need N > T >= 1"}}.dump() << '\n';
        return kInfeasible;
    }
    const auto set = bounds::all_curves(n, t, opts);
    const json config = {{"command", "bounds"}, {"options", p.effective()}};
    write_output(path, format == "csv" ? io::curves_csv(set, config) : as_text(io::curves_json(set, config)), out);
    if (n < 2 * t + 1) {
        err << json{{"error", "infeasible"},
                    {"reason", "N < 2T+1: zero distortion is unattainable; only the singleton converse was emitted"}}
                   .dump()
            << '\n';
        return kInfeasible;
    }
    return kOk;
}

int cmd_simulate(Params& p, std::ostream& out, std::ostream& err) {
    const auto budget = p.integer("budget", default_budget());
    auto built = build_scheme(p, budget);
    core::DistortionOptions opts;
    opts.mode = adversary_of(p);
    opts.trials = p.integer("trials", 10'000);
    opts.seed = p.integer("seed", 0);
    opts.threads = static_cast<unsigned>(p.integer("threads", 0));
    opts.budget = budget;
    const bool no_timing = p.enabled("no-timing");
    const auto dump_path = p.text("dump", "");
    const auto path = p.text("out", "-");

    std::ofstream dump;
    if (!dump_path.empty()) {
        dump.open(dump_path, std::ios::binary);
        if (!dump) throw ParseError("cannot write '" + dump_path + "'");
        opts.trace = [&dump](const core::TraceEvent& e) { dump << io::trace_json(e).dump() << '\n'; };
    }

    const auto start = std::chrono::steady_clock::now();
    core::DistortionReport rep;
    try {
        rep = core::worst_case_distortion(*built.scheme, built.scheme->error_budget(), opts);
    } catch (const BudgetExceeded& e) {
        err << e.what() << "; try --adversary random\n";
        return kBudget;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    const core::Distortion allowed(built.scheme->distortion_budget());
    json report = {{"construction", p.text("construction", "")},
                   {"params", built.params},
                   {"adversary", core::to_string(opts.mode)},
                   {"seed", opts.seed},
                   {"trials_or_space_size", rep.evaluations},
                   {"exhaustive", rep.exhaustive},
                   {"worst_distortion", rep.worst.to_string()},
                   {"mean_distortion", rep.mean.to_string()},
                   {"distortion_budget", to_exact(built.scheme->distortion_budget())},
                   {"wrong_symbol_events", rep.wrong_symbol_events},
                   {"max_erasures", rep.max_erasures},
                   {"config", p.effective()}};
    if (rep.worst_case) report["worst_case"] = io::trace_json(*rep.worst_case);
    if (!no_timing) report["elapsed_ms"] = elapsed;
    write_output(path, as_text(report), out);

    if (rep.wrong_symbol_events > 0 || allowed < rep.worst) {
        err << "property violation: worst distortion " << rep.worst.to_string() << " exceeds budget "
            << allowed.to_string() << '\n';
        return kViolation;
    }
    return kOk;
}

int cmd_verify(Params& p, std::ostream& out, std::ostream& err) {
    const auto budget = p.integer("budget", default_budget());
    std::optional<lincode::LinearCode> code;
    std::size_t packet_length = 1;
    std::optional<core::CodeTable> table;
    json code_info;

    if (p.given("construction")) {
        auto built = build_scheme(p, budget);
        code = io::scheme_generator(*built.scheme);
        packet_length = built.scheme->layout().packet_length;
        code_info = {{"construction", p.text("construction", "")}, {"params", built.params}};
        if (p.given("write-code")) {
            write_output(p.text("write-code", ""), as_text(io::code_to_json(*code, packet_length)), out);
        }
    } else {
        const auto path = p.text("code", "");
        if (path.empty()) throw ParseError("verify needs --code or --construction");
        auto file = io::code_from_json(io::read_json_file(path));
        code = file.code;
        packet_length = file.packet_length;
        code_info = {{"code_file", path}};
    }
    code_info["n"] = code->length();
    code_info["k"] = code->dimension();
    code_info["q"] = code->field().order();
    code_info["packet_length"] = packet_length;

    json props = json::array();
    bool violated = false;
    bool precondition = false;

    if (p.enabled("lemma1")) {
        const auto t = p.integer("t");
        const auto d = p.rational("d");
        if (!table) table = io::linear_code_table(*code, packet_length, budget);
        const auto r = core::verify_lemma1(*table, t, d, budget);
        json entry = {{"property", "lemma1"},
                      {"pass", r.holds},
                      {"min_distance", r.min_distance},
                      {"required_distance", r.required_distance},
                      {"min_agreement", r.min_agreement},
                      {"required_agreement", r.required_agreement}};
        if (r.witness) entry["counterexample"] = *r.witness;
        violated = violated || !r.holds;
        props.push_back(entry);
    }
    if (const auto l = p.maybe_integer("lmds")) {
        json entry = {{"property", "l_mds"}, {"L", *l}};
        try {
            lincode::require_l_mds_preconditions(*code, *l);
            const auto radius = lincode::l_mds_radius(code->length(), code->dimension(), *l);
            const auto r = lincode::check_strongly_list_decodable(*code, radius, *l, budget);
            entry["pass"] = r.holds;
            entry["radius"] = to_exact(radius);
            entry["min_sum"] = r.extremal_value;
            if (r.witness) {
                entry["counterexample"] = {{"received", *r.witness}, {"codewords", r.witness_codewords}};
            }
            violated = violated || !r.holds;
        } catch (const InvalidParameters& e) {
            entry["pass"] = false;
            entry["precondition_failed"] = e.what();
            precondition = true;
        }
        props.push_back(entry);
    }
    if (p.given("list-radius")) {
        const auto radius = p.integer("list-radius");
        const auto l = p.integer("list-size");
        const auto r = lincode::check_list_decodable(*code, radius, l, budget);
        json entry = {{"property", "list_decodable"}, {"radius", radius}, {"L", l},
                      {"pass", r.holds}, {"max_list", r.extremal_value}};
        if (r.witness) entry["counterexample"] = {{"received", *r.witness}, {"codewords", r.witness_codewords}};
        violated = violated || !r.holds;
        props.push_back(entry);
    }
    if (props.empty()) throw ParseError("nothing to verify: pass --lemma1, --lmds or --list-radius");

    const json report = {{"code", code_info}, {"properties", props}, {"config", p.effective()}};
    write_output(p.text("out", "-"), as_text(report), out);
    if (violated) {
        err << "property violation\n";
        return kViolation;
    }
    if (precondition) {
        err << "precondition failure\n";
        return kInfeasible;
    }
    return kOk;
}

int cmd_search(Params& p, std::ostream& out, std::ostream& err) {
    const auto n = p.integer("n");
    const auto k = p.integer("k");
    const auto l = p.integer("l");
    const auto q = static_cast<std::uint32_t>(p.integer("q"));
    const auto seed = p.integer("seed", 1);
    const auto iters = p.integer("max-iters", 10'000);
    const auto budget = p.integer("budget", default_budget());
    const auto field = gf::Field::of_order(q);
    const auto found = lincode::search_l_mds(field, n, k, l, seed, iters, budget);
    if (!found) {
        err << json{{"error", "search exhausted"}, {"iterations", iters}}.dump() << '\n';
        return kSearchExhausted;
    }
    const auto radius = lincode::l_mds_radius(n, k, l);
    const auto ordinary = static_cast<std::size_t>(floor_of(radius));
    json j = io::code_to_json(found->code, 1, found->params);
    j["search"] = {{"seed", seed},
                   {"iteration", found->iteration},
                   {"L", l},
                   {"strong_radius", to_exact(radius)},
                   {"l_mds", lincode::is_l_mds(found->code, l, budget)},
                   {"list_decodable_radius", ordinary},
                   {"list_decodable", lincode::is_list_decodable(found->code, ordinary, l, budget)},
                   {"min_distance", lincode::min_distance(found->code, budget)}};
    j["config"] = p.effective();
    write_output(p.text("out", "-"), as_text(j), out);
    return kOk;
}

int cmd_decode(Params& p, std::ostream& out, std::ostream&) {
    const auto budget = p.integer("budget", default_budget());
    auto built = build_scheme(p, budget);
    const auto input = io::read_json_file(p.text("input", ""));
    json report = {{"params", built.params}};
    if (built.lmds) {
        interleave::CodeArray array;
        if (input.contains("array")) {
            array = io::read_rows(input, "array");
        } else {
            array = built.lmds->depacketize(io::read_rows(input, "packets"));
        }
        const auto r = built.lmds->decode_array(array);
        report["output"] = io::reconstruction_json(r.output);
        report["erasures"] = core::erasure_count(r.output);
        report["codeword"] = r.codeword;
        report["list_size"] = r.list_size;
        report["erased_columns"] = r.erased_columns;
        report["empty_list"] = r.empty_list;
    } else {
        const auto packets = io::read_rows(input, "packets");
        const auto output = built.scheme->decode(packets);
        report["output"] = io::reconstruction_json(output);
        report["erasures"] = core::erasure_count(output);
    }
    report["config"] = p.effective();
    write_output(p.text("out", "-"), as_text(report), out);
    return kOk;
}

int cmd_figure(Params& p, std::ostream& out, std::ostream&) {
    const auto id = p.integer("id");
    const std::filesystem::path dir = p.text("out-dir", ".");
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& content) {
        const auto path = (dir / name).string();
        write_output(path, content, out);
        written.push_back(path);
    };
    auto panel = [&](std::size_t n, std::size_t t, std::vector<std::size_t> ls) {
        bounds::CurveOptions opts;
        opts.list_sizes = std::move(ls);
        const json config = {{"command", "figure"}, {"id", id}, {"N", n}, {"T", t}, {"L", opts.list_sizes}};
        emit("figure" + std::to_string(id) + "_N" + std::to_string(n) + "_T" + std::to_string(t) + ".csv",
             io::curves_csv(bounds::all_curves(n, t, opts), config));
    };
    switch (id) {
        case 1:
            panel(3, 1, {2});
            panel(5, 2, {2});
            break;
        case 2:
            panel(128, 18, {2, 3});
            break;
        case 3:
            for (const auto& theta : {make_rational(1, 10), make_rational(1, 20)}) {
                const json config = {{"command", "figure"}, {"id", id}, {"theta", to_exact(theta)}, {"L", {2, 3}}};
                const std::string tag = numerator(theta).str() + "_" + denominator(theta).str();
                emit("figure3_theta_" + tag + ".csv", io::asymptotic_csv(bounds::asymptotic_curves(theta, {2, 3}), config));
            }
            break;
        default:
            throw InvalidParameters("--id must be 1, 2 or 3");
    }
    for (const auto& w : written) out << w << '\n';
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variable packet-error coding: bounds, constructions and adversarial simulation"};
    app.require_subcommand(1);

    auto* bounds_cmd = app.add_subcommand("bounds", "Converse and achievability curves for (N, T)");
    Params bounds_p(bounds_cmd);
    bounds_p.value("n", "number of packets N");
    bounds_p.value("t", "maximum number of altered packets T");
    bounds_p.list("l", "list sizes for the L-MDS construction (repeatable, default 2 3)");
    bounds_p.value("q", "alphabet size (annotation only)");
    bounds_p.value("format", "csv or json");
    bounds_p.value("out", "output file, - for stdout");

    auto* sim_cmd = app.add_subcommand("simulate", "Worst-case distortion of a construction under an adversary");
    Params sim_p(sim_cmd);
    add_scheme_options(sim_p);
    sim_p.value("adversary", "exhaustive, random or swap");
    sim_p.value("trials", "trials for random and swap (default 10000)");
    sim_p.value("seed", "adversary seed (default 0)");
    sim_p.value("threads", "worker threads, 0 for all cores");
    sim_p.value("budget", "enumeration budget (default VPEC_BUDGET or 10^7)");
    sim_p.value("dump", "write every evaluation as JSON lines to this file");
    sim_p.flag("no-timing", "omit elapsed_ms so reruns are byte-identical");
    sim_p.value("out", "output file, - for stdout");

    auto* verify_cmd = app.add_subcommand("verify", "Check code properties exhaustively");
    Params verify_p(verify_cmd);
    add_scheme_options(verify_p);
    verify_p.flag("lemma1", "check the distance and agreement conditions at (T, D)");
    verify_p.value("d", "distortion D as p/q (for --lemma1)");
    verify_p.value("lmds", "check the L-MDS property for this L");
    verify_p.value("list-radius", "check (radius, L)-list decodability");
    verify_p.value("list-size", "L for --list-radius");
    verify_p.value("write-code", "write the generator of --construction to this file");
    verify_p.value("budget", "enumeration budget");
    verify_p.value("out", "output file, - for stdout");

    auto* search_cmd = app.add_subcommand("search-lmds", "Randomized search for an L-MDS GRS code");
    Params search_p(search_cmd);
    search_p.value("n", "code length");
    search_p.value("k", "dimension");
    search_p.value("l", "list size L");
    search_p.value("q", "field size (prime power)");
    search_p.value("seed", "search seed (default 1)");
    search_p.value("max-iters", "iterations (default 10000)");
    search_p.value("budget", "enumeration budget");
    search_p.value("out", "output file, - for stdout");

    auto* decode_cmd = app.add_subcommand("decode", "Decode one received packet set");
    Params decode_p(decode_cmd);
    add_scheme_options(decode_p);
    decode_p.value("input", "JSON file with \"packets\" (or \"array\" for lmds)");
    decode_p.value("budget", "enumeration budget");
    decode_p.value("out", "output file, - for stdout");

    auto* figure_cmd = app.add_subcommand("figure", "Curve data for figure 1, 2 or 3, one CSV per panel");
    Params figure_p(figure_cmd);
    figure_p.value("id", "figure number");
    figure_p.value("out-dir", "directory for the CSV files (default .)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    struct Entry {
        CLI::App* cmd;
        Params* params;
        int (*run)(Params&, std::ostream&, std::ostream&);
    };
    const Entry entries[] = {{bounds_cmd, &bounds_p, cmd_bounds},  {sim_cmd, &sim_p, cmd_simulate},
                             {verify_cmd, &verify_p, cmd_verify},  {search_cmd, &search_p, cmd_search},
                             {decode_cmd, &decode_p, cmd_decode},  {figure_cmd, &figure_p, cmd_figure}};
    try {
        for (const auto& e : entries) {
            if (e.cmd->parsed()) {
                e.params->load_config();
                return e.run(*e.params, out, err);
            }
        }
        return kParse;
    } catch (const ExitWith& e) {
        err << "search for a base code exhausted its iterations\n";
        return e.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const InvalidParameters& e) {
        err << json{{"error", "infeasible"}, {"reason", e.what()}}.dump() << '\n';
        return kInfeasible;
    }
}

}  // namespace vpec::cli
