#include "vpec/io.hpp"

#include <fstream>
#include <sstream>

namespace vpec::io {

json code_to_json(const lincode::LinearCode& code, std::size_t packet_length,
                  const std::optional<lincode::GrsParams>& grs) {
    const auto& f = code.field();
    json j;
    j["q"] = f.order();
    j["p"] = f.characteristic();
    j["m"] = f.degree();
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["generator"] = code.generator();
    if (packet_length != 1) j["packet_length"] = packet_length;
    if (grs) j["grs"] = {{"points", grs->points}, {"multipliers", grs->multipliers}};
    return j;
}

namespace {

template <typename T>
T field_of(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

CodeFile code_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("code file must be a JSON object");
    const auto p = field_of<std::uint32_t>(j, "p");
    const auto m = field_of<std::uint32_t>(j, "m");
    const auto q = field_of<std::uint32_t>(j, "q");
    const auto n = field_of<std::size_t>(j, "n");
    const auto k = field_of<std::size_t>(j, "k");
    const auto generator = field_of<Matrix>(j, "generator");
    try {
        auto field = gf::Field::build(p, m);
        if (field.order() != q) throw ParseError("q does not equal p^m");
        lincode::LinearCode code(field, generator);
        if (code.length() != n || code.dimension() != k) throw ParseError("n or k disagrees with the generator");
        CodeFile out{std::move(code), 1, std::nullopt};
        if (j.contains("packet_length")) {
            out.packet_length = field_of<std::size_t>(j, "packet_length");
            if (out.packet_length == 0 || n % out.packet_length != 0) {
                throw ParseError("packet_length must divide n");
            }
        }
        if (j.contains("grs")) {
            const auto& g = j.at("grs");
            out.grs = lincode::GrsParams{field_of<std::vector<gf::Element>>(g, "points"),
                                         field_of<std::vector<gf::Element>>(g, "multipliers")};
        }
        return out;
    } catch (const InvalidParameters& e) {
        throw ParseError(std::string("invalid code: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::vector<Word> read_rows(const json& j, const std::string& key) {
    return field_of<std::vector<Word>>(j, key.c_str());
}

json reconstruction_json(const core::ReconstructionWord& word) {
    json out = json::array();
    for (const auto& s : word) {
        if (s) {
            out.push_back(*s);
        } else {
            out.push_back(nullptr);
        }
    }
    return out;
}

json trace_json(const core::TraceEvent& event) {
    return {{"msg", event.message},
            {"altered", event.corruption.altered},
            {"values", event.corruption.values},
            {"output", reconstruction_json(event.output)},
            {"distortion", event.distortion.to_string()}};
}

namespace {

void csv_header(std::ostringstream& out, const json& config) {
    out << "# config " << config.dump() << '\n';
}

void csv_row(std::ostringstream& out, const std::string& name, const bounds::RdPoint& p) {
    out << name << ',' << to_exact(p.R) << ',' << to_exact(p.D) << ',' << to_decimal(p.R) << ','
        << to_decimal(p.D) << '\n';
}

json curve_json(const bounds::RdCurve& c) {
    json points = json::array();
    for (const auto& p : c.points) {
        points.push_back({{"R_exact", to_exact(p.R)},
                          {"D_exact", to_exact(p.D)},
                          {"R_dec", to_decimal(p.R)},
                          {"D_dec", to_decimal(p.D)}});
    }
    return {{"curve", c.name}, {"kind", bounds::to_string(c.kind)}, {"note", c.note}, {"points", points}};
}

}  // namespace

std::string curves_csv(const bounds::CurveSet& set, const json& config) {
    std::ostringstream out;
    csv_header(out, config);
    for (const auto& o : set.omitted) out << "# omitted " << o.name << ": " << o.reason << '\n';
    for (const auto& c : set.curves) {
        out << "# curve " << c.name << " (" << bounds::to_string(c.kind) << ")";
        if (!c.note.empty()) out << ": " << c.note;
        out << '\n';
    }
    out << "curve,R_exact,D_exact,R_dec,D_dec\n";
    for (const auto& c : set.curves) {
        for (const auto& p : c.points) csv_row(out, c.name, p);
    }
    return out.str();
}

json curves_json(const bounds::CurveSet& set, const json& config) {
    json curves = json::array();
    for (const auto& c : set.curves) curves.push_back(curve_json(c));
    json omitted = json::array();
    for (const auto& o : set.omitted) omitted.push_back({{"curve", o.name}, {"reason", o.reason}});
    return {{"config", config}, {"curves", curves}, {"omitted", omitted}};
}

std::string asymptotic_csv(const bounds::AsymptoticCurves& a, const json& config) {
    std::ostringstream out;
    csv_header(out, config);
    out << "# R is the overall rate (sum over packets), theta = " << to_exact(a.theta) << '\n';
    if (a.polytope_diverges) out << "# polytope reference omitted: its distortion diverges as N grows\n";
    for (const auto& c : a.comparisons) {
        out << "# L=" << c.list_size << ": L-MDS distortion " << to_exact(c.lmds_distortion)
            << ", MDS distortion at the same rate " << to_exact(c.mds_distortion)
            << (c.asserted ? " (improvement asserted)" : " (outside the proven regime)") << '\n';
    }
    out << "curve,R_exact,D_exact,R_dec,D_dec\n";
    for (const auto& c : a.curves) {
        for (const auto& p : c.points) csv_row(out, c.name, p);
    }
    return out.str();
}

json asymptotic_json(const bounds::AsymptoticCurves& a, const json& config) {
    json curves = json::array();
    for (const auto& c : a.curves) curves.push_back(curve_json(c));
    json comparisons = json::array();
    for (const auto& c : a.comparisons) {
        comparisons.push_back({{"L", c.list_size},
                               {"asserted", c.asserted},
                               {"lmds_distortion", to_exact(c.lmds_distortion)},
                               {"mds_distortion", to_exact(c.mds_distortion)}});
    }
    return {{"config", config},
            {"theta", to_exact(a.theta)},
            {"polytope_diverges", a.polytope_diverges},
            {"curves", curves},
            {"comparisons", comparisons}};
}

core::CodeTable linear_code_table(const lincode::LinearCode& code, std::size_t packet_length,
                                  std::uint64_t budget) {
    if (packet_length == 0 || code.length() % packet_length != 0) {
        throw InvalidParameters("packet length must divide the code length");
    }
    core::CodeTable table;
    table.layout = {code.length() / packet_length, packet_length, code.field().order()};
    table.message_length = code.dimension();
    const auto words = lincode::enumerate_codewords(code, budget);
    table.codewords.reserve(words.size());
    for (const auto& w : words) {
        core::PacketSet packets;
        for (std::size_t start = 0; start < w.size(); start += packet_length) {
            packets.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start),
                                 w.begin() + static_cast<std::ptrdiff_t>(start + packet_length));
        }
        table.codewords.push_back(std::move(packets));
    }
    return table;
}

lincode::LinearCode scheme_generator(const core::VpecScheme& scheme) {
    const auto layout = scheme.layout();
    const std::size_t k = scheme.message_length();
    Matrix g;
    for (std::size_t i = 0; i < k; ++i) {
        Word unit(k, 0);
        unit[i] = 1;
        Word row;
        for (const auto& packet : scheme.encode(unit)) row.insert(row.end(), packet.begin(), packet.end());
        g.push_back(std::move(row));
    }
    return lincode::LinearCode(gf::Field::of_order(layout.q), std::move(g));
}

}  // namespace vpec::io
