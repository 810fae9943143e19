#include "holodiff/cli/report.hpp"

#include <fstream>

#include <fmt/format.h>

#include "holodiff/errors.hpp"
#include "holodiff/psl2mod3.hpp"

namespace holodiff::cli {
namespace {

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) throw ValidationError(where + ": expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError("missing field '" + where + key + "'");
    return *it;
}

std::int64_t integer(const Json& obj, const std::string& key, const std::string& where) {
    const Json& v = field(obj, key, where);
    if (!v.is_number_integer()) throw ValidationError("field '" + where + key + "' must be an integer");
    return v.get<std::int64_t>();
}

int small_integer(const Json& obj, const std::string& key, const std::string& where) {
    const std::int64_t v = integer(obj, key, where);
    if (v < 0 || v > 62) throw ValidationError("field '" + where + key + "' out of range");
    return static_cast<int>(v);
}

Json decomp_rows(const Decomp& d) {
    Json rows = Json::array();
    for (const auto& [label, mult] : d) {
        rows.push_back({{"socle", label.socle}, {"length", label.length}, {"mult", mult}, {"dim", mult * label.length}});
    }
    return rows;
}

Json group_json(const HypoGroup& g) {
    return {{"p", g.p()},         {"n", g.n()},         {"c", g.c()},
            {"chi_index", g.chi_index()}, {"action_unit", g.action_unit()}, {"order", g.order()},
            {"description", g.describe()}};
}

Json brauer_json(const BrauerChar& ch) {
    Json values = Json::array();
    for (const auto& v : ch.values()) values.push_back(cyclo_json(v));
    return values;
}

}  // namespace

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json cyclo_json(const CycloNumber& value) {
    Json coeffs = Json::object();
    for (const auto& [e, coeff] : value.terms()) coeffs[std::to_string(e)] = coeff.to_string();
    return {{"conductor", value.conductor()}, {"coeffs", std::move(coeffs)}};
}

RamInput parse_ram_input(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("ramification document must be a JSON object");
    const HypoGroup group(integer(doc, "p", ""), small_integer(doc, "n", ""), integer(doc, "c", ""),
                          integer(doc, "chi_index", ""), integer(doc, "action_unit", ""));
    RamInput input{group, small_integer(doc, "n_I", ""), integer(doc, "genus_Z", ""), {}};
    const Json& points = field(doc, "points", "");
    if (!points.is_array()) throw ValidationError("field 'points' must be an array");
    for (std::size_t k = 0; k < points.size(); ++k) {
        const std::string where = "points[" + std::to_string(k) + "].";
        const Json& pt = points[k];
        RamPoint rp;
        rp.wild_exp = small_integer(pt, "wild_exp", where);
        const Json& jumps = field(pt, "jumps", where);
        if (!jumps.is_array()) throw ValidationError("field '" + where + "jumps' must be an array");
        for (const auto& b : jumps) {
            if (!b.is_number_integer()) throw ValidationError("field '" + where + "jumps' must hold integers");
            rp.jumps.push_back(b.get<std::int64_t>());
        }
        rp.tame_order = integer(pt, "tame_order", where);
        rp.fund_char_exp = integer(pt, "fund_char_exp", where);
        rp.count = integer(pt, "count", where);
        input.points.push_back(std::move(rp));
    }
    validate(input);
    return input;
}

RamInput load_ram_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_ram_input(doc);
}

Json ram_input_json(const RamInput& input) {
    const HypoGroup& g = input.group;
    Json points = Json::array();
    for (const auto& pt : input.points) {
        points.push_back({{"wild_exp", pt.wild_exp},
                          {"jumps", pt.jumps},
                          {"tame_order", pt.tame_order},
                          {"fund_char_exp", pt.fund_char_exp},
                          {"count", pt.count}});
    }
    return {{"p", g.p()},           {"n", g.n()},         {"c", g.c()},
            {"chi_index", g.chi_index()}, {"action_unit", g.action_unit()}, {"n_I", input.n_I},
            {"genus_Z", input.genus_Z}, {"points", std::move(points)}};
}

Json decomp_report(const RamInput& input, const EngineResult& result, bool verbose) {
    Json report;
    report["group"] = group_json(input.group);
    report["n_I"] = input.n_I;
    report["genus"] = {{"Z", input.genus_Z}, {"Y", result.genus_Y}, {"X", result.genus_X}};
    if (verbose) {
        Json layers = Json::array();
        for (std::size_t j = 0; j < result.divisors.layer_count(); ++j) {
            Json layer;
            layer["index"] = j;
            layer["degree"] = result.divisors.degree[j];
            layer["divisor"] = result.divisors.multiplicity[j];
            layer["regular_multiplicity"] = result.regular_multiplicities[j];
            layer["character"] = brauer_json(result.layer_characters[j]);
            layer["projectives"] = decomp_rows(result.layer_decomps[j].projectives);
            layer["chi_simple"] = result.layer_decomps[j].has_chi_simple;
            layers.push_back(std::move(layer));
        }
        report["layers"] = std::move(layers);
    }
    report["summands"] = decomp_rows(result.assembled.decomp);
    report["total_dimension"] = dimension(result.assembled.decomp);
    return report;
}

std::string decomp_text(const Json& report) {
    std::string out;
    const Json& g = report["group"];
    out += fmt::format("group            {}\n", g["description"].get<std::string>());
    out += fmt::format("wild inertia     p^{}\n", report["n_I"].get<int>());
    const Json& genus = report["genus"];
    out += fmt::format("genus            g(Z)={} g(Y)={} g(X)={}\n", genus["Z"].get<std::int64_t>(),
                       genus["Y"].get<std::int64_t>(), genus["X"].get<std::int64_t>());
    if (report.contains("layers")) {
        out += "layers\n";
        for (const auto& layer : report["layers"]) {
            std::string divisor;
            for (const auto& d : layer["divisor"]) divisor += fmt::format(" {}", d.get<std::int64_t>());
            std::string proj;
            for (const auto& row : layer["projectives"]) {
                proj += fmt::format(" {}*P({})", row["mult"].get<std::int64_t>(), row["socle"].get<std::int64_t>());
            }
            out += fmt::format("  j={:<4} deg D_j={:<6} d=[{} ] n_j={}{}{}\n", layer["index"].get<std::size_t>(),
                               layer["degree"].get<std::int64_t>(), divisor,
                               layer["regular_multiplicity"].get<std::int64_t>(), proj,
                               layer["chi_simple"].get<bool>() ? " + S_chi" : "");
        }
    }
    out += fmt::format("{:>8} {:>8} {:>8} {:>10}\n", "socle", "length", "mult", "dim");
    for (const auto& row : report["summands"]) {
        out += fmt::format("{:>8} {:>8} {:>8} {:>10}\n", row["socle"].get<std::int64_t>(), row["length"].get<std::int64_t>(),
                           row["mult"].get<std::int64_t>(), row["dim"].get<std::int64_t>());
    }
    out += fmt::format("total dimension  {}\n", report["total_dimension"].get<std::int64_t>());
    return out;
}

// ---------------------------------------------------------------------------

Json psl2_report(std::int64_t ell, bool verbose) {
    using namespace psl2;
    const FullDecomposition full = full_decomposition(ell);
    const Psl2Case& c = full.psl2;
    Json report;
    report["ell"] = c.ell;
    report["epsilon"] = c.epsilon;
    report["n"] = c.n;
    report["m"] = c.m;
    report["case"] = c.case_id;
    report["genus"] = genus(ell);
    if (ell % 4 == 3) report["class_number"] = class_number(ell);
    report["ambiguous"] = full.ambiguous();

    Json variants = Json::array();
    for (const auto& v : full.variants) {
        const BlockData& bd = v.blocks;
        Json summands = Json::array();
        for (std::size_t i = 0; i < v.decomp.projective.size(); ++i) {
            const std::int64_t mult = v.decomp.projective[i];
            if (mult == 0) continue;
            const std::int64_t dim = bd.projective_dimension(i);
            summands.push_back({{"module", projective_name(bd, i)},
                                {"kind", "projective"},
                                {"block", bd.blocks[bd.simples[i].block].name},
                                {"mult", mult},
                                {"dim", dim * mult}});
        }
        for (const auto& u : v.decomp.uniserials) {
            summands.push_back({{"module", uniserial_name(bd, u)},
                                {"kind", "uniserial"},
                                {"block", bd.blocks[bd.simples[u.socle].block].name},
                                {"mult", 1},
                                {"dim", bd.uniserial_char(u.socle, u.length).degree()}});
        }
        Json blocks = Json::array();
        for (const auto& r : congruence_report(v)) {
            if (!verbose && !r.has_projective && r.uniserial_length == 0) continue;
            blocks.push_back({{"block", r.block},
                              {"defect", r.defect},
                              {"has_projective", r.has_projective},
                              {"uniserial_length", r.uniserial_length},
                              {"constituents", r.constituents},
                              {"congruence", r.congruence}});
        }
        variants.push_back({{"s01", v.s01},
                            {"summands", std::move(summands)},
                            {"total_dimension", v.decomp.total_dimension},
                            {"blocks", std::move(blocks)}});
    }
    report["variants"] = std::move(variants);

    const N1Decomp n1 = n1_decomposition(c);
    Json n1_rows = Json::array();
    for (const auto& [label, mult] : n1) {
        N1Decomp single{{label, 1}};
        n1_rows.push_back({{"module", n1_label_name(label)}, {"mult", mult}, {"dim", n1_dimension(single) * mult}});
    }
    report["n1"] = {{"summands", std::move(n1_rows)}, {"total_dimension", n1_dimension(n1)}};

    Json h0 = Json::array();
    for (std::size_t i = 0; i < full.classes->size(); ++i) {
        const auto& cl = full.classes->classes()[i];
        h0.push_back({{"class", cl.name()}, {"size", cl.size}, {"value", cyclo_json(full.h0.at(i))}});
    }
    report["h0"] = std::move(h0);

    if (verbose) {
        Json restrictions = Json::array();
        for (auto s : restriction_subgroups(c)) {
            const RestrictionResult r = restriction_decomposition(ell, s);
            restrictions.push_back({{"subgroup", subgroup_name(s)},
                                    {"input", ram_input_json(r.input)},
                                    {"summands", decomp_rows(r.assembled.decomp)}});
        }
        report["restrictions"] = std::move(restrictions);
    }
    return report;
}

std::string psl2_text(const Json& report) {
    std::string out;
    out += fmt::format("l = {}  case {}  (epsilon={}, n={}, m={})  genus {}", report["ell"].get<std::int64_t>(),
                       report["case"].get<int>(), report["epsilon"].get<int>(), report["n"].get<int>(),
                       report["m"].get<std::int64_t>(), report["genus"].get<std::int64_t>());
    if (report.contains("class_number")) out += fmt::format("  h = {}", report["class_number"].get<std::int64_t>());
    out += "\n";
    if (report["ambiguous"].get<bool>()) out += "AMBIGUOUS: both choices of s01 give admissible decompositions\n";
    for (const auto& v : report["variants"]) {
        if (v["s01"].get<int>() != 0) out += fmt::format("s01 = {}\n", v["s01"].get<int>());
        for (const auto& row : v["summands"]) {
            out += fmt::format("  {:>4} x {:<22} dim {:>10}   {}\n", row["mult"].get<std::int64_t>(),
                               row["module"].get<std::string>(), row["dim"].get<std::int64_t>(),
                               row["block"].get<std::string>());
        }
        out += fmt::format("  total dimension {}\n", v["total_dimension"].get<std::int64_t>());
        std::string flagged;
        for (const auto& b : v["blocks"]) {
            if (b["congruence"].get<bool>()) flagged += " " + b["block"].get<std::string>();
        }
        out += fmt::format("  congruence blocks:{}\n", flagged.empty() ? " none" : flagged);
    }
    out += "N1 summands\n";
    for (const auto& row : report["n1"]["summands"]) {
        out += fmt::format("  {:>4} x {:<22} dim {:>10}\n", row["mult"].get<std::int64_t>(), row["module"].get<std::string>(),
                           row["dim"].get<std::int64_t>());
    }
    if (report.contains("restrictions")) {
        for (const auto& r : report["restrictions"]) {
            out += fmt::format("restriction to {}\n", r["subgroup"].get<std::string>());
            for (const auto& row : r["summands"]) {
                out += fmt::format("  {:>6} x U({}, {})\n", row["mult"].get<std::int64_t>(), row["socle"].get<std::int64_t>(),
                                   row["length"].get<std::int64_t>());
            }
        }
    }
    return out;
}

}  // namespace holodiff::cli
