#include "report_json.hpp"

namespace spherediv::cli {

using spherediv::to_json;

Json to_json(const ObstructionReport& rep)
{
    Json j;
    j["mode"] = rep.mode;
    j["exact"] = rep.exact;
    j["d"] = rep.d;
    j["r"] = rep.r;
    j["n_max"] = rep.n_max;
    Json degrees = Json::array();
    for (const auto& x : rep.degrees) {
        Json e;
        e["n"] = x.n;
        e["dimension"] = x.dimension;
        e["det"] = x.det;
        e["det_approx"] = x.det_approx;
        e["status"] = to_string(x.status);
        if (!x.note.empty()) e["note"] = x.note;
        degrees.push_back(std::move(e));
    }
    j["degrees"] = std::move(degrees);
    j["all_obstructed"] = rep.all_obstructed();
    j["rigorous"] = rep.exact;
    j["disclaimer"] = rep.disclaimer;
    return j;
}

Json to_json(const ArcSet& arcs)
{
    Json a = Json::array();
    for (const auto& arc : arcs.arcs) {
        a.push_back(Json::array({arc.start.get_str(), arc.end.get_str()}));
    }
    return a;
}

ArcSet arcset_from_json(const Json& j)
{
    if (!j.is_array()) throw InputError("arcs: expected an array of [\"start\", \"end\"] pairs");
    ArcSet out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = "/" + std::to_string(i);
        const auto& e = j[i];
        if (e.is_object() && e.contains("start") && e.contains("end")) {
            out.arcs.push_back({rational_from_json(e["start"], at + "/start"), rational_from_json(e["end"], at + "/end")});
        } else if (e.is_array() && e.size() == 2) {
            out.arcs.push_back({rational_from_json(e[0], at + "/0"), rational_from_json(e[1], at + "/1")});
        } else {
            throw InputError(at + ": expected [\"p/q\", \"p/q\"]");
        }
    }
    return out;
}

Json to_json(const CircleClassification& c)
{
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["n"] = c.n ? Json(*c.n) : Json(nullptr);
    j["arcs"] = c.arcs ? to_json(*c.arcs) : Json(nullptr);
    j["group_order"] = c.group_order ? Json(*c.group_order) : Json(nullptr);
    j["residues"] = c.residues;
    j["tile"] = c.tile ? Json(*c.tile) : Json(nullptr);
    if (c.normalized_r4) {
        j["normalized_r4"] = {{"m", c.normalized_r4->first}, {"k", c.normalized_r4->second}};
    }
    if (c.normalization_failed) j["normalization_failed"] = true;
    if (c.extension) j["extension"] = true;
    j["notes"] = c.notes;
    return j;
}

Json to_json(const TileResult& t)
{
    Json j;
    j["solution"] = t.solution ? Json(*t.solution) : Json(nullptr);
    j["nodes"] = t.nodes;
    return j;
}

Json to_json(const DivisionDescriptor& d)
{
    Json j;
    if (const auto* b = std::get_if<BaseDivision>(&d.node)) {
        j["kind"] = "base";
        j["dim"] = 2;
        Json turns = Json::array();
        for (const auto& t : b->turns) turns.push_back(t.get_str());
        j["turns"] = std::move(turns);
        j["arcs"] = to_json(b->arcs);
    } else if (const auto* l = std::get_if<LiftedDivision>(&d.node)) {
        j["kind"] = "lifted";
        j["dim"] = d.dim();
        j["r"] = l->r;
        j["piece"] = "[0, 1/" + std::to_string(l->r) + ") in the last coordinate plane";
        j["lower"] = to_json(*l->lower);
    } else {
        const auto& p = std::get<PlaceholderDivision>(d.node);
        j["kind"] = "placeholder";
        j["dim"] = p.dim;
        j["r"] = p.r;
    }
    return j;
}

DivisionDescriptor descriptor_from_json(const Json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw InputError(where + "/kind: missing");
    const std::string kind = j["kind"].get<std::string>();
    auto count = [&](const char* name) {
        if (!j.contains(name) || !j[name].is_number_integer() || j[name].get<long>() < 1) {
            throw InputError(where + "/" + name + ": expected a positive integer");
        }
        return j[name].get<std::size_t>();
    };
    if (kind == "base") {
        if (!j.contains("turns") || !j["turns"].is_array()) throw InputError(where + "/turns: expected an array");
        std::vector<Rational> turns;
        for (std::size_t i = 0; i < j["turns"].size(); ++i) {
            turns.push_back(rational_from_json(j["turns"][i], where + "/turns/" + std::to_string(i)));
        }
        if (!j.contains("arcs")) throw InputError(where + "/arcs: missing");
        return base_division(std::move(turns), arcset_from_json(j["arcs"]));
    }
    if (kind == "lifted") {
        if (!j.contains("lower")) throw InputError(where + "/lower: missing");
        const auto lower = descriptor_from_json(j["lower"], where + "/lower");
        const std::size_t r = count("r");
        if (lower.pieces() != r) throw InputError(where + "/r: does not match the lower division");
        return {LiftedDivision{std::make_shared<const DivisionDescriptor>(lower), r}};
    }
    if (kind == "placeholder") return {PlaceholderDivision{count("dim"), count("r")}};
    throw InputError(where + "/kind: expected base, lifted or placeholder");
}

Json to_json(const LiftedRotationTuple& rot)
{
    Json j;
    j["dim"] = rot.dim;
    if (rot.free_dim) j["unspecified_leading_dim"] = rot.free_dim;
    Json rs = Json::array();
    for (const auto& bt : rot.block_turns) {
        Json blocks = Json::array();
        for (std::size_t b = 0; b < bt.size(); ++b) {
            blocks.push_back({{"plane", {rot.free_dim + 2 * b, rot.free_dim + 2 * b + 1}}, {"turn", bt[b].get_str()}});
        }
        rs.push_back(std::move(blocks));
    }
    j["rotations"] = std::move(rs);
    return j;
}

Json to_json(const PartitionReport& rep)
{
    Json j;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["retained"] = rep.retained;
    j["rejected"] = rep.rejected;
    j["piece_counts"] = rep.piece_counts;
    j["max_piece_deviation_se"] = rep.max_piece_deviation_se;
    j["violation_count"] = rep.violation_count;
    Json vs = Json::array();
    for (const auto& v : rep.violations) {
        vs.push_back({{"point", v.point}, {"angles", v.angles}, {"multiplicity", v.multiplicity}});
    }
    j["violations"] = std::move(vs);
    return j;
}

Json to_json(const GenericityReport& rep)
{
    Json j;
    j["mode"] = rep.mode;
    j["word_length_cap"] = rep.word_length_cap;
    j["words_checked"] = rep.words_checked;
    j["words_pass"] = rep.words_pass;
    j["min_word_margin"] = rep.min_word_margin;
    if (rep.first_failure) j["first_failure"] = {{"word", rep.first_failure->word}, {"margin", rep.first_failure->margin}};
    j["pairs_applicable"] = rep.pairs_applicable;
    j["pairs_checked"] = rep.pairs_checked;
    j["pairs_pass"] = rep.pairs_pass;
    Json pf = Json::array();
    for (const auto& p : rep.pair_failures) pf.push_back({{"first", p.first}, {"second", p.second}, {"det", p.det}});
    j["pair_failures"] = std::move(pf);
    j["obstruction"] = to_json(rep.obstruction);
    j["generic_candidate"] = rep.generic_candidate;
    j["notes"] = rep.notes;
    return j;
}

Json to_json(const CompletionResult& res)
{
    Json j;
    j["tuple"] = spherediv::to_json(RotationTuple(res.tuple));
    j["row_residuals"] = res.row_residuals;
    Json roots = Json::array();
    for (const auto& r : res.roots) {
        roots.push_back({{"matrix", r.matrix + 1}, {"row", r.row}, {"chosen", r.chosen}, {"other", r.other}});
    }
    j["roots"] = std::move(roots);
    j["max_orthonormality_residual"] = res.max_orthonormality_residual;
    j["max_det_residual"] = res.max_det_residual;
    j["max_distance_from_identity"] = res.max_distance_from_identity;
    return j;
}

UpperEntries upper_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) throw InputError("/dim: expected an integer");
    if (!j.contains("blocks") || !j["blocks"].is_array()) throw InputError("/blocks: expected an array");
    UpperEntries u{j["dim"].get<std::size_t>(), {}};
    for (std::size_t k = 0; k < j["blocks"].size(); ++k) {
        const auto& b = j["blocks"][k];
        if (!b.is_array()) throw InputError("/blocks/" + std::to_string(k) + ": expected an array");
        std::vector<double> vals;
        for (std::size_t i = 0; i < b.size(); ++i) vals.push_back(double_from_json(b[i], "/blocks/" + std::to_string(k) + "/" + std::to_string(i)));
        u.blocks.push_back(std::move(vals));
    }
    return u;
}

} // namespace spherediv::cli
