#ifndef SPHEREDIV_TOOLS_REPORT_JSON_HPP
#define SPHEREDIV_TOOLS_REPORT_JSON_HPP

#include "spherediv/circle_division.hpp"
#include "spherediv/euler_obstruction.hpp"
#include "spherediv/generic_synthesis.hpp"
#include "spherediv/json_io.hpp"
#include "spherediv/lifting.hpp"
#include "spherediv/obstruction.hpp"

namespace spherediv::cli {

Json to_json(const ObstructionReport& rep);
Json to_json(const ArcSet& arcs);
ArcSet arcset_from_json(const Json& j);
Json to_json(const CircleClassification& c);
Json to_json(const TileResult& t);
Json to_json(const DivisionDescriptor& d);
DivisionDescriptor descriptor_from_json(const Json& j, const std::string& where = "");
Json to_json(const LiftedRotationTuple& rot);
Json to_json(const PartitionReport& rep);
Json to_json(const GenericityReport& rep);
Json to_json(const CompletionResult& res);
UpperEntries upper_from_json(const Json& j);

template <class T>
Json witness_json(const FractionalWitness<T>& w)
{
    Json j;
    j["degree"] = w.n;
    j["r"] = w.r;
    j["form"] = "f(x) = 1/r + sum_j c_j P_n(v_j . x)";
    Json pts = Json::array();
    for (const auto& p : w.points) pts.push_back(spherediv::to_json(p));
    j["points"] = std::move(pts);
    Json cs = Json::array();
    for (const auto& c : w.coefficients) cs.push_back(spherediv::to_json(c));
    j["coefficients"] = std::move(cs);
    return j;
}

} // namespace spherediv::cli

#endif
