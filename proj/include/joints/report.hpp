#pragma once

#include "joints/cliques.hpp"
#include "joints/inequality.hpp"
#include "joints/joint.hpp"
#include "joints/stability.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace joints {

using Json = nlohmann::ordered_json;

Json to_json(const BoundReport& report);
/// {p, q, r_overlap, base_edge, size, cliques, bound}; bound is null when absent.
Json to_json(const JointCertificate& cert, const BoundReport* bound = nullptr);
Json to_json(const StabilityReport& report);
Json to_json(const ReductionOutcome& outcome);
Json to_json(const CliqueSpectrum& spectrum);

/// "s,t,lhs_num,lhs_den,rhs_num,rhs_den,holds"
std::string moon_moser_csv(const std::vector<MoonMoserRow>& rows);

std::string bound_csv_header();
std::string to_csv_row(const BoundReport& report);

/// One row per peel step: step,vertex,degree,edges_remaining.
std::string peel_trace_csv(const PeelTrace& trace);

}  // namespace joints
