#pragma once

#include <json.hpp>

#include <string>

#include "spincalc/msp.hpp"
#include "spincalc/threespin.hpp"

namespace spincalc {

// Everything the two methods produce, side by side.
struct Report {
    Rational theta_three_spin;
    Rational theta_msp;
    Rational theta_max_group;
    bool agree = false;
    ThreeSpinBreakdown spin;
    MspSolve msp;
};

Report build_report(const Fixtures& fx = Fixtures::standard());

nlohmann::ordered_json report_json(const Report& r);

std::string report_text(const Report& r);

// One line per catalog graph: id, |Aut|, edge degrees, contribution.
std::string msp_graphs_text();
nlohmann::ordered_json msp_graphs_json(const MspSolve& solve);

}  // namespace spincalc
