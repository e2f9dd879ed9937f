#include "spincalc/report.hpp"

#include <sstream>

namespace spincalc {

Report build_report(const Fixtures& fx) {
    Report r;
    r.spin = three_spin_breakdown(fx);
    r.msp = solve_theta();
    r.theta_three_spin = r.spin.theta;
    r.theta_msp = r.msp.theta;
    r.theta_max_group = r.spin.theta_max_group;
    r.agree = r.theta_three_spin == r.theta_msp;
    return r;
}

nlohmann::ordered_json msp_graphs_json(const MspSolve& solve) {
    nlohmann::ordered_json graphs = nlohmann::ordered_json::array();
    const auto& catalog = catalog_graphs();
    for (size_t i = 0; i < catalog.size(); ++i) {
        const MspGraph& g = catalog[i];
        nlohmann::ordered_json jg;
        jg["id"] = g.id;
        jg["aut"] = g.aut;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const MspEdge& e : g.edges) edges.push_back(e.d.str());
        jg["edges"] = edges;
        jg["contribution"] = solve.contributions[i].str();
        graphs.push_back(jg);
    }
    return graphs;
}

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["theta_three_spin"] = r.theta_three_spin.str();
    j["theta_msp"] = r.theta_msp.str();
    j["theta_max_group"] = r.theta_max_group.str();
    j["agree"] = r.agree;

    nlohmann::ordered_json spin;
    spin["prop1"] = r.spin.prop1.str();
    spin["prop2"] = r.spin.prop2.str();
    spin["prop3"] = r.spin.prop3.str();
    spin["prop4_s3"] = r.spin.prop4_s3.str();
    spin["prop4_mixed"] = r.spin.prop4_mixed.str();
    spin["g4"] = r.spin.g4.str();
    spin["g5"] = r.spin.g5.str();
    auto rows = [](const std::vector<TableRow>& table) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const TableRow& row : table) {
            nlohmann::ordered_json jr;
            jr["monomial"] = row.monomial;
            jr["coeff"] = row.coeff.str();
            jr["total"] = row.total.str();
            arr.push_back(jr);
        }
        return arr;
    };
    spin["table2"] = rows(r.spin.table2);
    spin["table3"] = rows(r.spin.table3);
    spin["max_group_pushforward"] = r.spin.max_group_pushforward.str();
    spin["fjrw_vs_cosection_sign"] = "-1";
    j["three_spin"] = spin;

    nlohmann::ordered_json msp;
    msp["graphs"] = msp_graphs_json(r.msp);
    msp["ch1_coefficient"] = r.msp.ch1_coeff.str();
    msp["psi_coefficient"] = r.msp.psi_coeff.str();
    msp["partial_sum"] = r.msp.partial_sum.str();
    j["msp"] = msp;
    return j;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "theta_three_spin = " << r.theta_three_spin << "\n";
    os << "theta_msp        = " << r.theta_msp << "\n";
    os << "theta_max_group  = " << r.theta_max_group << "\n";
    os << "agree            = " << (r.agree ? "yes" : "no") << "\n";
    os << "\nthree-spin intermediates\n";
    os << "  prop1 = " << r.spin.prop1 << "\n";
    os << "  prop2 = " << r.spin.prop2 << "\n";
    os << "  prop3 = " << r.spin.prop3 << "\n";
    os << "  prop4_s3 = " << r.spin.prop4_s3 << "\n";
    os << "  prop4_mixed = " << r.spin.prop4_mixed << "\n";
    os << "  g4 = " << r.spin.g4 << ", g5 = " << r.spin.g5 << "\n";
    os << "  max-group pushforward = " << r.spin.max_group_pushforward.str() << "\n";
    auto table = [&os](const char* name, const std::vector<TableRow>& rows) {
        os << "  " << name << ":\n";
        for (const TableRow& row : rows)
            os << "    " << row.monomial << "  coeff " << row.coeff << "  total " << row.total
               << "\n";
    };
    table("table2", r.spin.table2);
    table("table3", r.spin.table3);
    os << "\nmsp graphs\n";
    const auto& catalog = catalog_graphs();
    for (size_t i = 0; i < catalog.size(); ++i) {
        const MspGraph& g = catalog[i];
        os << "  " << g.name << "  aut=" << g.aut << "  edges=[";
        for (size_t e = 0; e < g.edges.size(); ++e)
            os << (e ? "," : "") << g.edges[e].d.str();
        os << "]  contribution=" << r.msp.contributions[i].str() << "\n";
    }
    os << "  ch1 coefficient = " << r.msp.ch1_coeff << "\n";
    os << "  psi coefficient = " << r.msp.psi_coeff << "\n";
    os << "  partial sum (graphs 1..7) = " << r.msp.partial_sum << "\n";
    return os.str();
}

std::string msp_graphs_text() {
    std::ostringstream os;
    MspSolve solve = solve_theta();
    const auto& catalog = catalog_graphs();
    for (size_t i = 0; i < catalog.size(); ++i) {
        const MspGraph& g = catalog[i];
        os << g.name << "  aut=" << g.aut << "  edges=[";
        for (size_t e = 0; e < g.edges.size(); ++e)
            os << (e ? "," : "") << g.edges[e].d.str();
        os << "]  contribution=" << solve.contributions[i].str() << "\n";
    }
    return os.str();
}

}  // namespace spincalc
