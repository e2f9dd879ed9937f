#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spincalc/error.hpp"
#include "spincalc/expr.hpp"
#include "spincalc/report.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCompute = 3;
constexpr int kExitDisagree = 4;

spincalc::Fixtures load_fixtures(const std::string& path) {
    if (path.empty()) return spincalc::Fixtures::standard();
    std::ifstream in(path);
    if (!in) throw spincalc::CalcError("cannot open tables file: " + path);
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw spincalc::CalcError("bad tables JSON: " + std::string(e.what()));
    }
    return spincalc::Fixtures::from_json(j);
}

std::string theta_value(const std::string& method, const spincalc::Fixtures& fx) {
    if (method == "three-spin") return spincalc::theta_three_spin(fx).str();
    if (method == "msp") return spincalc::solve_theta().theta.str();
    return spincalc::theta_max_group(fx).str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact two-method calculator for a genus-one spin invariant"};
    app.require_subcommand(1);

    std::string tables_path;
    app.add_option("--tables", tables_path,
                   "override the fixture tables from a JSON file (see `tables --json`)");

    auto* theta = app.add_subcommand("theta", "compute the invariant by one method");
    std::string method;
    theta->add_option("method", method, "three-spin | msp | max-group")
        ->required()
        ->check(CLI::IsMember({"three-spin", "msp", "max-group"}));

    auto* eval = app.add_subcommand("eval", "evaluate a class expression");
    std::string source;
    eval->add_option("expr", source, "expression, e.g. \"deg(d_irr*d02*d03)\"")->required();

    auto* tables = app.add_subcommand("tables", "show the fixture tables");
    bool tables_json = false;
    tables->add_flag("--json", tables_json, "emit JSON loadable through --tables");

    auto* msp = app.add_subcommand("msp", "localization-side inspection");
    auto* graphs = msp->add_subcommand("graphs", "list the fixed-locus graph catalog");
    bool graphs_json = false;
    graphs->add_flag("--json", graphs_json, "emit JSON");
    msp->require_subcommand(1);

    auto* report = app.add_subcommand("report", "run both methods and compare");
    bool report_json_flag = false;
    std::string report_out;
    report->add_flag("--json", report_json_flag, "emit the JSON report");
    report->add_option("--out", report_out, "also write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        spincalc::Fixtures fx = load_fixtures(tables_path);

        if (theta->parsed()) {
            std::cout << theta_value(method, fx) << "\n";
            return 0;
        }
        if (eval->parsed()) {
            spincalc::ExprPtr ast = spincalc::parse_expr(source);
            std::cout << spincalc::value_str(spincalc::eval_expr(ast, fx)) << "\n";
            return 0;
        }
        if (tables->parsed()) {
            if (tables_json) {
                std::cout << fx.to_json().dump(2) << "\n";
            } else {
                std::cout << "m13 pairings:\n";
                for (const auto& [m, v] : fx.pairing.entries())
                    std::cout << "  " << spincalc::m13_mono_name(m) << " = " << v << "\n";
                std::cout << "node-psi pairings:\n";
                for (const auto& [m, v] : fx.pairing.nodepsi_entries())
                    std::cout << "  " << spincalc::m13_mono_name(m) << " = " << v << "\n";
                std::cout << "stratum degrees:\n";
                for (const auto& [m, v] : fx.strata.deg)
                    std::cout << "  " << spincalc::w_mono_name(m) << " = " << v << "\n";
                std::cout << "node orders:\n";
                for (const auto& [g, v] : fx.strata.m_plus)
                    std::cout << "  " << spincalc::w_gen_name(g) << " = " << v << "\n";
            }
            return 0;
        }
        if (msp->parsed()) {
            if (graphs_json) {
                std::cout << spincalc::msp_graphs_json(spincalc::solve_theta()).dump(2)
                          << "\n";
            } else {
                std::cout << spincalc::msp_graphs_text();
            }
            return 0;
        }
        if (report->parsed()) {
            spincalc::Report r = spincalc::build_report(fx);
            std::string body =
                report_json_flag ? spincalc::report_json(r).dump(2) + "\n"
                                 : spincalc::report_text(r);
            std::cout << body;
            if (!report_out.empty()) {
                std::ofstream out(report_out);
                if (!out) throw spincalc::CalcError("cannot write " + report_out);
                out << body;
            }
            if (!r.agree) {
                std::cerr << "error: the two methods disagree\n";
                return kExitDisagree;
            }
            return 0;
        }
    } catch (const spincalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const spincalc::CalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return 0;
}
