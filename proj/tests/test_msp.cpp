#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincalc/error.hpp"
#include "spincalc/msp.hpp"
#include "spincalc/threespin.hpp"

using namespace spincalc;

namespace {

const MspGraph& graph(int id) { return catalog_graphs().at(size_t(id)); }

// frozen appendix values for the four edge degrees in play
struct EdgeFixture {
    Rational d;
    Rational coeff;
    int expo;
    int ge;
};

const std::vector<EdgeFixture>& edge_fixtures() {
    static const std::vector<EdgeFixture> fx = {
        {frac(-1, 3), frac(1, 3), -1, 1},
        {frac(-2, 3), frac(2, 9), -2, 2},
        {Rational(-1), frac(-4, 27), -3, 2},
        {frac(-4, 3), frac(16, 5832), -2, 4},
    };
    return fx;
}

}  // namespace

TEST_CASE("virtual dimension") {
    CHECK(vdim(1, {}, Rational(0), Rational(1)) == Rational(1));
    CHECK(vdim(1, {}, Rational(0), Rational(0)) == Rational(0));
    std::vector<Mark> three_heavy = {{2, Mark::Mu}, {2, Mark::Mu}, {2, Mark::Mu}};
    CHECK(vdim(0, three_heavy, Rational(0), Rational(2)) == Rational(0));
    std::vector<Mark> with_phi = {{0, Mark::Phi}, {1, Mark::Mu}};
    CHECK(vdim(2, with_phi, frac(1, 3), Rational(1)) ==
          frac(1, 3) + Rational(1) + Rational(1) + Rational(2) - Rational(2) * frac(4, 3));
}

TEST_CASE("catalog shape") {
    const auto& catalog = catalog_graphs();
    REQUIRE(catalog.size() == 8);
    CHECK(graph(0).aut == 6);  // three interchangeable legs
    CHECK(graph(4).aut == 2);
    for (int id : {1, 2, 3, 5, 6, 7}) CHECK(graph(id).aut == 1);
    REQUIRE(graph(0).edges.size() == 3);
    for (const MspEdge& e : graph(0).edges) CHECK(e.d == frac(-2, 3));
    for (const MspGraph& g : catalog)
        CHECK(vdim(g.type.genus, g.type.gamma, g.type.d0, g.type.d_inf) == Rational(1));
}

TEST_CASE("edge curve stackiness") {
    CHECK(edge_r(graph(0).edges[0]) == 3);  // d = -2/3
    CHECK(edge_r(graph(2).edges[1]) == 1);  // d = -1
    CHECK(edge_r(graph(1).edges[0]) == 3);  // d = -4/3
}

TEST_CASE("edge stabilizer orders") {
    // via graphs that carry each degree
    CHECK(ge_order(graph(0), 0) == 2);   // d = -2/3
    CHECK(ge_order(graph(1), 0) == 4);   // d = -4/3
    CHECK(ge_order(graph(2), 0) == 1);   // d = -1/3
    CHECK(ge_order(graph(2), 1) == 2);   // d = -1 into the one-edge vertex at infinity
}

TEST_CASE("edge factors match the frozen table") {
    // the general product formula against the frozen values
    auto check_edge = [](const MspGraph& g, int e, const EdgeFixture& fx) {
        LaurentPoly a = edge_factor(g, e);
        CHECK(a == LaurentPoly::mono(fx.coeff, fx.expo));
        CHECK(ge_order(g, e) == fx.ge);
    };
    check_edge(graph(0), 0, edge_fixtures()[1]);
    check_edge(graph(1), 0, edge_fixtures()[3]);
    check_edge(graph(2), 0, edge_fixtures()[0]);
    check_edge(graph(2), 1, edge_fixtures()[2]);
    check_edge(graph(5), 1, edge_fixtures()[1]);
}

TEST_CASE("node weights") {
    // stable-infinity side of a -2/3 edge
    CHECK(node_weight(graph(0), 0, 0) == LaurentPoly::mono(frac(-1, 2), 1));
    // far side of a -1/3 edge
    CHECK(node_weight(graph(2), 0, 1) == LaurentPoly::mono(Rational(3), 1));
    // the one-edge vertex at infinity with d = -1
    CHECK(node_weight(graph(2), 1, 2) == LaurentPoly::mono(frac(-3, 2), 1));
    CHECK(node_weight(graph(2), 1, 1) == LaurentPoly::mono(frac(3, 2), 1));
    CHECK_THROWS_AS(node_weight(graph(2), 0, 2), CalcError);
}

TEST_CASE("unstable vertex factors") {
    // level-one two-edge point between two -1/3 edges: -3t^4/(6t)
    CHECK(unstable_vertex_factor(graph(4), 1) == LaurentPoly::mono(frac(-1, 2), 3));
    // level-one one-edge point on a -2/3 edge: 3t * 3t/2
    CHECK(unstable_vertex_factor(graph(0), 1) == LaurentPoly::mono(frac(9, 2), 2));
    // level-infinity two-edge point between -1/3 and -2/3: 1/(-3t/2)
    CHECK(unstable_vertex_factor(graph(5), 1) == LaurentPoly::mono(frac(-2, 3), -1));
    // level-infinity one-edge point on d = -1: w itself
    CHECK(unstable_vertex_factor(graph(2), 2) == LaurentPoly::mono(frac(-3, 2), 1));
}

TEST_CASE("stable vertex factor at infinity, rank -1") {
    // [B_v]_{t^-1} = -3d (ch1 + 3d psi)
    for (int id : {1, 2, 3}) {
        const MspGraph& g = graph(id);
        Rational d = g.edges[0].d;
        AtomCombo combo = vertex_contribution(g, 0);
        AtomCombo at = combo.coeff_t(-1);
        CHECK(at.atom_coeff(Atom::ICh1) == LaurentPoly(Rational(-3) * d));
        CHECK(at.atom_coeff(Atom::IPsiSpin11) ==
              LaurentPoly(Rational(-3) * d * Rational(3) * d));
        CHECK(at.constant().is_zero());
    }
}

TEST_CASE("stable vertex factor at level one matches the closed form") {
    // [B_v]_t = (-8c - 3) / (72 c^2) for a single edge of far-side weight c*t
    auto closed_form = [](const Rational& c) {
        return (Rational(-8) * c - 3) / (Rational(72) * c * c);
    };
    const AtomTable& tbl = AtomTable::standard();
    auto direct = [&](const MspGraph& g, int v) {
        AtomCombo combo = vertex_contribution(g, v)
                              .substitute(Atom::HodgeLambda1, tbl.hodge_lambda1)
                              .substitute(Atom::PsiM11, tbl.psi_m11);
        return combo.coeff_t(1).rational();
    };
    CHECK(direct(graph(6), 1) == closed_form(frac(3, 2)));  // c = 3/2
    CHECK(direct(graph(7), 0) == closed_form(Rational(3)));  // c = 3

    // five more weights through a synthetic one-edge graph
    for (Rational c : {frac(1, 2), Rational(2), frac(5, 3), frac(-7, 4), Rational(12)}) {
        // weight of the far side of a d-edge from a two-edge infinity vertex is -t/d
        Rational d = -c.inverse();
        MspGraph g = graph(7);
        g.edges[0].d = d;
        CHECK(direct(g, 0) == closed_form(c));
    }
}

TEST_CASE("per-graph contributions") {
    AtomCombo c0 = graph_contribution(graph(0));
    CHECK(c0.atom_coeff(Atom::Theta) == LaurentPoly(frac(-1, 6)));
    CHECK(c0.constant().is_zero());
    CHECK(c0.str() == "-1/6*THETA");

    CHECK(graph_contribution(graph(4)).rational() == frac(-1, 108));
    CHECK(graph_contribution(graph(5)).rational() == frac(4, 243));
    CHECK(graph_contribution(graph(6)).rational() == frac(-5, 486));
    CHECK(graph_contribution(graph(7)).rational() == frac(1, 216));

    AtomCombo first_three = graph_contribution(graph(1)) + graph_contribution(graph(2)) +
                            graph_contribution(graph(3));
    CHECK(first_three.atom_coeff(Atom::ICh1) == LaurentPoly());
    CHECK(first_three.atom_coeff(Atom::IPsiSpin11) == LaurentPoly(frac(-1, 54)));
    CHECK(first_three.constant().is_zero());
    CHECK(first_three.substitute(Atom::IPsiSpin11, AtomTable::standard().i_psi_spin11())
              .rational() == Rational(0));
}

TEST_CASE("contributions are invariant under rescaling the parameter") {
    for (const MspGraph& g : catalog_graphs()) {
        AtomCombo base = graph_contribution(g);
        for (Rational s : {Rational(2), frac(-3, 1), frac(5, 7), Rational(11)}) {
            AtomCombo scaled = graph_contribution(g, AtomTable::standard(), s);
            CHECK(scaled == base);
        }
    }
}

TEST_CASE("solving the vanishing for the unknown") {
    MspSolve sol = solve_theta();
    CHECK(sol.ch1_coeff == Rational(0));
    CHECK(sol.psi_coeff == frac(-1, 54));
    CHECK(sol.partial_sum == frac(1, 648));
    CHECK(sol.theta == frac(1, 108));
    REQUIRE(sol.contributions.size() == 8);

    // with the unknown bound to the answer, the full sum vanishes
    AtomCombo total;
    for (const AtomCombo& c : sol.contributions) total += c;
    Rational residue = total.substitute(Atom::Theta, sol.theta)
                           .substitute(Atom::ICh1, Rational(0))
                           .substitute(Atom::IPsiSpin11, Rational(0))
                           .rational();
    CHECK(residue == Rational(0));
}

TEST_CASE("psi integral on the one-marking spin moduli vanishes piecewise") {
    const AtomTable& t = AtomTable::standard();
    CHECK(t.psi_spin11_trivial_part == frac(-8, 9 * 24));
    CHECK(t.psi_spin11_nontrivial_part == frac(8, 9 * 24));
    CHECK(t.i_psi_spin11() == Rational(0));
}

TEST_CASE("both methods agree") {
    CHECK(solve_theta().theta == theta_three_spin());
}

TEST_CASE("out-of-scope cases error") {
    MspGraph g = graph(6);
    g.vertices[1].genus = 0;
    CHECK_THROWS_WITH_AS(vertex_contribution(g, 1), doctest::Contains("out of scope"),
                         CalcError);

    MspGraph g2 = graph(2);
    g2.vertices[2].kind = VertexKind::U11;
    CHECK_THROWS_WITH_AS(vertex_contribution(g2, 2), doctest::Contains("out of scope"),
                         CalcError);

    MspGraph g3 = graph(1);
    g3.edges[0].d = Rational(0);
    CHECK_THROWS_WITH_AS(edge_factor(g3, 0), doctest::Contains("degenerate"), CalcError);

    MspGraph g4 = graph(1);
    g4.vertices[1].level = Level::Zero;
    CHECK_THROWS_WITH_AS(edge_factor(g4, 0), doctest::Contains("out of scope"), CalcError);

    MspGraph g5 = graph(1);
    g5.vertices[0].spin_rank = -3;
    CHECK_THROWS_WITH_AS(vertex_contribution(g5, 0), doctest::Contains("out of scope"),
                         CalcError);
}
