#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "spincalc/error.hpp"
#include "spincalc/m13.hpp"

using namespace spincalc;

namespace {

const M13Class dirr = M13Class::gen(M13Gen::DIrr);
const M13Class d02 = M13Class::gen(M13Gen::D02);
const M13Class d03 = M13Class::gen(M13Gen::D03);

}  // namespace

TEST_CASE("pairing table fixture values") {
    CHECK(m13_degree(dirr * d02 * d03) == frac(3, 2));
    CHECK(m13_degree(dirr * dirr * d03) == Rational(0));
    CHECK(m13_degree(dirr * dirr * d02) == Rational(0));
    CHECK(m13_degree(d02.pow(3)) == frac(1, 8));
    CHECK(m13_degree(d03.pow(3)) == frac(1, 12));
    CHECK(m13_degree(dirr * d02 * d02) == frac(-3, 2));
    CHECK(m13_degree(dirr * d03 * d03) == frac(-1, 2));
    CHECK(m13_degree(d02 * d02 * d03) == Rational(0));
    CHECK(m13_degree(d02 * d03 * d03) == frac(-1, 8));
}

TEST_CASE("degree drops everything below the top") {
    CHECK(m13_degree(d02) == Rational(0));
    CHECK(m13_degree(d02 * d03) == Rational(0));
    CHECK(m13_degree(M13Class::term(Rational(5), {})) == Rational(0));
}

TEST_CASE("the cube of -(d02 + d03)") {
    M13Class c = (-d02 - d03).pow(3);
    CHECK(m13_degree(c) == frac(1, 6));
    // times the map degree and the 1/36 scaling: the first cubic term
    CHECK(Rational(3) * frac(1, 36).pow(3) * m13_degree(c) ==
          frac(1, 54) * frac(1, 12).pow(3));
}

TEST_CASE("node-psi pairings") {
    CHECK(nodepsi_pairing({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::NodePsi}) == Rational(3));
    CHECK(nodepsi_pairing({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::D02}) == Rational(3));
    CHECK(nodepsi_pairing({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::D03}) == Rational(0));
    CHECK_THROWS_WITH_AS(
        nodepsi_pairing({M13Gen::D02, M13Gen::NodePsi, M13Gen::NodePsi}),
        doctest::Contains("unknown node-psi pairing"), CalcError);
}

TEST_CASE("unknown strata are a hard error") {
    M13Class nodepsi_cube = M13Class::gen(M13Gen::NodePsi).pow(3);
    CHECK_THROWS_WITH_AS(m13_degree(nodepsi_cube), doctest::Contains("node-psi"), CalcError);
}

TEST_CASE("pairing is symmetric in the factors") {
    std::vector<M13Class> gens = {dirr, d02, d03};
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) {
                Rational v = m13_degree(a * b * c);
                CHECK(v == m13_degree(c * (a * b)));
                CHECK(v == m13_degree(b * (c * a)));
            }
}

TEST_CASE("grid cells describing the same product agree") {
    // spot-check the two overlapping readings recorded in the fixture grid
    CHECK(m13_degree(d02 * (d02 * d03)) == m13_degree(d03 * (d02 * d02)));
    CHECK(m13_degree(d02 * (d03 * d03)) == m13_degree(d03 * (d02 * d03)));
    CHECK(m13_degree(dirr * (d02 * d03)) == m13_degree(d02 * (dirr * d03)));
    CHECK(m13_degree(dirr * (d02 * d03)) == m13_degree(d03 * (dirr * d02)));
    // and the table builder itself validates every duplicate cell
    CHECK_NOTHROW(PairingTable::standard());
}

TEST_CASE("repeated d_irr annihilates every cofactor") {
    std::vector<M13Class> cofactors = {dirr, d02, d03, M13Class::gen(M13Gen::Kps),
                                       M13Class::gen(M13Gen::NodePsi)};
    for (const auto& c : cofactors) {
        M13Class prod = dirr * dirr * c;
        CHECK(prod.is_zero());
        CHECK(m13_degree(prod) == Rational(0));
    }
}

TEST_CASE("kps expands at construction") {
    M13Class via_kps = M13Class::gen(M13Gen::Kps);
    M13Class direct = -d02 - d03;
    CHECK(via_kps == direct);
    CHECK(via_kps.coeff({M13Gen::Kps}) == Rational(0));
    // in a product position too
    CHECK(M13Class::gen(M13Gen::Kps) * d03 == (-d02 - d03) * d03);
    CHECK(m13_degree(M13Class::gen(M13Gen::Kps).pow(3)) == frac(1, 6));
}

TEST_CASE("class printing") {
    CHECK((frac(-1, 36) * dirr - frac(1, 3) * d02 - frac(1, 3) * d03).str() ==
          "-1/36*d_irr - 1/3*d02 - 1/3*d03");
    CHECK(M13Class().str() == "0");
    CHECK((d02 * d03).str() == "d02*d03");
}

TEST_CASE("json round trip") {
    const PairingTable& std_table = PairingTable::standard();
    nlohmann::ordered_json j = std_table.to_json();
    PairingTable back = PairingTable::from_json(j);
    CHECK(back.entries() == std_table.entries());
    CHECK(back.nodepsi_entries() == std_table.nodepsi_entries());
    // identical answers through the reloaded table
    CHECK(m13_degree(dirr * d02 * d03, back) == frac(3, 2));
    CHECK(m13_degree((-d02 - d03).pow(3), back) == frac(1, 6));
}

TEST_CASE("json validation rejects broken tables") {
    nlohmann::ordered_json j = PairingTable::standard().to_json();
    j["pairings"].erase("d02*d02*d02");
    CHECK_THROWS_WITH_AS(PairingTable::from_json(j), doctest::Contains("missing"),
                         CalcError);

    nlohmann::ordered_json j2 = PairingTable::standard().to_json();
    j2["pairings"]["d_irr*d_irr*d03"] = "1/5";
    CHECK_THROWS_WITH_AS(PairingTable::from_json(j2), doctest::Contains("d_irr^2"),
                         CalcError);

    nlohmann::ordered_json j3 = nlohmann::ordered_json::object();
    CHECK_THROWS_AS(PairingTable::from_json(j3), CalcError);
}
