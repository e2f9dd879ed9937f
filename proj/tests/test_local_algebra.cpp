#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincalc/atoms.hpp"
#include "spincalc/error.hpp"
#include "spincalc/local_algebra.hpp"

using namespace spincalc;

TEST_CASE("truncation by total degree") {
    LocalAlgebra alg(1);
    int psi = alg.add_generator("psi");
    int ch1 = alg.add_generator("ch1");
    auto p = alg.gen(psi);
    auto c = alg.gen(ch1);
    CHECK((p * p).is_zero());
    CHECK((p * c).is_zero());
    auto e = alg.scalar(LaurentPoly(1)) + p;
    CHECK((e * e).coeff({psi}) == LaurentPoly(2));
    CHECK((e * e).coeff({psi, psi}).is_zero());

    LocalAlgebra alg2(2);
    int a = alg2.add_generator("a");
    auto x = alg2.gen(a);
    CHECK_FALSE((x * x).is_zero());
    CHECK((x * x * x).is_zero());
}

TEST_CASE("cap zero kills every generator") {
    LocalAlgebra alg(0);
    int psi = alg.add_generator("psi");
    CHECK(alg.gen(psi).is_zero());
}

TEST_CASE("multiplication is commutative and associative under truncation") {
    LocalAlgebra alg(3);
    int a = alg.add_generator("a");
    int b = alg.add_generator("b");
    auto t = LaurentPoly::t();
    auto x = alg.scalar(t) + alg.gen(a);
    auto y = alg.scalar(LaurentPoly(frac(1, 2))) + alg.gen(b) * LaurentPoly::mono(frac(2, 3), -1);
    auto z = alg.gen(a) + alg.gen(b);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
}

TEST_CASE("geometric inverse examples") {
    // cap 0: the nilpotent part truncates immediately
    {
        LocalAlgebra alg(0);
        int psi = alg.add_generator("psi");
        auto inv = geometric_inverse(LaurentPoly::mono(frac(-1, 2), 1), alg.gen(psi));
        CHECK(inv == alg.scalar(LaurentPoly::mono(Rational(-2), -1)));
    }
    // cap 1: 1/(c t) + psi/(c t)^2
    {
        LocalAlgebra alg(1);
        int psi = alg.add_generator("psi");
        Rational c = frac(5, 7);
        auto inv = geometric_inverse(LaurentPoly::mono(c, 1), alg.gen(psi));
        CHECK(inv.coeff({}) == LaurentPoly::mono(c.inverse(), -1));
        CHECK(inv.coeff({psi}) == LaurentPoly::mono(c.pow(2).inverse(), -2));
    }
    // c = -1: -1/t + psi/t^2
    {
        LocalAlgebra alg(1);
        int psi = alg.add_generator("psi");
        auto inv = geometric_inverse(LaurentPoly::mono(Rational(-1), 1), alg.gen(psi));
        CHECK(inv.coeff({}) == LaurentPoly::mono(Rational(-1), -1));
        CHECK(inv.coeff({psi}) == LaurentPoly::mono(Rational(1), -2));
    }
}

TEST_CASE("geometric inverse times (w - n) is one, caps 0 through 3") {
    for (int cap = 0; cap <= 3; ++cap) {
        LocalAlgebra alg(cap);
        int psi = alg.add_generator("psi");
        for (auto [c, k] : {std::pair{frac(3, 2), 1}, std::pair{frac(-2, 3), 1},
                            std::pair{Rational(5), 0}, std::pair{frac(-1, 4), -2}}) {
            LaurentPoly w = LaurentPoly::mono(c, k);
            auto n = alg.gen(psi);
            auto prod = geometric_inverse(w, n) * (alg.scalar(w) - n);
            CHECK(prod == alg.scalar(LaurentPoly(1)));
        }
    }
}

TEST_CASE("geometric inverse rejects bad input") {
    LocalAlgebra alg(1);
    int psi = alg.add_generator("psi");
    CHECK_THROWS_WITH_AS(geometric_inverse(LaurentPoly(), alg.gen(psi)),
                         doctest::Contains("non-invertible weight"), CalcError);
    LaurentPoly twoterms = LaurentPoly::t() + LaurentPoly(1);
    CHECK_THROWS_WITH_AS(geometric_inverse(twoterms, alg.gen(psi)),
                         doctest::Contains("non-invertible weight"), CalcError);
    auto not_nilpotent = alg.scalar(LaurentPoly(1)) + alg.gen(psi);
    CHECK_THROWS_AS(geometric_inverse(LaurentPoly::t(), not_nilpotent), CalcError);
}

TEST_CASE("atom combos stay linear") {
    AtomCombo theta = AtomCombo::atom(Atom::Theta, LaurentPoly(frac(-1, 6)));
    AtomCombo c = theta + AtomCombo(frac(1, 648));
    CHECK(c.atom_coeff(Atom::Theta) == LaurentPoly(frac(-1, 6)));
    CHECK(c.constant() == LaurentPoly(frac(1, 648)));
    CHECK_THROWS_WITH_AS(theta * theta, doctest::Contains("nonlinear"), CalcError);
    AtomCombo scaled = c * LaurentPoly::mono(Rational(2), 1);
    CHECK(scaled.coeff_t(1).atom_coeff(Atom::Theta) == LaurentPoly(frac(-1, 3)));
    CHECK(scaled.coeff_t(0).is_constant());

    AtomCombo zero = theta.substitute(Atom::Theta, frac(1, 108)) + AtomCombo(frac(1, 648));
    CHECK(zero.is_constant());
    CHECK(zero.rational() == Rational(0));
    CHECK_THROWS_WITH_AS(theta.rational(), doctest::Contains("unresolved atoms"), CalcError);
}

TEST_CASE("atom combo printing") {
    CHECK(AtomCombo(frac(4, 243)).str() == "4/243");
    CHECK(AtomCombo::atom(Atom::Theta, LaurentPoly(frac(-1, 6))).str() == "-1/6*THETA");
    AtomCombo mix = AtomCombo::atom(Atom::ICh1, LaurentPoly(frac(1, 162))) +
                    AtomCombo::atom(Atom::IPsiSpin11, LaurentPoly(frac(-2, 81)));
    CHECK(mix.str() == "1/162*I_CH1 - 2/81*I_PSI_SPIN11");
    CHECK(AtomCombo().str() == "0");
}

TEST_CASE("standard atom values") {
    const AtomTable& t = AtomTable::standard();
    CHECK(t.hodge_lambda1 == frac(1, 24));
    CHECK(t.psi_m11 == frac(1, 24));
    CHECK(t.i_g0_112 == frac(1, 3));
    CHECK(t.psi_spin11_trivial_part == frac(-8, 216));
    CHECK(t.psi_spin11_nontrivial_part == frac(8, 216));
    CHECK(t.i_psi_spin11() == Rational(0));
}
