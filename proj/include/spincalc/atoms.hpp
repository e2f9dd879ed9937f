#pragma once

#include <map>
#include <optional>
#include <string>

#include "spincalc/laurent.hpp"

namespace spincalc {

// Named moduli integrals. THETA is the unknown the MSP method solves for;
// the others are fixed inputs of the localization computation.
enum class Atom {
    Theta,         // the genus-one three-point invariant being computed
    ICh1,          // integral of ch_1(R pi_* L^vee) on the one-marking genus-one spin moduli
    IPsiSpin11,    // integral of psi_1 on the same moduli (vanishes)
    IG0_112,       // genus-zero three-point spin invariant with monodromies (1,1,2)
    HodgeLambda1,  // integral of c_1(E) over the 1-pointed genus-one moduli
    PsiM11,        // integral of psi_1 over the 1-pointed genus-one moduli
};

const std::string& atom_name(Atom a);

// Linear combination of atoms with Laurent coefficients, plus a free constant.
// Atoms never appear with zero coefficient.
class AtomCombo {
public:
    AtomCombo() = default;
    AtomCombo(const LaurentPoly& c) : constant_(c) {}  // NOLINT
    AtomCombo(const Rational& c) : constant_(c) {}     // NOLINT
    AtomCombo(long c) : constant_(Rational(c)) {}      // NOLINT

    static AtomCombo atom(Atom a, const LaurentPoly& coeff = LaurentPoly(1));

    const LaurentPoly& constant() const { return constant_; }
    LaurentPoly atom_coeff(Atom a) const;
    const std::map<Atom, LaurentPoly>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty(); }

    AtomCombo operator-() const;
    AtomCombo& operator+=(const AtomCombo& o);
    AtomCombo& operator-=(const AtomCombo& o);
    AtomCombo& operator*=(const LaurentPoly& c);
    // Products are only defined when at most one factor carries atoms:
    // the calculus is linear in moduli integrals.
    AtomCombo operator*(const AtomCombo& o) const;

    friend AtomCombo operator+(AtomCombo a, const AtomCombo& b) { return a += b; }
    friend AtomCombo operator-(AtomCombo a, const AtomCombo& b) { return a -= b; }
    friend AtomCombo operator*(AtomCombo a, const LaurentPoly& c) { return a *= c; }
    friend bool operator==(const AtomCombo& a, const AtomCombo& b) {
        return a.constant_ == b.constant_ && a.terms_ == b.terms_;
    }

    // Coefficient of t^k, extracted term-wise (the bracket [.]_{t^k}).
    AtomCombo coeff_t(int k) const;

    AtomCombo substitute(Atom a, const Rational& value) const;

    // Requires a pure constant concentrated in degree 0.
    Rational rational() const;

    std::string str() const;

private:
    LaurentPoly constant_;
    std::map<Atom, LaurentPoly> terms_;
};

// The bracket [.]_{t^k}, on plain Laurent polynomials and on atom
// combinations alike.
inline Rational laurent_coeff(const LaurentPoly& p, int k) { return p.coeff(k); }
inline AtomCombo laurent_coeff(const AtomCombo& p, int k) { return p.coeff_t(k); }

// Values of the fixed atoms. IPsiSpin11 vanishes as the sum of two recorded
// pieces coming from the two component types of its virtual class.
struct AtomTable {
    Rational hodge_lambda1;
    Rational psi_m11;
    Rational i_g0_112;
    Rational psi_spin11_trivial_part;   // from the locus where L(-x) is trivial
    Rational psi_spin11_nontrivial_part;  // from the eight remaining components

    Rational i_psi_spin11() const {
        return psi_spin11_trivial_part + psi_spin11_nontrivial_part;
    }

    static const AtomTable& standard();
};

}  // namespace spincalc
