#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "spincalc/m13.hpp"
#include "spincalc/rational.hpp"

namespace spincalc {

// Divisor-level generators on the three-spin moduli. DIrr0/1/2 are the
// non-separating boundary pieces by node monodromy, D02/D03 the separating
// ones by marking split, D03_0 the section-jumping component of D03.
// S abbreviates DIrr0 - DIrr1 - DIrr2 and is kept atomic so that its powers
// reduce through the pullback relation rather than through undefined
// pairwise strata. StKps and StDIrr are the pullbacks of kappa_1 - sum psi_i
// and of the downstairs non-separating divisor; the NodePsi* symbols are
// pulled-back node psi insertions tagged by the stratum family they sit on.
enum class WGen {
    DIrr0,
    DIrr1,
    DIrr2,
    S,
    D02,
    D03,
    D03_0,
    StKps,
    StDIrr,
    NodePsi02,
    NodePsi03,
    NodePsiIrr,
};

const std::string& w_gen_name(WGen g);

class WClass {
public:
    using Mono = std::vector<WGen>;  // sorted generators with repetition

    WClass() = default;
    static WClass gen(WGen g);
    static WClass term(const Rational& c, Mono m);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Mono m) const;
    const std::map<Mono, Rational>& terms() const { return terms_; }

    WClass operator-() const;
    WClass& operator+=(const WClass& o);
    WClass& operator-=(const WClass& o);
    WClass operator*(const WClass& o) const;
    WClass& operator*=(const Rational& c);
    WClass pow(unsigned k) const;

    friend WClass operator+(WClass a, const WClass& b) { return a += b; }
    friend WClass operator-(WClass a, const WClass& b) { return a -= b; }
    friend WClass operator*(WClass a, const Rational& c) { return a *= c; }
    friend WClass operator*(const Rational& c, WClass a) { return a *= c; }
    friend bool operator==(const WClass& a, const WClass& b) { return a.terms_ == b.terms_; }

    // Degree-one classes only: substitutes S = DIrr0 - DIrr1 - DIrr2 so two
    // presentations of the same divisor class can be compared term-wise.
    WClass expand_s() const;

    std::string str() const;

private:
    void add_term(Rational c, Mono m);

    std::map<Mono, Rational> terms_;
};

std::string w_mono_name(const WClass::Mono& m);

// Degrees of the forgetful map over the boundary strata, node monodromy
// orders, and the downstairs image of each divisor.
struct StratumData {
    // keyed by square-free monomials in {DIrr0,DIrr1,DIrr2,D02,D03,D03_0};
    // the empty monomial carries the degree over the open stratum.
    std::map<WClass::Mono, Rational> deg;
    std::map<WGen, int> m_plus;

    static const StratumData& standard();

    nlohmann::ordered_json to_json() const;
    static StratumData from_json(const nlohmann::ordered_json& j);
    void validate() const;
};

// All fixture tables behind the two-method computation, bundled so the CLI
// can swap them for an externally supplied JSON document.
struct Fixtures {
    PairingTable pairing;
    StratumData strata;

    static const Fixtures& standard();
    nlohmann::ordered_json to_json() const;
    static Fixtures from_json(const nlohmann::ordered_json& j);
};

// B_2(x) = x^2 - x + 1/6.
Rational bernoulli2(const Rational& x);

// First Chern class of the pushed-forward spin bundle, through the
// Bernoulli-weighted boundary formula.
WClass chiodo_c1();

// The cosection-localized class: -chiodo_c1() - 3*D03_0.
WClass virtual_class();

// Pullback of a downstairs boundary divisor.
WClass st_pullback(M13Gen b);
// Linear extension to degree-one downstairs classes.
WClass st_pullback(const M13Class& c);

// Rewrites repeated divisor factors through node-psi insertions and powers
// of S through the pullback relation, leaving each monomial square-free in
// the stratum generators.
WClass reduce_self_intersections(const WClass& c);

// Pushforward along the forgetful map; expects reduced input.
M13Class st_pushforward(const WClass& c, const StratumData& strata = StratumData::standard());

struct TableRow {
    std::string monomial;
    Rational coeff;
    Rational total;
};

struct ThreeSpinBreakdown {
    Rational theta;         // the invariant, via expand/reduce/push/pair
    Rational prop1;         // cubic + quadratic pullback terms
    Rational prop2;         // linear pullback term without the S^2 part
    Rational prop3;         // pure boundary terms
    Rational prop4_s3;      // pushforward of S^3
    Rational prop4_mixed;   // pushforward of the S^2 cross term
    Rational g4;            // pushforward of S*(-D02+D03-36*D03_0)^2
    Rational g5;            // pushforward of (-D02+D03-36*D03_0)^3
    std::vector<TableRow> table2;
    std::vector<TableRow> table3;
    M13Class max_group_pushforward;
    Rational theta_max_group;
};

Rational theta_three_spin(const Fixtures& fx = Fixtures::standard());

// Pushforward of the virtual class itself, used by the maximal-group variant.
M13Class max_group_pushforward(const Fixtures& fx = Fixtures::standard());

// The maximal-group genus-one invariant. The cube of the pushed-forward
// class pairs to -1/324; the invariant carries the extra sign relating the
// cosection class to the invariant for three odd-rank spin factors.
Rational theta_max_group(const Fixtures& fx = Fixtures::standard());

ThreeSpinBreakdown three_spin_breakdown(const Fixtures& fx = Fixtures::standard());

}  // namespace spincalc
