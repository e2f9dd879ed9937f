#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "spincalc/rational.hpp"

namespace spincalc {

// Degree-one classes on the moduli of three-pointed genus-one stable curves.
// Kps stands for kappa_1 - psi_1 - psi_2 - psi_3 and is rewritten to
// -D02 - D03 the moment a class is built. NodePsi is the formal insertion
// (psi_+ + psi_-) at the non-separating node; it only pairs through the
// dedicated fixture below.
enum class M13Gen { DIrr, D02, D03, Kps, NodePsi };

const std::string& m13_gen_name(M13Gen g);

class M13Class {
public:
    // Monomial: sorted generators, at most three factors.
    using Mono = std::vector<M13Gen>;

    M13Class() = default;
    static M13Class gen(M13Gen g);
    static M13Class term(const Rational& c, Mono m);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Mono m) const;
    const std::map<Mono, Rational>& terms() const { return terms_; }

    M13Class operator-() const;
    M13Class& operator+=(const M13Class& o);
    M13Class& operator-=(const M13Class& o);
    M13Class operator*(const M13Class& o) const;
    M13Class& operator*=(const Rational& c);
    M13Class pow(unsigned k) const;

    friend M13Class operator+(M13Class a, const M13Class& b) { return a += b; }
    friend M13Class operator-(M13Class a, const M13Class& b) { return a -= b; }
    friend M13Class operator*(M13Class a, const Rational& c) { return a *= c; }
    friend M13Class operator*(const Rational& c, M13Class a) { return a *= c; }
    friend bool operator==(const M13Class& a, const M13Class& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    // Applies the ring relations: expands Kps, kills monomials with a
    // repeated DIrr factor, drops monomials above the dimension.
    void add_term(Rational c, Mono m);

    std::map<Mono, Rational> terms_;
};

std::string m13_mono_name(const M13Class::Mono& m);

// The degree-three pairing data: triple intersection numbers of boundary
// divisors, plus the node-psi pairings used by pushforwards of
// self-intersections of the non-separating stratum.
class PairingTable {
public:
    // The standard fixture; the boundary grid is stored cell-by-cell as
    // printed and checked for row/column consistency while canonicalizing.
    static const PairingTable& standard();

    // Exact pairing of a degree-three monomial; lower degrees are not
    // accepted here (m13_degree drops them before lookup).
    Rational pair(const M13Class::Mono& m) const;

    bool has(const M13Class::Mono& m) const;

    nlohmann::ordered_json to_json() const;
    static PairingTable from_json(const nlohmann::ordered_json& j);

    const std::map<M13Class::Mono, Rational>& entries() const { return entries_; }
    const std::map<M13Class::Mono, Rational>& nodepsi_entries() const { return nodepsi_; }

private:
    void validate() const;
    Rational nodepsi_pairing_impl(const M13Class::Mono& m) const;

    std::map<M13Class::Mono, Rational> entries_;   // boundary triples
    std::map<M13Class::Mono, Rational> nodepsi_;   // triples containing NodePsi
};

// Pairing against the fundamental class: degree-three part through the
// table, everything of lower degree contributes zero.
Rational m13_degree(const M13Class& c, const PairingTable& table = PairingTable::standard());

// Fixture lookup for the supported node-psi monomials.
Rational nodepsi_pairing(const M13Class::Mono& m,
                         const PairingTable& table = PairingTable::standard());

}  // namespace spincalc
