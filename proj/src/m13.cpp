#include "spincalc/m13.hpp"

#include <algorithm>
#include <array>

#include "spincalc/error.hpp"

namespace spincalc {

const std::string& m13_gen_name(M13Gen g) {
    static const std::array<std::string, 5> names = {"d_irr", "d02", "d03", "kps", "nodepsi"};
    return names.at(size_t(g));
}

std::string m13_mono_name(const M13Class::Mono& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += m13_gen_name(m[i]);
    }
    return out;
}

M13Class M13Class::gen(M13Gen g) { return term(Rational(1), {g}); }

M13Class M13Class::term(const Rational& c, Mono m) {
    M13Class r;
    r.add_term(c, std::move(m));
    return r;
}

void M13Class::add_term(Rational c, Mono m) {
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    if (m.size() > 3) return;  // above the dimension, the class vanishes

    // kappa_1 - sum psi_i = -d02 - d03
    auto kps = std::find(m.begin(), m.end(), M13Gen::Kps);
    if (kps != m.end()) {
        Mono rest(m.begin(), kps);
        rest.insert(rest.end(), std::next(kps), m.end());
        Mono with02 = rest;
        with02.push_back(M13Gen::D02);
        Mono with03 = rest;
        with03.push_back(M13Gen::D03);
        add_term(-c, std::move(with02));
        add_term(-c, std::move(with03));
        return;
    }

    // d_irr^2 = 0
    if (std::count(m.begin(), m.end(), M13Gen::DIrr) >= 2) return;

    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[std::move(m)] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational M13Class::coeff(Mono m) const {
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

M13Class M13Class::operator-() const {
    M13Class r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

M13Class& M13Class::operator+=(const M13Class& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

M13Class& M13Class::operator-=(const M13Class& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

M13Class M13Class::operator*(const M13Class& o) const {
    M13Class r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(ca * cb, std::move(m));
        }
    return r;
}

M13Class& M13Class::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, cc] : terms_) cc *= c;
    return *this;
}

M13Class M13Class::pow(unsigned k) const {
    M13Class r = term(Rational(1), {});
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string M13Class::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    };
    for (const auto& [m, c] : terms_) {
        std::string name = m13_mono_name(m);
        if (m.empty()) {
            append(c.str());
        } else if (c.is_one()) {
            append(name);
        } else if ((-c).is_one()) {
            append("-" + name);
        } else {
            append(c.str() + "*" + name);
        }
    }
    return out;
}

namespace {

using Mono = M13Class::Mono;

Mono mono(std::initializer_list<M13Gen> gens) {
    Mono m(gens);
    std::sort(m.begin(), m.end());
    return m;
}

struct GridCell {
    M13Gen row;
    Mono col;
    Rational value;
};

// Table of boundary intersection numbers, cell by cell as printed.
// Rows d_irr, d02, d03; columns d02*d03, d_irr*d03, d_irr*d02, d02^2, d03^2.
const std::vector<GridCell>& boundary_grid() {
    static const std::vector<GridCell> grid = {
        {M13Gen::DIrr, mono({M13Gen::D02, M13Gen::D03}), frac(3, 2)},
        {M13Gen::DIrr, mono({M13Gen::DIrr, M13Gen::D03}), Rational(0)},
        {M13Gen::DIrr, mono({M13Gen::DIrr, M13Gen::D02}), Rational(0)},
        {M13Gen::DIrr, mono({M13Gen::D02, M13Gen::D02}), frac(-3, 2)},
        {M13Gen::DIrr, mono({M13Gen::D03, M13Gen::D03}), frac(-1, 2)},

        {M13Gen::D02, mono({M13Gen::D02, M13Gen::D03}), Rational(0)},
        {M13Gen::D02, mono({M13Gen::DIrr, M13Gen::D03}), frac(3, 2)},
        {M13Gen::D02, mono({M13Gen::DIrr, M13Gen::D02}), frac(-3, 2)},
        {M13Gen::D02, mono({M13Gen::D02, M13Gen::D02}), frac(1, 8)},
        {M13Gen::D02, mono({M13Gen::D03, M13Gen::D03}), frac(-1, 8)},

        {M13Gen::D03, mono({M13Gen::D02, M13Gen::D03}), frac(-1, 8)},
        {M13Gen::D03, mono({M13Gen::DIrr, M13Gen::D03}), frac(-1, 2)},
        {M13Gen::D03, mono({M13Gen::DIrr, M13Gen::D02}), frac(3, 2)},
        {M13Gen::D03, mono({M13Gen::D02, M13Gen::D02}), Rational(0)},
        {M13Gen::D03, mono({M13Gen::D03, M13Gen::D03}), frac(1, 12)},
    };
    return grid;
}

}  // namespace

const PairingTable& PairingTable::standard() {
    static const PairingTable table = [] {
        PairingTable t;
        for (const auto& cell : boundary_grid()) {
            Mono m = cell.col;
            m.push_back(cell.row);
            std::sort(m.begin(), m.end());
            if (std::count(m.begin(), m.end(), M13Gen::DIrr) >= 2) {
                // killed by d_irr^2 = 0; the printed cell must agree
                if (!cell.value.is_zero())
                    throw CalcError("boundary grid contradicts d_irr^2 = 0 at " +
                                    m13_mono_name(m));
                continue;
            }
            auto it = t.entries_.find(m);
            if (it == t.entries_.end()) {
                t.entries_[m] = cell.value;
            } else if (it->second != cell.value) {
                // the same triple product read off two different rows
                throw CalcError("inconsistent boundary grid at " + m13_mono_name(m));
            }
        }
        t.nodepsi_[mono({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::NodePsi})] = Rational(3);
        t.nodepsi_[mono({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::D02})] = Rational(3);
        t.nodepsi_[mono({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::D03})] = Rational(0);
        t.validate();
        return t;
    }();
    return table;
}

void PairingTable::validate() const {
    // every degree-three boundary monomial not killed by relations is present
    static const std::vector<Mono> required = {
        mono({M13Gen::DIrr, M13Gen::D02, M13Gen::D03}),
        mono({M13Gen::DIrr, M13Gen::D02, M13Gen::D02}),
        mono({M13Gen::DIrr, M13Gen::D03, M13Gen::D03}),
        mono({M13Gen::D02, M13Gen::D02, M13Gen::D02}),
        mono({M13Gen::D02, M13Gen::D02, M13Gen::D03}),
        mono({M13Gen::D02, M13Gen::D03, M13Gen::D03}),
        mono({M13Gen::D03, M13Gen::D03, M13Gen::D03}),
    };
    for (const auto& m : required)
        if (!entries_.count(m)) throw CalcError("pairing table missing " + m13_mono_name(m));
    for (const auto& [m, v] : entries_) {
        if (m.size() != 3) throw CalcError("pairing key of wrong degree: " + m13_mono_name(m));
        if (std::count(m.begin(), m.end(), M13Gen::DIrr) >= 2 && !v.is_zero())
            throw CalcError("pairing table contradicts d_irr^2 = 0 at " + m13_mono_name(m));
        for (M13Gen g : m)
            if (g == M13Gen::Kps || g == M13Gen::NodePsi)
                throw CalcError("pairing key outside the boundary ring: " + m13_mono_name(m));
    }
    static const std::vector<Mono> required_nodepsi = {
        mono({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::NodePsi}),
        mono({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::D02}),
        mono({M13Gen::DIrr, M13Gen::NodePsi, M13Gen::D03}),
    };
    for (const auto& m : required_nodepsi)
        if (!nodepsi_.count(m))
            throw CalcError("pairing table missing node-psi entry " + m13_mono_name(m));
}

bool PairingTable::has(const M13Class::Mono& m) const {
    return entries_.count(m) > 0 || nodepsi_.count(m) > 0;
}

Rational PairingTable::pair(const M13Class::Mono& m) const {
    if (std::find(m.begin(), m.end(), M13Gen::NodePsi) != m.end())
        return nodepsi_pairing_impl(m);
    auto it = entries_.find(m);
    if (it == entries_.end()) {
        if (std::count(m.begin(), m.end(), M13Gen::DIrr) >= 2) return Rational(0);
        throw CalcError("unknown stratum pairing: " + m13_mono_name(m));
    }
    return it->second;
}

Rational PairingTable::nodepsi_pairing_impl(const M13Class::Mono& m) const {
    auto it = nodepsi_.find(m);
    if (it == nodepsi_.end()) {
        if (std::count(m.begin(), m.end(), M13Gen::DIrr) >= 2) return Rational(0);
        throw CalcError("unknown node-psi pairing: " + m13_mono_name(m));
    }
    return it->second;
}

nlohmann::ordered_json PairingTable::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json pairings = nlohmann::ordered_json::object();
    for (const auto& [m, v] : entries_) pairings[m13_mono_name(m)] = v.str();
    nlohmann::ordered_json nodepsi = nlohmann::ordered_json::object();
    for (const auto& [m, v] : nodepsi_) nodepsi[m13_mono_name(m)] = v.str();
    j["pairings"] = pairings;
    j["node_psi"] = nodepsi;
    return j;
}

namespace {

M13Class::Mono parse_m13_mono(const std::string& key) {
    M13Class::Mono m;
    size_t pos = 0;
    while (pos < key.size()) {
        size_t star = key.find('*', pos);
        std::string piece = key.substr(pos, star == std::string::npos ? star : star - pos);
        bool found = false;
        for (M13Gen g : {M13Gen::DIrr, M13Gen::D02, M13Gen::D03, M13Gen::Kps, M13Gen::NodePsi})
            if (piece == m13_gen_name(g)) {
                m.push_back(g);
                found = true;
                break;
            }
        if (!found) throw CalcError("unknown generator in table key: " + piece);
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

PairingTable PairingTable::from_json(const nlohmann::ordered_json& j) {
    PairingTable t;
    if (!j.contains("pairings") || !j.contains("node_psi"))
        throw CalcError("pairing table JSON needs \"pairings\" and \"node_psi\"");
    for (const auto& [key, value] : j.at("pairings").items())
        t.entries_[parse_m13_mono(key)] = Rational::parse(value.get<std::string>());
    for (const auto& [key, value] : j.at("node_psi").items())
        t.nodepsi_[parse_m13_mono(key)] = Rational::parse(value.get<std::string>());
    t.validate();
    return t;
}

Rational m13_degree(const M13Class& c, const PairingTable& table) {
    Rational total(0);
    for (const auto& [m, coeff] : c.terms()) {
        if (m.size() != 3) continue;  // lower degree pairs to zero
        total += coeff * table.pair(m);
    }
    return total;
}

Rational nodepsi_pairing(const M13Class::Mono& m, const PairingTable& table) {
    M13Class::Mono s = m;
    std::sort(s.begin(), s.end());
    if (std::find(s.begin(), s.end(), M13Gen::NodePsi) == s.end())
        throw CalcError("unknown node-psi pairing: " + m13_mono_name(s));
    return table.pair(s);
}

}  // namespace spincalc
