#include "spincalc/threespin.hpp"

#include <algorithm>
#include <array>

#include "spincalc/error.hpp"

namespace spincalc {

const std::string& w_gen_name(WGen g) {
    static const std::array<std::string, 12> names = {
        "Dirr0",     "Dirr1",     "Dirr2",       "S",
        "D02",       "D03",       "D03_0",       "st_kps",
        "st_d_irr",  "nodepsi02", "nodepsi03",   "nodepsi_irr"};
    return names.at(size_t(g));
}

std::string w_mono_name(const WClass::Mono& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += w_gen_name(m[i]);
    }
    return out;
}

WClass WClass::gen(WGen g) { return term(Rational(1), {g}); }

WClass WClass::term(const Rational& c, Mono m) {
    WClass r;
    r.add_term(c, std::move(m));
    return r;
}

void WClass::add_term(Rational c, Mono m) {
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[std::move(m)] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational WClass::coeff(Mono m) const {
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

WClass WClass::operator-() const {
    WClass r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

WClass& WClass::operator+=(const WClass& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

WClass& WClass::operator-=(const WClass& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

WClass WClass::operator*(const WClass& o) const {
    WClass r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(ca * cb, std::move(m));
        }
    return r;
}

WClass& WClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, cc] : terms_) cc *= c;
    return *this;
}

WClass WClass::pow(unsigned k) const {
    WClass r = term(Rational(1), {});
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

WClass WClass::expand_s() const {
    WClass r;
    for (const auto& [m, c] : terms_) {
        if (m.size() > 1) throw CalcError("expand_s needs a degree-one class");
        if (m.size() == 1 && m[0] == WGen::S) {
            r += WClass::term(c, {WGen::DIrr0});
            r += WClass::term(-c, {WGen::DIrr1});
            r += WClass::term(-c, {WGen::DIrr2});
        } else {
            r += WClass::term(c, m);
        }
    }
    return r;
}

std::string WClass::str() const {
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
        std::string name = w_mono_name(m);
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

using Mono = WClass::Mono;

Mono smono(std::initializer_list<WGen> gens) {
    Mono m(gens);
    std::sort(m.begin(), m.end());
    return m;
}

bool is_stratum_gen(WGen g) {
    switch (g) {
        case WGen::DIrr0:
        case WGen::DIrr1:
        case WGen::DIrr2:
        case WGen::S:
        case WGen::D02:
        case WGen::D03:
        case WGen::D03_0:
            return true;
        default:
            return false;
    }
}

}  // namespace

const StratumData& StratumData::standard() {
    static const StratumData data = [] {
        StratumData s;
        auto& d = s.deg;
        d[{}] = Rational(3);  // degree of the forgetful map itself

        d[smono({WGen::DIrr0})] = Rational(1);
        d[smono({WGen::DIrr1})] = frac(1, 3);
        d[smono({WGen::DIrr2})] = frac(1, 3);
        d[smono({WGen::D02})] = Rational(3);
        d[smono({WGen::D03})] = Rational(1);
        d[smono({WGen::D03_0})] = frac(1, 9);

        d[smono({WGen::DIrr0, WGen::D02})] = Rational(1);
        d[smono({WGen::DIrr1, WGen::D02})] = frac(1, 3);
        d[smono({WGen::DIrr2, WGen::D02})] = frac(1, 3);
        d[smono({WGen::DIrr0, WGen::D03})] = frac(1, 3);
        d[smono({WGen::DIrr1, WGen::D03})] = frac(1, 9);
        d[smono({WGen::DIrr2, WGen::D03})] = frac(1, 9);
        d[smono({WGen::DIrr0, WGen::D03_0})] = frac(1, 9);
        d[smono({WGen::DIrr1, WGen::D03_0})] = Rational(0);
        d[smono({WGen::DIrr2, WGen::D03_0})] = Rational(0);
        d[smono({WGen::D02, WGen::D03})] = Rational(1);
        d[smono({WGen::D02, WGen::D03_0})] = frac(1, 9);

        d[smono({WGen::DIrr0, WGen::D02, WGen::D03})] = frac(1, 3);
        d[smono({WGen::DIrr1, WGen::D02, WGen::D03})] = frac(1, 9);
        d[smono({WGen::DIrr2, WGen::D02, WGen::D03})] = frac(1, 9);
        d[smono({WGen::DIrr0, WGen::D02, WGen::D03_0})] = frac(1, 9);
        d[smono({WGen::DIrr1, WGen::D02, WGen::D03_0})] = Rational(0);
        d[smono({WGen::DIrr2, WGen::D02, WGen::D03_0})] = Rational(0);

        s.m_plus[WGen::DIrr0] = 1;
        s.m_plus[WGen::DIrr1] = 3;
        s.m_plus[WGen::DIrr2] = 3;
        s.m_plus[WGen::D02] = 1;
        s.m_plus[WGen::D03] = 3;
        s.m_plus[WGen::D03_0] = 3;
        s.validate();
        return s;
    }();
    return data;
}

void StratumData::validate() const {
    for (const auto& [m, v] : deg) {
        if (m.size() > 3) throw CalcError("stratum key above dimension: " + w_mono_name(m));
        for (size_t i = 0; i < m.size(); ++i) {
            if (!is_stratum_gen(m[i]) || m[i] == WGen::S)
                throw CalcError("bad stratum key: " + w_mono_name(m));
            if (i > 0 && m[i] == m[i - 1])
                throw CalcError("stratum key not square-free: " + w_mono_name(m));
        }
        if (v.sign() < 0) throw CalcError("negative stratum degree at " + w_mono_name(m));
    }
    if (!deg.count({})) throw CalcError("stratum data missing the open-stratum degree");
    for (WGen g : {WGen::DIrr0, WGen::DIrr1, WGen::DIrr2, WGen::D02, WGen::D03, WGen::D03_0}) {
        if (!deg.count({g}))
            throw CalcError("stratum data missing degree of " + w_gen_name(g));
        auto it = m_plus.find(g);
        if (it == m_plus.end() || it->second <= 0)
            throw CalcError("stratum data missing node order of " + w_gen_name(g));
    }
}

nlohmann::ordered_json StratumData::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json degrees = nlohmann::ordered_json::object();
    for (const auto& [m, v] : deg) degrees[w_mono_name(m)] = v.str();
    nlohmann::ordered_json orders = nlohmann::ordered_json::object();
    for (const auto& [g, v] : m_plus) orders[w_gen_name(g)] = v;
    j["deg"] = degrees;
    j["m_plus"] = orders;
    return j;
}

namespace {

WGen parse_w_gen(const std::string& name) {
    for (WGen g : {WGen::DIrr0, WGen::DIrr1, WGen::DIrr2, WGen::S, WGen::D02, WGen::D03,
                   WGen::D03_0, WGen::StKps, WGen::StDIrr, WGen::NodePsi02, WGen::NodePsi03,
                   WGen::NodePsiIrr})
        if (name == w_gen_name(g)) return g;
    throw CalcError("unknown generator in table key: " + name);
}

Mono parse_w_mono(const std::string& key) {
    Mono m;
    if (key == "1") return m;
    size_t pos = 0;
    while (pos <= key.size()) {
        size_t star = key.find('*', pos);
        std::string piece =
            key.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        m.push_back(parse_w_gen(piece));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

StratumData StratumData::from_json(const nlohmann::ordered_json& j) {
    StratumData s;
    if (!j.contains("deg") || !j.contains("m_plus"))
        throw CalcError("stratum data JSON needs \"deg\" and \"m_plus\"");
    for (const auto& [key, value] : j.at("deg").items())
        s.deg[parse_w_mono(key)] = Rational::parse(value.get<std::string>());
    for (const auto& [key, value] : j.at("m_plus").items())
        s.m_plus[parse_w_gen(key)] = value.get<int>();
    s.validate();
    return s;
}

const Fixtures& Fixtures::standard() {
    static const Fixtures fx{PairingTable::standard(), StratumData::standard()};
    return fx;
}

nlohmann::ordered_json Fixtures::to_json() const {
    nlohmann::ordered_json j;
    j["m13"] = pairing.to_json();
    j["three_spin"] = strata.to_json();
    return j;
}

Fixtures Fixtures::from_json(const nlohmann::ordered_json& j) {
    if (!j.contains("m13") || !j.contains("three_spin"))
        throw CalcError("fixture JSON needs \"m13\" and \"three_spin\"");
    return Fixtures{PairingTable::from_json(j.at("m13")),
                    StratumData::from_json(j.at("three_spin"))};
}

Rational bernoulli2(const Rational& x) { return x * x - x + frac(1, 6); }

WClass chiodo_c1() {
    // balanced partner q_- of each node monodromy q, with q + q_- = 0 mod 3
    const Rational b13 = bernoulli2(frac(1, 3));  // = B2(2/3)
    const Rational b0 = bernoulli2(Rational(0));
    const Rational half = frac(1, 2);

    WClass c = WClass::term(b13 * half, {WGen::StKps});
    c += WClass::term(b0 * half, {WGen::D02});
    c += WClass::term(Rational(3) * b13 * half, {WGen::D03});
    c += WClass::term(bernoulli2(Rational(0)) * half * Rational(1), {WGen::DIrr0});
    c += WClass::term(bernoulli2(frac(2, 3)) * half * Rational(3), {WGen::DIrr1});
    c += WClass::term(bernoulli2(frac(1, 3)) * half * Rational(3), {WGen::DIrr2});
    return c;
}

WClass virtual_class() {
    WClass v = -chiodo_c1();
    v += WClass::term(Rational(-3), {WGen::D03_0});
    // collect the non-separating pieces into the named combination S
    Rational c0 = v.coeff({WGen::DIrr0});
    Rational c1 = v.coeff({WGen::DIrr1});
    Rational c2 = v.coeff({WGen::DIrr2});
    if (c1 != c2 || c0 != -c1)
        throw CalcError("virtual class does not assemble into S");
    v -= WClass::term(c0, {WGen::DIrr0});
    v -= WClass::term(c1, {WGen::DIrr1});
    v -= WClass::term(c2, {WGen::DIrr2});
    v += WClass::term(c0, {WGen::S});
    return v;
}

WClass st_pullback(M13Gen b) {
    switch (b) {
        case M13Gen::DIrr:
            return WClass::term(Rational(1), {WGen::DIrr0}) +
                   WClass::term(Rational(6), {WGen::DIrr1});
        case M13Gen::D03:
            return WClass::term(Rational(3), {WGen::D03});
        case M13Gen::D02:
            return WClass::gen(WGen::D02);
        default:
            throw CalcError("st pullback is only defined on boundary divisors, got " +
                            m13_gen_name(b));
    }
}

WClass st_pullback(const M13Class& c) {
    WClass r;
    for (const auto& [m, coeff] : c.terms()) {
        if (m.size() != 1)
            throw CalcError("st pullback needs a degree-one boundary class, got " + c.str());
        r += coeff * st_pullback(m[0]);
    }
    return r;
}

namespace {

struct Counts {
    std::map<WGen, int> n;
    int of(WGen g) const {
        auto it = n.find(g);
        return it == n.end() ? 0 : it->second;
    }
};

Counts count_mono(const Mono& m) {
    Counts c;
    for (WGen g : m) ++c.n[g];
    return c;
}

void reduce_mono(const Mono& m, const Rational& coeff, const StratumData& strata, WClass& out);

void reduce_emit(WClass partial, const Rational& coeff, const StratumData& strata, WClass& out) {
    for (const auto& [m, c] : partial.terms()) reduce_mono(m, coeff * c, strata, out);
}

void reduce_mono(const Mono& m, const Rational& coeff, const StratumData& strata, WClass& out) {
    if (coeff.is_zero()) return;
    if (m.size() > 3) throw CalcError("degree overflow: " + w_mono_name(m));

    Counts c = count_mono(m);

    // powers of S through the pullback relation S = -st_d_irr/3 + 4/3*Dirr0
    // together with st_d_irr^2 = 0
    int s_count = c.of(WGen::S);
    if (s_count >= 2) {
        Mono rest;
        for (WGen g : m)
            if (g != WGen::S) rest.push_back(g);
        WClass repl;
        if (s_count == 2) {
            repl += WClass::term(frac(16, 9), {WGen::DIrr0, WGen::DIrr0});
            repl += WClass::term(frac(-8, 9), {WGen::DIrr0, WGen::StDIrr});
        } else {
            repl += WClass::term(frac(64, 27), {WGen::DIrr0, WGen::DIrr0, WGen::DIrr0});
            repl += WClass::term(frac(-16, 9), {WGen::DIrr0, WGen::DIrr0, WGen::StDIrr});
        }
        repl = repl * WClass::term(Rational(1), rest);
        reduce_emit(std::move(repl), coeff, strata, out);
        return;
    }

    // pullback of a square of the downstairs non-separating divisor
    if (c.of(WGen::StDIrr) >= 2) return;

    // repeated factors inside one divisor family become node-psi insertions:
    // X*X = X * (-st(psi_+ + psi_-)/m_+)
    struct Family {
        std::vector<WGen> members;  // most special last
        WGen psi;
    };
    static const std::vector<Family> families = {
        {{WGen::D02}, WGen::NodePsi02},
        {{WGen::D03, WGen::D03_0}, WGen::NodePsi03},
        {{WGen::DIrr0}, WGen::NodePsiIrr},
    };

    Mono reduced;
    Rational factor(1);
    std::map<WGen, int> family_total;
    for (const auto& fam : families) {
        int total = 0;
        WGen keep = fam.members.front();
        for (WGen g : fam.members) {
            int k = c.of(g);
            if (k > 0) keep = g;  // the later member is the more special component
            total += k;
        }
        if (total == 0) continue;
        reduced.push_back(keep);
        if (total > 1) {
            int mp = strata.m_plus.at(keep);
            factor *= frac(-1, mp).pow(unsigned(total - 1));
            for (int i = 0; i < total - 1; ++i) reduced.push_back(fam.psi);
        }
    }
    // everything not covered by a family passes through untouched
    for (WGen g : m) {
        switch (g) {
            case WGen::D02:
            case WGen::D03:
            case WGen::D03_0:
            case WGen::DIrr0:
                break;
            default:
                reduced.push_back(g);
        }
    }
    out += WClass::term(coeff * factor, std::move(reduced));
}

}  // namespace

WClass reduce_self_intersections(const WClass& c) {
    WClass out;
    const StratumData& strata = StratumData::standard();
    for (const auto& [m, coeff] : c.terms()) reduce_mono(m, coeff, strata, out);
    return out;
}

namespace {

M13Gen image_of(WGen g) {
    switch (g) {
        case WGen::DIrr0:
        case WGen::DIrr1:
        case WGen::DIrr2:
            return M13Gen::DIrr;
        case WGen::D02:
            return M13Gen::D02;
        case WGen::D03:
        case WGen::D03_0:
            return M13Gen::D03;
        default:
            throw CalcError("no downstairs image for " + w_gen_name(g));
    }
}

void push_mono(const Mono& m, const Rational& coeff, const StratumData& strata, M13Class& out) {
    if (m.size() > 3) throw CalcError("degree overflow: " + w_mono_name(m));

    Counts c = count_mono(m);
    bool has_irr = c.of(WGen::S) || c.of(WGen::DIrr0) || c.of(WGen::DIrr1) || c.of(WGen::DIrr2);
    // projection formula: a non-separating stratum against the pulled-back
    // non-separating divisor pushes to zero, whatever else multiplies it
    if (has_irr && c.of(WGen::StDIrr) > 0) return;

    Mono stratum;
    int st_kps = 0, st_dirr = 0, psi02 = 0, psi03 = 0, psi_irr = 0;
    for (const auto& [g, k] : c.n) {
        switch (g) {
            case WGen::StKps:
                st_kps = k;
                break;
            case WGen::StDIrr:
                st_dirr = k;
                break;
            case WGen::NodePsi02:
                psi02 = k;
                break;
            case WGen::NodePsi03:
                psi03 = k;
                break;
            case WGen::NodePsiIrr:
                psi_irr = k;
                break;
            default:
                if (k > 1)
                    throw CalcError("unsupported stratum (reduce first): " + w_mono_name(m));
                stratum.push_back(g);
        }
    }

    if ((psi02 && !c.of(WGen::D02)) || (psi03 && !(c.of(WGen::D03) || c.of(WGen::D03_0))) ||
        (psi_irr && !has_irr))
        throw CalcError("unsupported stratum: " + w_mono_name(m));

    // linear expansion of S into the three monodromy pieces
    struct Piece {
        Rational sign;
        Mono stratum;
    };
    std::vector<Piece> pieces;
    auto s_pos = std::find(stratum.begin(), stratum.end(), WGen::S);
    if (s_pos != stratum.end()) {
        Mono rest(stratum.begin(), s_pos);
        rest.insert(rest.end(), std::next(s_pos), stratum.end());
        for (auto [g, sign] : {std::pair{WGen::DIrr0, Rational(1)},
                               std::pair{WGen::DIrr1, Rational(-1)},
                               std::pair{WGen::DIrr2, Rational(-1)}}) {
            Mono piece = rest;
            piece.push_back(g);
            std::sort(piece.begin(), piece.end());
            if (std::count(piece.begin(), piece.end(), g) > 1)
                throw CalcError("unsupported stratum (reduce first): " + w_mono_name(m));
            pieces.push_back({sign, std::move(piece)});
        }
    } else {
        pieces.push_back({Rational(1), std::move(stratum)});
    }

    for (const auto& piece : pieces) {
        auto deg_it = strata.deg.find(piece.stratum);
        if (deg_it == strata.deg.end())
            throw CalcError("unsupported stratum: " + w_mono_name(piece.stratum));
        if (deg_it->second.is_zero()) continue;

        M13Class cls = M13Class::term(Rational(1), {});
        for (WGen g : piece.stratum) cls = cls * M13Class::gen(image_of(g));
        // peeled pullback factors reattach downstairs
        for (int i = 0; i < st_kps; ++i)
            cls = cls * (-M13Class::gen(M13Gen::D02) - M13Class::gen(M13Gen::D03));
        for (int i = 0; i < st_dirr; ++i) cls = cls * M13Class::gen(M13Gen::DIrr);
        // a node-psi on a separating stratum is minus its own divisor
        for (int i = 0; i < psi02; ++i) cls = cls * (-M13Class::gen(M13Gen::D02));
        for (int i = 0; i < psi03; ++i) cls = cls * (-M13Class::gen(M13Gen::D03));
        for (int i = 0; i < psi_irr; ++i) cls = cls * M13Class::gen(M13Gen::NodePsi);

        out += (coeff * piece.sign * deg_it->second) * cls;
    }
}

}  // namespace

M13Class st_pushforward(const WClass& c, const StratumData& strata) {
    M13Class out;
    for (const auto& [m, coeff] : c.terms()) push_mono(m, coeff, strata, out);
    return out;
}

namespace {

Rational push_pair(const WClass& c, const Fixtures& fx) {
    return m13_degree(st_pushforward(reduce_self_intersections(c), fx.strata), fx.pairing);
}

struct RowSpec {
    std::string name;
    Rational coeff;
    WClass mono;
};

std::vector<RowSpec> table2_specs() {
    const WClass s = WClass::gen(WGen::S);
    const WClass d02 = WClass::gen(WGen::D02);
    const WClass d03 = WClass::gen(WGen::D03);
    const WClass d030 = WClass::gen(WGen::D03_0);
    return {
        {"S*D02", Rational(2), s * d02},
        {"S*D03", Rational(-2), s * d03},
        {"S*D03_0", Rational(72), s * d030},
        {"D02*D02", Rational(1), d02 * d02},
        {"D02*D03", Rational(-2), d02 * d03},
        {"D02*D03_0", Rational(72), d02 * d030},
        {"D03*D03", Rational(1), d03 * d03},
        {"D03*D03_0", Rational(-72), d03 * d030},
        {"D03_0*D03_0", Rational(36 * 36), d030 * d030},
    };
}

std::vector<RowSpec> table3_specs() {
    const WClass s = WClass::gen(WGen::S);
    const WClass d02 = WClass::gen(WGen::D02);
    const WClass d03 = WClass::gen(WGen::D03);
    const WClass d030 = WClass::gen(WGen::D03_0);
    return {
        {"S*D02*D02", Rational(1), s * d02 * d02},
        {"S*D02*D03", Rational(-2), s * d02 * d03},
        {"S*D02*D03_0", Rational(72), s * d02 * d030},
        {"S*D03*D03", Rational(1), s * d03 * d03},
        {"S*D03*D03_0", Rational(-72), s * d03 * d030},
        {"S*D03_0*D03_0", Rational(36 * 36), s * d030 * d030},
        {"D02*D02*D02", Rational(-1), d02 * d02 * d02},
        {"D02*D02*D03", Rational(3), d02 * d02 * d03},
        {"D02*D02*D03_0", Rational(-108), d02 * d02 * d030},
        {"D02*D03*D03", Rational(-3), d02 * d03 * d03},
        {"D02*D03*D03_0", Rational(6 * 36), d02 * d03 * d030},
        {"D02*D03_0*D03_0", Rational(-3L * 36 * 36), d02 * d030 * d030},
        {"D03*D03*D03", Rational(1), d03 * d03 * d03},
        {"D03*D03*D03_0", Rational(-108), d03 * d03 * d030},
        {"D03*D03_0*D03_0", Rational(3L * 36 * 36), d03 * d030 * d030},
        {"D03_0*D03_0*D03_0", Rational(-36L * 36 * 36), d030 * d030 * d030},
    };
}

}  // namespace

Rational theta_three_spin(const Fixtures& fx) {
    const WClass v = virtual_class();
    return push_pair(v * v * v, fx);
}

M13Class max_group_pushforward(const Fixtures& fx) {
    return st_pushforward(reduce_self_intersections(virtual_class()), fx.strata);
}

Rational theta_max_group(const Fixtures& fx) {
    M13Class down = max_group_pushforward(fx);
    Rational cube = m13_degree(down * down * down, fx.pairing);
    // the invariant is minus the pairing of the cube of the cosection class:
    // three spin factors, each of odd virtual rank
    return -cube;
}

ThreeSpinBreakdown three_spin_breakdown(const Fixtures& fx) {
    ThreeSpinBreakdown b;
    const WClass v = virtual_class();
    b.theta = push_pair(v * v * v, fx);

    const WClass a = WClass::term(frac(1, 36), {WGen::StKps});
    const WClass rest = v - a;
    b.prop1 = push_pair(a * a * a + Rational(3) * (a * a * rest), fx);

    const WClass s2_part = WClass::term(frac(1, 144), {WGen::S, WGen::S});
    b.prop2 = push_pair(Rational(3) * (a * (rest * rest - s2_part)), fx);

    const WClass t = -WClass::gen(WGen::D02) + WClass::gen(WGen::D03) +
                     WClass::term(Rational(-36), {WGen::D03_0});
    const WClass s = WClass::gen(WGen::S);
    b.g4 = push_pair(s * t * t, fx);
    b.g5 = push_pair(t * t * t, fx);
    b.prop3 = (Rational(-3) * b.g4 + b.g5) / Rational(12).pow(3);

    b.prop4_s3 = push_pair(s * s * s, fx);
    const WClass mixed = WClass::gen(WGen::StKps) - Rational(3) * WClass::gen(WGen::D02) +
                         Rational(3) * WClass::gen(WGen::D03) +
                         WClass::term(Rational(-108), {WGen::D03_0});
    b.prop4_mixed = push_pair(s * s * mixed, fx);

    const WClass kps = WClass::gen(WGen::StKps);
    for (const auto& row : table2_specs())
        b.table2.push_back({row.name, row.coeff, row.coeff * push_pair(kps * row.mono, fx)});
    for (const auto& row : table3_specs())
        b.table3.push_back({row.name, row.coeff, row.coeff * push_pair(row.mono, fx)});

    b.max_group_pushforward = max_group_pushforward(fx);
    b.theta_max_group = theta_max_group(fx);
    return b;
}

}  // namespace spincalc
