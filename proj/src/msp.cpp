#include "spincalc/msp.hpp"

#include <algorithm>

#include "spincalc/error.hpp"

namespace spincalc {

Rational vdim(int genus, const std::vector<Mark>& gamma, const Rational& d0,
              const Rational& d_inf) {
    Rational twisted(0);
    long l_phi = 0;
    for (const Mark& mk : gamma) {
        if (mk.kind == Mark::Phi)
            ++l_phi;
        else if (mk.kind == Mark::Mu)
            twisted += frac(mk.m, 3);
    }
    return d0 + d_inf + Rational(genus - 1) + Rational(long(gamma.size())) -
           Rational(2) * (Rational(l_phi) + twisted);
}

std::vector<int> MspGraph::edges_at(int v) const {
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].v_inf == v || edges[i].v_other == v) out.push_back(int(i));
    return out;
}

int edge_r(const MspEdge& e) { return e.d.is_integer() ? 1 : 3; }

namespace {

const MspVertex& vertex_at(const MspGraph& g, int v) { return g.vertices.at(size_t(v)); }

bool inf_side_is_u01(const MspGraph& g, const MspEdge& e) {
    const MspVertex& vi = vertex_at(g, e.v_inf);
    return vi.level == Level::Infinity && vi.kind == VertexKind::U01;
}

long rat_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q.get_si();
}

long rat_ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q.get_si();
}

long rat_int(const Rational& r, const char* what) {
    if (!r.is_integer()) throw CalcError(std::string(what) + " is not an integer: " + r.str());
    return r.num().get_si();
}

}  // namespace

int ge_order(const MspGraph& g, int edge) {
    const MspEdge& e = g.edges.at(size_t(edge));
    Rational val = Rational(-3) * e.d;
    if (inf_side_is_u01(g, e)) val -= Rational(1);
    long n = rat_int(val, "edge stabilizer order");
    return int(n < 0 ? -n : n);
}

LaurentPoly node_weight(const MspGraph& g, int edge, int vertex, const Rational& tscale) {
    const MspEdge& e = g.edges.at(size_t(edge));
    if (vertex != e.v_inf && vertex != e.v_other)
        throw CalcError("flag does not exist: edge " + std::to_string(edge) + ", vertex " +
                        std::to_string(vertex));
    const MspVertex& vi = vertex_at(g, e.v_inf);
    if (vi.level != Level::Infinity) throw CalcError("edge case out of scope");

    if (vi.kind == VertexKind::U01) {
        // d_e integral; weights 3t/(3d+1) on the unstable side, opposite across
        Rational denom = Rational(3) * e.d + Rational(1);
        Rational c = Rational(3) / denom;
        return LaurentPoly::mono(vertex == e.v_inf ? c : -c, 1) * LaurentPoly(tscale);
    }
    if (vertex == e.v_inf) return LaurentPoly::mono(Rational(1) / (Rational(edge_r(e)) * e.d), 1) *
                                  LaurentPoly(tscale);
    return LaurentPoly::mono(Rational(-1) / e.d, 1) * LaurentPoly(tscale);
}

LaurentPoly edge_factor(const MspGraph& g, int edge, const Rational& tscale) {
    const MspEdge& e = g.edges.at(size_t(edge));
    const MspVertex& vi = vertex_at(g, e.v_inf);
    const MspVertex& vo = vertex_at(g, e.v_other);
    if (vi.level == Level::Zero || vo.level == Level::Zero)
        throw CalcError("edge case out of scope");  // level-0 edges never occur here
    if (e.d.is_zero()) throw CalcError("degenerate edge degree");
    if (e.d.sign() > 0) throw CalcError("edge case out of scope");

    auto t_mono = [&](const Rational& c) { return LaurentPoly::mono(c * tscale, 1); };

    LaurentPoly num(Rational(1));
    LaurentPoly den(Rational(1));
    if (!inf_side_is_u01(g, e)) {
        // ceil(-d)-1 cubic factors over the -3d and floor(-d) linear ones
        long top = rat_ceil(-e.d) - 1;
        for (long j = 1; j <= top; ++j)
            num *= t_mono(Rational(-1) - Rational(j) / e.d).pow(3);
        long n3 = rat_int(Rational(-3) * e.d, "edge factor bound");
        for (long j = 1; j <= n3; ++j) den *= t_mono(Rational(-j) / e.d);
        long nf = rat_floor(-e.d);
        for (long j = 1; j <= nf; ++j) den *= t_mono(Rational(j) / e.d);
    } else {
        Rational denom3 = Rational(3) * e.d + Rational(1);
        long top = rat_int(-e.d, "edge degree") - 1;
        for (long j = 1; j <= top; ++j)
            num *= t_mono(Rational(-1) - Rational(3 * j) / denom3).pow(3);
        long n3 = rat_int(Rational(-3) * e.d - Rational(1), "edge factor bound");
        for (long j = 1; j <= n3; ++j) den *= t_mono(Rational(-3 * j) / denom3);
        long nd = rat_int(-e.d, "edge degree");
        for (long j = 1; j <= nd; ++j) den *= t_mono(Rational(3 * j) / denom3);
    }
    return num.div_mono(den);
}

LaurentPoly unstable_vertex_factor(const MspGraph& g, int v, const Rational& tscale) {
    const MspVertex& vx = vertex_at(g, v);
    if (vx.kind == VertexKind::Stable) throw CalcError("vertex is stable");
    if (vx.level == Level::Zero || vx.kind == VertexKind::U11)
        throw CalcError("vertex case out of scope");
    std::vector<int> flags = g.edges_at(v);

    if (vx.kind == VertexKind::U01) {
        if (flags.size() != 1) throw CalcError("unstable vertex with wrong valence");
        LaurentPoly w = node_weight(g, flags[0], v, tscale);
        if (vx.level == Level::Infinity) return w;
        return LaurentPoly::mono(Rational(3) * tscale, 1) * w;  // 3t * w
    }

    // U02
    if (flags.size() != 2) throw CalcError("unstable vertex with wrong valence");
    LaurentPoly wsum =
        node_weight(g, flags[0], v, tscale) + node_weight(g, flags[1], v, tscale);
    if (vx.level == Level::One) {
        // -3 t^4 / (w + w')
        return LaurentPoly::mono(Rational(-3) * tscale.pow(4), 4).div_mono(wsum);
    }
    // level infinity: (-t)^{6 eps(d_e)} / (w + w')
    bool integral = g.edges[size_t(flags[0])].d.is_integer() ||
                    g.edges[size_t(flags[1])].d.is_integer();
    LaurentPoly twist =
        integral ? LaurentPoly::mono(tscale.pow(6), 6) : LaurentPoly(Rational(1));
    return twist.div_mono(wsum);
}

StableFactor stable_vertex_factor(const MspGraph& g, int v, const Rational& tscale) {
    const MspVertex& vx = vertex_at(g, v);
    if (vx.kind != VertexKind::Stable) throw CalcError("vertex is unstable");
    if (vx.level == Level::Zero) throw CalcError("vertex case out of scope");

    StableFactor f{LocalAlgebra(vx.moduli_dim), {}, {}};
    const LaurentPoly ts = LaurentPoly::mono(tscale, 1);
    std::vector<int> flags = g.edges_at(v);

    LocalAlgebra::Element elem;
    if (vx.level == Level::Infinity) {
        int ch1 = f.algebra.add_generator("ch1");
        f.gens["ch1"] = ch1;
        if (vx.spin_rank == -1) {
            // e_T^{-1} = -t - ch_1
            elem = f.algebra.scalar(-ts) - f.algebra.gen(ch1);
        } else if (vx.spin_rank == -2) {
            // only the degree-zero part of the Euler class survives: (-t)^2
            elem = f.algebra.scalar(ts * ts);
        } else {
            throw CalcError("vertex case out of scope");
        }
    } else {
        if (vx.genus != 1) throw CalcError("vertex case out of scope");
        int l1 = f.algebra.add_generator("lambda1");
        int l1v = f.algebra.add_generator("lambda1v");
        f.gens["lambda1"] = l1;
        f.gens["lambda1v"] = l1v;
        // (e_T(E^v x L_{-1}) / (-t))^3 * 3t / e_T(E x L_3) * (-t^3)^{edges}
        LocalAlgebra::Element ev = f.algebra.gen(l1v) - f.algebra.scalar(ts);
        elem = ev.pow(3);
        elem *= mono_inverse(LaurentPoly::mono(-tscale.pow(3), 3));
        LaurentPoly three_t = LaurentPoly::mono(Rational(3) * tscale, 1);
        elem = elem * geometric_inverse(three_t, -f.algebra.gen(l1));
        elem *= three_t;
        elem *= LaurentPoly::mono(-tscale.pow(3), 3).pow(unsigned(flags.size()));
    }

    for (int eidx : flags) {
        std::string name = "psi_" + std::to_string(eidx);
        int p = f.algebra.add_generator(name);
        f.gens[name] = p;
        elem = elem * geometric_inverse(node_weight(g, eidx, v, tscale), f.algebra.gen(p));
    }
    f.element = elem;
    return f;
}

AtomCombo vertex_contribution(const MspGraph& g, int v, const Rational& tscale) {
    const MspVertex& vx = vertex_at(g, v);
    if (vx.kind != VertexKind::Stable)
        return AtomCombo(unstable_vertex_factor(g, v, tscale));

    StableFactor f = stable_vertex_factor(g, v, tscale);
    AtomCombo combo;
    for (const auto& [mono, c] : f.element.terms()) {
        int deg = f.algebra.mono_degree(mono);
        if (deg < f.algebra.cap()) {
            if (deg == 0) continue;  // pairs with a class of too-low degree
            throw CalcError("unbound insertion of degree " + std::to_string(deg));
        }
        if (deg == 0) {
            if (!vx.fundamental) throw CalcError("unbound insertion on vertex");
            combo += AtomCombo::atom(*vx.fundamental, c);
            continue;
        }
        if (mono.size() != 1) throw CalcError("unbound insertion: " + f.element.str());
        const std::string& name = f.algebra.generator_name(mono[0]);
        if (vx.level == Level::Infinity) {
            if (name == "ch1")
                combo += AtomCombo::atom(Atom::ICh1, c);
            else
                combo += AtomCombo::atom(Atom::IPsiSpin11, c);
        } else {
            if (name == "lambda1")
                combo += AtomCombo::atom(Atom::HodgeLambda1, c);
            else if (name == "lambda1v")
                combo += AtomCombo::atom(Atom::HodgeLambda1, -c);
            else
                combo += AtomCombo::atom(Atom::PsiM11, c);
        }
    }
    return combo;
}

AtomCombo graph_contribution(const MspGraph& g, const AtomTable& atoms,
                             const Rational& tscale) {
    AtomCombo product{LaurentPoly(Rational(1))};
    for (int v = 0; v < int(g.vertices.size()); ++v)
        product = product * vertex_contribution(g, v, tscale);

    Rational scalar = frac(1, g.aut);
    LaurentPoly edge_part(Rational(1));
    for (int e = 0; e < int(g.edges.size()); ++e) {
        edge_part *= edge_factor(g, e, tscale);
        scalar /= Rational(ge_order(g, e));
    }
    product *= edge_part;
    product *= LaurentPoly(scalar);

    long delta = rat_int(vdim(g.type.genus, g.type.gamma, g.type.d0, g.type.d_inf),
                         "virtual dimension");
    LaurentPoly twist = LaurentPoly::mono(Rational(1), 1) * LaurentPoly(tscale);
    product *= twist.pow(unsigned(delta));

    AtomCombo result = laurent_coeff(product, 0);
    result = result.substitute(Atom::IG0_112, atoms.i_g0_112);
    result = result.substitute(Atom::HodgeLambda1, atoms.hodge_lambda1);
    result = result.substitute(Atom::PsiM11, atoms.psi_m11);
    return result;
}

namespace {

MspGraph make_graph(int id, std::string name, std::vector<MspVertex> vertices,
                    std::vector<MspEdge> edges, long aut) {
    MspGraph g;
    g.id = id;
    g.name = std::move(name);
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    g.aut = aut;
    g.type = NumericalType{1, {}, Rational(0), Rational(1)};
    return g;
}

MspVertex stable_inf(int genus, int dim, int rank, std::optional<Atom> fundamental,
                     std::vector<int> markings) {
    return MspVertex{Level::Infinity, VertexKind::Stable, genus, std::move(markings),
                     dim,             rank,               fundamental};
}

MspVertex stable_one() {
    return MspVertex{Level::One, VertexKind::Stable, 1, {}, 1, 0, std::nullopt};
}

MspVertex unstable(Level level, VertexKind kind) {
    return MspVertex{level, kind, 0, {}, 0, 0, std::nullopt};
}

}  // namespace

const std::vector<MspGraph>& catalog_graphs() {
    static const std::vector<MspGraph> catalog = [] {
        std::vector<MspGraph> gs;
        const Rational d13 = frac(-1, 3);
        const Rational d23 = frac(-2, 3);
        const Rational d1 = Rational(-1);
        const Rational d43 = frac(-4, 3);

        // genus-one vertex at infinity fed by three 2/3-nodes
        gs.push_back(make_graph(0, "Gamma0",
                                {stable_inf(1, 0, -2, Atom::Theta, {2, 2, 2}),
                                 unstable(Level::One, VertexKind::U01),
                                 unstable(Level::One, VertexKind::U01),
                                 unstable(Level::One, VertexKind::U01)},
                                {{d23, 0, 1}, {d23, 0, 2}, {d23, 0, 3}}, 6));

        gs.push_back(make_graph(1, "Gamma1",
                                {stable_inf(1, 1, -1, std::nullopt, {1}),
                                 unstable(Level::One, VertexKind::U01)},
                                {{d43, 0, 1}}, 1));

        gs.push_back(make_graph(2, "Gamma2",
                                {stable_inf(1, 1, -1, std::nullopt, {1}),
                                 unstable(Level::One, VertexKind::U02),
                                 unstable(Level::Infinity, VertexKind::U01)},
                                {{d13, 0, 1}, {d1, 2, 1}}, 1));

        gs.push_back(make_graph(3, "Gamma3",
                                {stable_inf(1, 1, -1, std::nullopt, {1}),
                                 unstable(Level::One, VertexKind::U02),
                                 unstable(Level::Infinity, VertexKind::U02),
                                 unstable(Level::One, VertexKind::U01)},
                                {{d13, 0, 1}, {d13, 2, 1}, {d23, 2, 3}}, 1));

        // two parallel edges closing through one level-one point
        gs.push_back(make_graph(4, "Gamma4",
                                {stable_inf(0, 0, -1, Atom::IG0_112, {1, 1, 2}),
                                 unstable(Level::One, VertexKind::U02),
                                 unstable(Level::One, VertexKind::U01)},
                                {{d13, 0, 1}, {d13, 0, 1}, {d23, 0, 2}}, 2));

        gs.push_back(make_graph(5, "Gamma5",
                                {unstable(Level::One, VertexKind::U02),
                                 unstable(Level::Infinity, VertexKind::U02)},
                                {{d13, 1, 0}, {d23, 1, 0}}, 1));

        gs.push_back(make_graph(6, "Gamma6",
                                {unstable(Level::Infinity, VertexKind::U01), stable_one()},
                                {{d1, 0, 1}}, 1));

        gs.push_back(make_graph(7, "Gamma7",
                                {stable_one(), unstable(Level::Infinity, VertexKind::U02),
                                 unstable(Level::One, VertexKind::U01)},
                                {{d13, 1, 0}, {d23, 1, 2}}, 1));
        return gs;
    }();
    return catalog;
}

MspSolve solve_theta(const AtomTable& atoms) {
    MspSolve out;
    AtomCombo sum;
    for (const MspGraph& g : catalog_graphs()) {
        AtomCombo c = graph_contribution(g, atoms);
        sum += c;
        out.contributions.push_back(std::move(c));
    }

    out.ch1_coeff = sum.atom_coeff(Atom::ICh1).coeff(0);
    out.psi_coeff = sum.atom_coeff(Atom::IPsiSpin11).coeff(0);
    if (!out.ch1_coeff.is_zero())
        throw CalcError("unresolved atoms: I_CH1 survives with coefficient " +
                        out.ch1_coeff.str());

    AtomCombo resolved = sum.substitute(Atom::ICh1, Rational(0))
                             .substitute(Atom::IPsiSpin11, atoms.i_psi_spin11());
    for (const auto& [a, c] : resolved.terms())
        if (a != Atom::Theta)
            throw CalcError("unresolved atoms: " + resolved.str());

    Rational theta_coeff = resolved.atom_coeff(Atom::Theta).coeff(0);
    if (theta_coeff != frac(-1, 6))
        throw CalcError("unresolved atoms: unexpected coefficient of THETA, " +
                        theta_coeff.str());

    out.partial_sum = resolved.constant().coeff(0);
    // partial_sum + theta_coeff * theta = 0
    out.theta = -out.partial_sum / theta_coeff;
    return out;
}

}  // namespace spincalc
