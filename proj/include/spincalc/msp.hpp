#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spincalc/atoms.hpp"
#include "spincalc/laurent.hpp"
#include "spincalc/local_algebra.hpp"
#include "spincalc/rational.hpp"

namespace spincalc {

enum class Level { Zero, One, Infinity };
enum class VertexKind { Stable, U01, U02, U11 };

// A marking of the global moduli problem: a narrow monodromy label m/3, or
// one of the two exceptional field markings.
struct Mark {
    enum Kind { Mu, Phi, Rho };
    int m = 0;
    Kind kind = Mu;
};

// Virtual dimension of the moduli of the given numerical type.
Rational vdim(int genus, const std::vector<Mark>& gamma, const Rational& d0,
              const Rational& d_inf);

struct MspVertex {
    Level level = Level::Infinity;
    VertexKind kind = VertexKind::Stable;
    int genus = 0;
    std::vector<int> markings;         // monodromy labels at the adjacent nodes
    int moduli_dim = 0;                // algebra cap for stable vertices
    int spin_rank = 0;                 // rank of R pi_* L^vee, level-infinity stable only
    std::optional<Atom> fundamental;   // atom paired with the degree-zero insertion
};

struct MspEdge {
    Rational d;    // degree of L on the edge curve
    int v_inf;     // endpoint at level infinity
    int v_other;   // the other endpoint
};

struct NumericalType {
    int genus = 1;
    std::vector<Mark> gamma;
    Rational d0;
    Rational d_inf;
};

struct MspGraph {
    int id = 0;
    std::string name;
    std::vector<MspVertex> vertices;
    std::vector<MspEdge> edges;
    long aut = 1;
    NumericalType type;

    std::vector<int> edges_at(int v) const;
};

// The fixed catalog of regular graphs for type (1, (), 0, 1).
const std::vector<MspGraph>& catalog_graphs();

// 1 when the edge degree is an integer, 3 otherwise.
int edge_r(const MspEdge& e);

// Order of the edge stabilizer, |-3 d_e + delta|.
int ge_order(const MspGraph& g, int edge);

// The tscale parameter rescales the equivariant parameter t -> tscale * t
// throughout; contributions are degree-zero and must not depend on it.

// Per-edge Euler factor from the product formula.
LaurentPoly edge_factor(const MspGraph& g, int edge, const Rational& tscale = Rational(1));

// Tangent weight carried by the flag (edge, vertex).
LaurentPoly node_weight(const MspGraph& g, int edge, int vertex,
                        const Rational& tscale = Rational(1));

// B_v for an unstable vertex.
LaurentPoly unstable_vertex_factor(const MspGraph& g, int v,
                                   const Rational& tscale = Rational(1));

// B_v for a stable vertex, before integration over its moduli.
struct StableFactor {
    LocalAlgebra algebra;
    LocalAlgebra::Element element;
    std::map<std::string, int> gens;  // generator name -> index
};
StableFactor stable_vertex_factor(const MspGraph& g, int v,
                                  const Rational& tscale = Rational(1));

// B_v with its insertions integrated against the vertex moduli, every
// moduli integral kept as a symbolic atom.
AtomCombo vertex_contribution(const MspGraph& g, int v, const Rational& tscale = Rational(1));

// [t^delta * 1/|Aut| * prod 1/|G_e| * prod B_v * prod A_e]_0 with the Hodge
// atoms substituted; THETA and the two spin-moduli atoms stay symbolic.
AtomCombo graph_contribution(const MspGraph& g, const AtomTable& atoms = AtomTable::standard(),
                             const Rational& tscale = Rational(1));

struct MspSolve {
    Rational theta;
    Rational partial_sum;                  // sum over graphs 1..7
    Rational ch1_coeff;                    // coefficient of I_CH1 in the total (vanishes)
    Rational psi_coeff;                    // coefficient of I_PSI_SPIN11 in the total
    std::vector<AtomCombo> contributions;  // one per catalog graph
};

// Sums the catalog, checks the unknown enters linearly with coefficient
// -1/6, and solves the vanishing for it.
MspSolve solve_theta(const AtomTable& atoms = AtomTable::standard());

}  // namespace spincalc
