#pragma once

#include "racah/catalog.hpp"
#include "racah/eigen.hpp"
#include "racah/subspace.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace racah {

/// The spectrum needed by the engine is not rational.
struct spectrum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An invariant the engine relies on failed; indicates a bug or an input
/// outside the engine's contract.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LatticeShape { simple, chain3, chain4, diamond };

std::string to_string(LatticeShape s);

struct SubquotientTag {
    int d_prime = 0;
    Rat a_prime, b_prime, c_prime;
    bool verified = false;
    std::string note; // diagnostics when unverified
};

bool operator==(const SubquotientTag& x, const SubquotientTag& y);

struct EigenInfo {
    std::size_t geometric = 0;
    int algebraic = 0;
};

struct EdgeTag {
    std::size_t lower = 0, upper = 0; // node indices of a covering pair
    SubquotientTag tag;               // identification of upper/lower
};

struct LatticeReport {
    std::vector<Subspace> nodes; // ascending by (dim, basis); zero first, full last
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
    LatticeShape shape = LatticeShape::simple;
    bool t0_diagonalizable = false;
    std::map<Rat, EigenInfo> eigen;
    std::map<Rat, std::size_t> eigenspace_node; // eigenvalue -> node index
    std::vector<int> factor_dims;               // sorted composition factor dims
    std::vector<EdgeTag> subquotients;          // one per Hasse edge
};

/// Nonzero eigenspaces of t0, each verified invariant under the pulled-back
/// A, B, C. Eigenvalue candidates are +-sqrt of the scalar of t0^2,
/// cross-checked against the general rational eigenvalue routine.
/// Throws spectrum_error when t0^2 is not a scalar rational square.
std::map<Rat, Subspace> t0_eigenspaces(const HRep& h);

/// Smallest subspace containing the seeds and invariant under A, B, C.
Subspace spin(const RacahRep& r, const std::vector<std::vector<Rat>>& seeds);

/// Smallest subspace containing the seeds and invariant under all four
/// generators of h.
Subspace h_spin(const HRep& h, const std::vector<std::vector<Rat>>& seeds);

/// Matrix of op on up/low in the reduced complement basis; low may be the
/// zero subspace, which yields the plain restriction to up.
RatMatrix subquotient_matrix(const RatMatrix& op, const Subspace& up, const Subspace& low);

/// Full lattice of invariant subspaces under the pulled-back A, B, C.
/// Precondition (caller-checked): h is built from the catalog and is
/// irreducible as a four-generator module.
LatticeReport submodule_lattice(const HRep& h);

/// All maximal chains of the lattice as node-index paths from zero to full.
std::vector<std::vector<std::size_t>> composition_series(const LatticeReport& rep);

/// Identifies the module given by (Aq, Bq, delta) with a canonical
/// R_{d'}(a',b',c'): candidate parameters are solved from the eigenvalue
/// multisets and the delta scalar, then certified by an exact ladder-basis
/// isomorphism. Returns the lexicographically smallest verifying triple.
SubquotientTag classify_R_subquotient(const RatMatrix& Aq, const RatMatrix& Bq, const Rat& delta);

/// Canonical tag of R_d(a,b,c): the lexicographically smallest parameter
/// triple whose ladder presentation verifies against the built module.
/// Computed by classifying the module itself, so it is an invariant of the
/// isomorphism class.
SubquotientTag normalized_R_tag(int d, const Rat& a, const Rat& b, const Rat& c);

struct PredictedEdge {
    int lower_dim = 0, upper_dim = 0;
    std::optional<Rat> lower_theta, upper_theta; // eigenvalue labels of eigenspace endpoints
    SubquotientTag tag;
};

struct PredictedLattice {
    LatticeShape shape = LatticeShape::simple;
    std::vector<int> node_dims; // ascending
    bool t0_diagonalizable = false;
    std::vector<PredictedEdge> edges;
};

/// The expected lattice for an irreducible catalog spec; refuses reducible
/// specs with std::invalid_argument.
PredictedLattice predicted_lattice(const ModuleSpec& spec);

/// Shape, node dimensions, Hasse edges and verified subquotient tags all
/// agree. On mismatch, *why describes the first difference when non-null.
bool lattice_matches_prediction(const LatticeReport& got, const PredictedLattice& want, std::string* why);

bool is_completely_reducible(const LatticeReport& rep);
bool is_completely_reducible(const HRep& h);

/// Searches for a proper nonzero subspace invariant under all four
/// generators. Used to exhibit reducibility of a four-generator module.
std::optional<Subspace> find_proper_h_invariant_subspace(const HRep& h, std::uint64_t seed);

} // namespace racah
