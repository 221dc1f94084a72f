#pragma once

#include "racah/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace racah {

enum class Family { R, E, O };

struct ModuleMeta {
    Family family;
    int d;
    Rat a, b, c;
    std::pair<int, int> eps{1, 1};
};

/// Four-generator representation: square matrices for t0, t1, t0v, t1v.
struct HRep {
    std::size_t dim = 0;
    RatMatrix t0, t1, t0v, t1v;
    std::optional<ModuleMeta> meta;
};

/// Representation of the A, B, C generators; D is always derived as
/// [A,B]/2 and never stored independently.
struct RacahRep {
    std::size_t dim = 0;
    RatMatrix A, B, C;
    std::optional<Rat> delta; // scalar of A+B+C when it is a scalar matrix
    std::optional<ModuleMeta> meta;

    RatMatrix D() const { return Rat(1, 2) * commutator(A, B); }
};

struct Violation {
    std::string name;
    RatMatrix residual;
};

struct RelationReport {
    bool ok = true;
    std::optional<bool> h_sum_ok;
    std::optional<std::array<Rat, 4>> central_squares; // k0, k1, k0v, k1v
    std::optional<bool> racah_d_ok;
    std::optional<bool> central_elements_ok;
    std::optional<Rat> alpha, beta, gamma;
    std::vector<Violation> violations;
};

/// Sum relation t0+t1+t0v+t1v = -1 and centrality of the four squares,
/// all as exact matrix identities. Failures are reported, never thrown.
RelationReport check_h_relations(const HRep& h);

/// Pullback along the generator map A = (t1v+t0v)(t1v+t0v+2)/4,
/// B = (t1+t1v)(t1+t1v+2)/4, C = (t0v+t1)(t0v+t1+2)/4.
RacahRep zeta_pullback(const HRep& h);

/// [A,B]=[B,C]=[C,A]=2D and centrality of the three combinations
/// [A,D]+AC-BA, [B,D]+BA-CB, [C,D]+CB-AC; scalars recorded when scalar.
RelationReport check_racah_relations(const RacahRep& r);

struct BiTriple {
    RatMatrix X, Y, Z;
    RelationReport report;
};

/// Change of generators X = t0+t1+1/2, Y = t0+t0v+1/2, Z = t0+t1v+1/2,
/// with the anticommutator relations {X,Y}-Z etc. checked for centrality.
BiTriple bi_triple(const HRep& h);

/// True iff t0 commutes exactly with the pulled-back A, B and C.
bool check_t0_centralizes(const HRep& h);

/// True iff {t0+t1,[t1,t0]}, {t0+t0v,[t0v,t0]}, {t0+t1v,[t1v,t0]} all vanish.
bool check_anticommutator_identities(const HRep& h);

} // namespace racah
