#include "racah/algebra.hpp"

namespace racah {

namespace {

void record(RelationReport& rep, bool& flag, const std::string& name, const RatMatrix& residual) {
    if (residual.is_zero()) return;
    flag = false;
    rep.violations.push_back({name, residual});
}

} // namespace

RelationReport check_h_relations(const HRep& h) {
    RelationReport rep;
    const RatMatrix I = RatMatrix::identity(h.dim);
    bool sum_ok = true;
    record(rep, sum_ok, "t0+t1+t0v+t1v+1", h.t0 + h.t1 + h.t0v + h.t1v + I);
    rep.h_sum_ok = sum_ok;

    const std::array<const RatMatrix*, 4> gens{&h.t0, &h.t1, &h.t0v, &h.t1v};
    const std::array<const char*, 4> names{"t0", "t1", "t0v", "t1v"};
    bool central = true;
    std::array<std::optional<Rat>, 4> scalars;
    for (std::size_t g = 0; g < 4; ++g) {
        const RatMatrix sq = *gens[g] * *gens[g];
        for (std::size_t x = 0; x < 4; ++x)
            record(rep, central, std::string("[") + names[g] + "^2," + names[x] + "]", commutator(sq, *gens[x]));
        scalars[g] = sq.as_scalar();
    }
    if (scalars[0] && scalars[1] && scalars[2] && scalars[3])
        rep.central_squares = std::array<Rat, 4>{*scalars[0], *scalars[1], *scalars[2], *scalars[3]};
    rep.ok = sum_ok && central;
    return rep;
}

RacahRep zeta_pullback(const HRep& h) {
    const RatMatrix I = RatMatrix::identity(h.dim);
    const Rat quarter(1, 4);
    auto quad = [&](const RatMatrix& u) { return quarter * (u * (u + Rat(2) * I)); };
    RacahRep r;
    r.dim = h.dim;
    r.A = quad(h.t1v + h.t0v);
    r.B = quad(h.t1 + h.t1v);
    r.C = quad(h.t0v + h.t1);
    r.delta = (r.A + r.B + r.C).as_scalar();
    r.meta = h.meta;
    return r;
}

RelationReport check_racah_relations(const RacahRep& r) {
    RelationReport rep;
    const RatMatrix D = r.D();
    const RatMatrix twoD = Rat(2) * D;
    bool d_ok = true;
    record(rep, d_ok, "[A,B]-2D", commutator(r.A, r.B) - twoD);
    record(rep, d_ok, "[B,C]-2D", commutator(r.B, r.C) - twoD);
    record(rep, d_ok, "[C,A]-2D", commutator(r.C, r.A) - twoD);
    rep.racah_d_ok = d_ok;

    const RatMatrix alpha = commutator(r.A, D) + r.A * r.C - r.B * r.A;
    const RatMatrix beta = commutator(r.B, D) + r.B * r.A - r.C * r.B;
    const RatMatrix gamma = commutator(r.C, D) + r.C * r.B - r.A * r.C;
    const std::array<const RatMatrix*, 3> centrals{&alpha, &beta, &gamma};
    const std::array<const char*, 3> cnames{"alpha", "beta", "gamma"};
    const std::array<const RatMatrix*, 4> gens{&r.A, &r.B, &r.C, &D};
    const std::array<const char*, 4> gnames{"A", "B", "C", "D"};
    bool central = true;
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t g = 0; g < 4; ++g)
            record(rep, central, std::string("[") + cnames[c] + "," + gnames[g] + "]",
                   commutator(*centrals[c], *gens[g]));
    rep.central_elements_ok = central;
    rep.alpha = alpha.as_scalar();
    rep.beta = beta.as_scalar();
    rep.gamma = gamma.as_scalar();
    rep.ok = d_ok && central;
    return rep;
}

BiTriple bi_triple(const HRep& h) {
    const RatMatrix half = Rat(1, 2) * RatMatrix::identity(h.dim);
    BiTriple t;
    t.X = h.t0 + h.t1 + half;
    t.Y = h.t0 + h.t0v + half;
    t.Z = h.t0 + h.t1v + half;

    const RatMatrix p = anticommutator(t.X, t.Y) - t.Z;
    const RatMatrix q = anticommutator(t.Y, t.Z) - t.X;
    const RatMatrix s = anticommutator(t.Z, t.X) - t.Y;
    const std::array<const RatMatrix*, 3> centrals{&p, &q, &s};
    const std::array<const char*, 3> cnames{"{X,Y}-Z", "{Y,Z}-X", "{Z,X}-Y"};
    const std::array<const RatMatrix*, 3> gens{&t.X, &t.Y, &t.Z};
    const std::array<const char*, 3> gnames{"X", "Y", "Z"};
    bool ok = true;
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t g = 0; g < 3; ++g)
            record(t.report, ok, std::string("[") + cnames[c] + "," + gnames[g] + "]",
                   commutator(*centrals[c], *gens[g]));
    t.report.ok = ok;
    return t;
}

bool check_t0_centralizes(const HRep& h) {
    const RacahRep r = zeta_pullback(h);
    return commutator(h.t0, r.A).is_zero() && commutator(h.t0, r.B).is_zero() &&
           commutator(h.t0, r.C).is_zero();
}

bool check_anticommutator_identities(const HRep& h) {
    auto vanishes = [&](const RatMatrix& u) { return anticommutator(h.t0 + u, commutator(u, h.t0)).is_zero(); };
    return vanishes(h.t1) && vanishes(h.t0v) && vanishes(h.t1v);
}

} // namespace racah
