#include "racah/lattice.hpp"

#include "racah/rng.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace racah {

namespace {

Rat half(int n) { return Rat(n, 2); }

std::vector<Rat> scaled_add(const Rat& alpha, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    std::vector<Rat> out(y);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += alpha * x[i];
    return out;
}

RatMatrix shift_diag(RatMatrix m, const Rat& lambda) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= lambda;
    return m;
}

bool invariant_under(const RatMatrix& op, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (!s.contains_vector(act(op, s.basis().row(i)))) return false;
    return true;
}

Subspace spin_under(const std::vector<const RatMatrix*>& ops, std::size_t ambient,
                    const std::vector<std::vector<Rat>>& seeds) {
    Subspace s = Subspace::from_rows(ambient, seeds);
    for (;;) {
        std::vector<std::vector<Rat>> rows;
        rows.reserve(s.dim() * (ops.size() + 1));
        for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
        for (const RatMatrix* op : ops)
            for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(act(*op, s.basis().row(i)));
        Subspace t = Subspace::from_rows(ambient, rows);
        if (t.dim() == s.dim()) return s;
        s = std::move(t);
    }
}

std::vector<Rat> ladder_diag_entry_list(int d, const Rat& x) {
    std::vector<Rat> th(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const Rat t = x + half(d) - Rat(i);
        th[static_cast<std::size_t>(i)] = t * (t + 1);
    }
    return th;
}

Rat ladder_phi(int d, const Rat& a, const Rat& b, const Rat& c, int i) {
    return Rat(i) * Rat(i - d - 1) * (a + b + c + half(d) - Rat(i) + 2) *
           (a + b - c + half(d) - Rat(i) + 1);
}

std::vector<Rat> expand_multiset(const std::vector<Eigenvalue>& evs) {
    std::vector<Rat> v;
    for (const auto& e : evs)
        for (int k = 0; k < e.multiplicity; ++k) v.push_back(e.value);
    return v; // evs ascending, so v is sorted
}

// Parameters x whose diagonal sequence (x+d/2-i)(x+d/2-i+1) reproduces the
// eigenvalue multiset. Each eigenvalue theta contributes candidates via the
// rational roots of t(t+1) = theta.
std::vector<Rat> param_candidates(const std::vector<Eigenvalue>& evs, int d) {
    std::set<Rat> cands;
    for (const auto& e : evs) {
        const auto s = exact_sqrt(Rat(1) + Rat(4) * e.value);
        if (!s) continue;
        const std::array<Rat, 2> roots{(*s - 1) / 2, (-*s - 1) / 2};
        for (const Rat& x : roots)
            for (int i = 0; i <= d; ++i) cands.insert(x - half(d) + Rat(i));
    }
    const std::vector<Rat> target = expand_multiset(evs);
    std::vector<Rat> ok;
    for (const Rat& a : cands) {
        std::vector<Rat> th = ladder_diag_entry_list(d, a);
        std::sort(th.begin(), th.end());
        if (th == target) ok.push_back(a);
    }
    return ok;
}

bool ladder_verify(const RatMatrix& Aq, const RatMatrix& Bq, int d, const Rat& a, const Rat& b,
                   const Rat& c) {
    const std::size_t n = Aq.rows();
    const auto th = ladder_diag_entry_list(d, a);
    const auto ths = ladder_diag_entry_list(d, b);

    const Subspace start = kernel(shift_diag(Bq, ths[0]));
    if (start.dim() == 0) return false;
    std::vector<std::vector<Rat>> starts;
    for (std::size_t i = 0; i < start.dim(); ++i) starts.push_back(start.basis().row(i));
    if (start.dim() >= 2) {
        // Degenerate starting eigenspace: try small combinations of the
        // first two basis vectors before giving up.
        for (int p = -2; p <= 2; ++p)
            for (int q = -2; q <= 2; ++q) {
                if (p == 0 || q == 0) continue;
                starts.push_back(scaled_add(Rat(p), start.basis().row(0),
                                            [&] {
                                                std::vector<Rat> v = start.basis().row(1);
                                                for (Rat& x : v) x *= Rat(q);
                                                return v;
                                            }()));
            }
    }

    for (const auto& u0 : starts) {
        std::vector<std::vector<Rat>> u;
        u.push_back(u0);
        for (int i = 0; i < d; ++i)
            u.push_back(scaled_add(-th[static_cast<std::size_t>(i)], u.back(), act(Aq, u.back())));
        // Top relation: (Aq - theta_d) u_d = 0.
        if (!is_zero_vector(scaled_add(-th[static_cast<std::size_t>(d)], u.back(), act(Aq, u.back()))))
            continue;
        if (Subspace::from_rows(n, u).dim() != n) continue;
        bool ok = true;
        for (int i = 0; i <= d && ok; ++i) {
            std::vector<Rat> want(n);
            want = scaled_add(ths[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)], want);
            if (i > 0)
                want = scaled_add(ladder_phi(d, a, b, c, i), u[static_cast<std::size_t>(i) - 1], want);
            if (act(Bq, u[static_cast<std::size_t>(i)]) != want) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

std::string to_string(LatticeShape s) {
    switch (s) {
    case LatticeShape::simple: return "simple";
    case LatticeShape::chain3: return "chain3";
    case LatticeShape::chain4: return "chain4";
    case LatticeShape::diamond: return "diamond";
    }
    return "?";
}

bool operator==(const SubquotientTag& x, const SubquotientTag& y) {
    return x.d_prime == y.d_prime && x.a_prime == y.a_prime && x.b_prime == y.b_prime &&
           x.c_prime == y.c_prime && x.verified == y.verified;
}

std::map<Rat, Subspace> t0_eigenspaces(const HRep& h) {
    const std::size_t n = h.dim;
    const auto k0 = (h.t0 * h.t0).as_scalar();
    if (!k0) throw spectrum_error("t0^2 does not act as a scalar");
    const auto s = exact_sqrt(*k0);
    if (!s) throw spectrum_error("irrational spectrum: the scalar of t0^2 is not a rational square");

    std::vector<Rat> candidates{*s};
    if (!s->is_zero()) candidates.push_back(-*s);

    const RacahRep r = zeta_pullback(h);
    std::map<Rat, Subspace> out;
    for (const Rat& theta : candidates) {
        Subspace e = kernel(shift_diag(h.t0, theta));
        if (e.dim() == 0) continue;
        if (!invariant_under(r.A, e) || !invariant_under(r.B, e) || !invariant_under(r.C, e))
            throw internal_error("t0 eigenspace is not invariant under the pulled-back action");
        out.emplace(theta, std::move(e));
    }

    int total = 0;
    for (const auto& ev : rational_eigenvalues(h.t0)) {
        total += ev.multiplicity;
        if (std::find(candidates.begin(), candidates.end(), ev.value) == candidates.end())
            throw internal_error("t0 eigenvalue outside +-sqrt(k0)");
    }
    if (total != static_cast<int>(n))
        throw internal_error("t0 characteristic polynomial does not split rationally");
    return out;
}

Subspace spin(const RacahRep& r, const std::vector<std::vector<Rat>>& seeds) {
    return spin_under({&r.A, &r.B, &r.C}, r.dim, seeds);
}

Subspace h_spin(const HRep& h, const std::vector<std::vector<Rat>>& seeds) {
    return spin_under({&h.t0, &h.t1, &h.t0v, &h.t1v}, h.dim, seeds);
}

RatMatrix subquotient_matrix(const RatMatrix& op, const Subspace& up, const Subspace& low) {
    if (up.ambient_dim() != low.ambient_dim() || op.cols() != up.ambient_dim())
        throw std::invalid_argument("subquotient_matrix: ambient mismatch");
    if (!contains(up, low)) throw std::invalid_argument("subquotient_matrix: low not contained in up");
    std::vector<std::vector<Rat>> comp;
    for (std::size_t i = 0; i < up.dim(); ++i) {
        auto red = low.reduce(up.basis().row(i));
        if (!is_zero_vector(red)) comp.push_back(std::move(red));
    }
    const Subspace c = Subspace::from_rows(up.ambient_dim(), comp);
    if (c.dim() != up.dim() - low.dim())
        throw internal_error("subquotient_matrix: complement dimension mismatch");
    const std::size_t k = c.dim();
    RatMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto w = low.reduce(act(op, c.basis().row(j)));
        const auto coords = c.coordinates(w);
        if (!coords) throw internal_error("subquotient_matrix: factor not invariant under the operator");
        for (std::size_t i = 0; i < k; ++i) m.at(i, j) = (*coords)[i];
    }
    return m;
}

SubquotientTag classify_R_subquotient(const RatMatrix& Aq, const RatMatrix& Bq, const Rat& delta) {
    if (!Aq.is_square() || !Bq.is_square() || Aq.rows() != Bq.rows() || Aq.rows() == 0)
        throw std::invalid_argument("classify_R_subquotient: need equal-size square matrices");
    const std::size_t n = Aq.rows();
    const int d = static_cast<int>(n) - 1;
    SubquotientTag tag;
    tag.d_prime = d;

    const auto evsA = rational_eigenvalues(Aq);
    const auto evsB = rational_eigenvalues(Bq);
    auto total = [](const std::vector<Eigenvalue>& evs) {
        int t = 0;
        for (const auto& e : evs) t += e.multiplicity;
        return t;
    };
    if (total(evsA) != static_cast<int>(n)) {
        tag.note = "A spectrum is not fully rational";
        return tag;
    }
    if (total(evsB) != static_cast<int>(n)) {
        tag.note = "B spectrum is not fully rational";
        return tag;
    }

    const auto as = param_candidates(evsA, d);
    const auto bs = param_candidates(evsB, d);
    std::vector<std::array<Rat, 3>> triples;
    for (const Rat& a : as)
        for (const Rat& b : bs) {
            const Rat k = delta - half(d) * (half(d) + 1) - a * (a + 1) - b * (b + 1);
            const auto s = exact_sqrt(Rat(1) + Rat(4) * k);
            if (!s) continue;
            triples.push_back({a, b, (*s - 1) / 2});
            if (!s->is_zero()) triples.push_back({a, b, (-*s - 1) / 2});
        }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    for (const auto& t : triples)
        if (ladder_verify(Aq, Bq, d, t[0], t[1], t[2])) {
            tag.a_prime = t[0];
            tag.b_prime = t[1];
            tag.c_prime = t[2];
            tag.verified = true;
            return tag;
        }
    tag.note = "no candidate verified (" + std::to_string(triples.size()) + " tried)";
    return tag;
}

SubquotientTag normalized_R_tag(int d, const Rat& a, const Rat& b, const Rat& c) {
    // Classification is isomorphism-invariant, so the canonical triple of
    // R_d(a,b,c) is found by classifying the built module itself.
    const RacahRep r = build_R(d, a, b, c);
    SubquotientTag t = classify_R_subquotient(r.A, r.B, *r.delta);
    if (!t.verified) throw internal_error("normalized_R_tag: canonical module failed to classify");
    return t;
}

LatticeReport submodule_lattice(const HRep& h) {
    const std::size_t n = h.dim;
    if (n == 0) throw std::invalid_argument("submodule_lattice: empty module");
    const RacahRep r = zeta_pullback(h);
    const auto eig = t0_eigenspaces(h);

    std::set<Subspace> nodes;
    nodes.insert(Subspace::zero(n));
    nodes.insert(Subspace::full(n));
    for (const auto& [theta, e] : eig) nodes.insert(e);

    // Every irreducible invariant subspace lies inside a t0 eigenspace and
    // contains a rational eigenvector of the restricted A, so spins of those
    // eigenvectors seed the full node set.
    const Subspace zero = Subspace::zero(n);
    for (const auto& [theta, e] : eig) {
        const RatMatrix m = subquotient_matrix(r.A, e, zero);
        for (const auto& ev : rational_eigenvalues(m)) {
            const Subspace k = kernel(shift_diag(m, ev.value));
            for (std::size_t i = 0; i < k.dim(); ++i) {
                const auto coords = k.basis().row(i);
                std::vector<Rat> v(n);
                for (std::size_t j = 0; j < e.dim(); ++j)
                    v = scaled_add(coords[j], e.basis().row(j), v);
                nodes.insert(spin(r, {v}));
            }
        }
    }

    for (bool changed = true; changed;) {
        changed = false;
        const std::vector<Subspace> cur(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (nodes.insert(subspace_sum(cur[i], cur[j])).second) changed = true;
                if (nodes.insert(subspace_intersect(cur[i], cur[j])).second) changed = true;
            }
        if (nodes.size() > 16) throw internal_error("lattice closure exceeded the expected node budget");
    }

    // Soundness belt: spins of random vectors must already be nodes.
    Rng rng(0x7ac1e5eedULL);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = rng.rational(9, 3);
        if (is_zero_vector(v)) continue;
        if (nodes.find(spin(r, {v})) == nodes.end())
            throw internal_error("random spin produced a subspace outside the computed lattice");
    }

    LatticeReport rep;
    rep.nodes.assign(nodes.begin(), nodes.end());
    const std::size_t count = rep.nodes.size();

    auto leq = [&](std::size_t i, std::size_t j) {
        return i != j && rep.nodes[i].dim() < rep.nodes[j].dim() && contains(rep.nodes[j], rep.nodes[i]);
    };
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (!leq(i, j)) continue;
            bool covering = true;
            for (std::size_t k = 0; k < count && covering; ++k)
                if (leq(i, k) && leq(k, j)) covering = false;
            if (covering) rep.hasse_edges.emplace_back(i, j);
        }

    if (count == 2) {
        rep.shape = LatticeShape::simple;
    } else if (count == 3) {
        rep.shape = LatticeShape::chain3;
    } else if (count == 4) {
        rep.shape = contains(rep.nodes[2], rep.nodes[1]) ? LatticeShape::chain4 : LatticeShape::diamond;
    } else {
        throw internal_error("unexpected lattice with " + std::to_string(count) + " nodes");
    }

    const auto t0evs = rational_eigenvalues(h.t0);
    std::size_t geo_total = 0;
    for (const auto& [theta, e] : eig) {
        int alg = 0;
        for (const auto& ev : t0evs)
            if (ev.value == theta) alg = ev.multiplicity;
        rep.eigen[theta] = EigenInfo{e.dim(), alg};
        geo_total += e.dim();
        const auto it = std::find(rep.nodes.begin(), rep.nodes.end(), e);
        rep.eigenspace_node[theta] = static_cast<std::size_t>(it - rep.nodes.begin());
    }
    rep.t0_diagonalizable = geo_total == n;

    const auto chains = composition_series(rep);
    if (chains.empty()) throw internal_error("no maximal chain found");
    std::vector<int> first_factors;
    for (const auto& chain : chains) {
        std::vector<int> factors;
        for (std::size_t s = 1; s < chain.size(); ++s)
            factors.push_back(static_cast<int>(rep.nodes[chain[s]].dim() - rep.nodes[chain[s - 1]].dim()));
        std::sort(factors.begin(), factors.end());
        if (first_factors.empty())
            first_factors = factors;
        else if (factors != first_factors)
            throw internal_error("maximal chains disagree on factor dimensions");
    }
    rep.factor_dims = first_factors;

    const RatMatrix delta_matrix = r.A + r.B + r.C;
    for (const auto& [i, j] : rep.hasse_edges) {
        EdgeTag et;
        et.lower = i;
        et.upper = j;
        const auto ds = subquotient_matrix(delta_matrix, rep.nodes[j], rep.nodes[i]).as_scalar();
        if (!ds) {
            et.tag.d_prime = static_cast<int>(rep.nodes[j].dim() - rep.nodes[i].dim()) - 1;
            et.tag.note = "delta is not scalar on this factor";
        } else {
            et.tag = classify_R_subquotient(subquotient_matrix(r.A, rep.nodes[j], rep.nodes[i]),
                                            subquotient_matrix(r.B, rep.nodes[j], rep.nodes[i]), *ds);
        }
        rep.subquotients.push_back(std::move(et));
    }
    return rep;
}

std::vector<std::vector<std::size_t>> composition_series(const LatticeReport& rep) {
    std::vector<std::vector<std::size_t>> up(rep.nodes.size());
    for (const auto& [i, j] : rep.hasse_edges) up[i].push_back(j);
    const std::size_t top = rep.nodes.size() - 1;
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> path{0};
    auto dfs = [&](auto&& self, std::size_t at) -> void {
        if (at == top) {
            chains.push_back(path);
            return;
        }
        for (std::size_t nxt : up[at]) {
            path.push_back(nxt);
            self(self, nxt);
            path.pop_back();
        }
    };
    dfs(dfs, 0);
    return chains;
}

namespace {

PredictedEdge make_edge(int lo, int hi, std::optional<Rat> lo_theta, std::optional<Rat> hi_theta,
                        SubquotientTag tag) {
    PredictedEdge e;
    e.lower_dim = lo;
    e.upper_dim = hi;
    e.lower_theta = std::move(lo_theta);
    e.upper_theta = std::move(hi_theta);
    e.tag = std::move(tag);
    return e;
}

} // namespace

PredictedLattice predicted_lattice(const ModuleSpec& spec) {
    if (spec.family == Family::R)
        throw std::invalid_argument("predicted_lattice: requires family E or O");
    if (!irreducibility_criterion(spec))
        throw std::invalid_argument("predicted_lattice: spec is reducible");

    PredictedLattice out;
    const int d = spec.d;
    const int n = d + 1;

    if (spec.family == Family::E) {
        const Rat am = -(spec.a + 1) / 2, bm = -(spec.b + 1) / 2, cm = -(spec.c + 1) / 2;
        if (spec.eps == std::pair<int, int>{1, 1}) {
            if (d == 1) {
                out.shape = LatticeShape::simple;
                out.node_dims = {0, n};
                out.t0_diagonalizable = true;
                out.edges = {make_edge(0, n, {}, {}, normalized_R_tag((d + 1) / 2, am, bm, cm))};
            } else {
                const Rat theta = half(d + 1);
                const SubquotientTag big = normalized_R_tag((d + 1) / 2, am, bm, cm);
                const SubquotientTag small = normalized_R_tag((d - 3) / 2, am, bm, cm);
                out.shape = LatticeShape::diamond;
                out.node_dims = {0, (d - 1) / 2, (d + 3) / 2, n};
                out.t0_diagonalizable = true;
                out.edges = {make_edge(0, (d + 3) / 2, {}, -theta, big),
                             make_edge(0, (d - 1) / 2, {}, theta, small),
                             make_edge((d + 3) / 2, n, -theta, {}, small),
                             make_edge((d - 1) / 2, n, theta, {}, big)};
            }
        } else {
            // Twisted cases: t0 acts by another generator; eigenvalues and the
            // two eigenspace identifications depend on the twist.
            Rat z, theta1, theta2;
            SubquotientTag tag1, tag2; // V(theta1) and V(theta2) respectively
            const int dp = (d - 1) / 2;
            if (spec.eps == std::pair<int, int>{1, -1}) {
                z = spec.a;
                theta1 = -z;
                theta2 = z;
                tag1 = normalized_R_tag(dp, -spec.a / 2 - 1, bm, cm);
                tag2 = normalized_R_tag(dp, -spec.a / 2, bm, cm);
            } else if (spec.eps == std::pair<int, int>{-1, 1}) {
                z = spec.b;
                theta1 = z;
                theta2 = -z;
                tag1 = normalized_R_tag(dp, am, -spec.b / 2, cm);
                tag2 = normalized_R_tag(dp, am, -spec.b / 2 - 1, cm);
            } else {
                z = spec.c;
                theta1 = z;
                theta2 = -z;
                tag1 = normalized_R_tag(dp, am, bm, -spec.c / 2);
                tag2 = normalized_R_tag(dp, am, bm, -spec.c / 2 - 1);
            }
            const int m = (d + 1) / 2;
            if (z.is_zero()) {
                out.shape = LatticeShape::chain3;
                out.node_dims = {0, m, n};
                out.t0_diagonalizable = false;
                out.edges = {make_edge(0, m, {}, Rat(0), tag1), make_edge(m, n, Rat(0), {}, tag2)};
            } else {
                out.shape = LatticeShape::diamond;
                out.node_dims = {0, m, m, n};
                out.t0_diagonalizable = true;
                out.edges = {make_edge(0, m, {}, theta1, tag1), make_edge(0, m, {}, theta2, tag2),
                             make_edge(m, n, theta1, {}, tag2), make_edge(m, n, theta2, {}, tag1)};
            }
        }
        return out;
    }

    // Family O. A twist is the same as sign flips on the parameters, so
    // reduce to the untwisted case with transformed parameters.
    Rat ta = spec.a, tb = spec.b, tc = spec.c;
    if (spec.eps == std::pair<int, int>{1, -1}) {
        tb = -tb;
        tc = -tc;
    } else if (spec.eps == std::pair<int, int>{-1, 1}) {
        ta = -ta;
        tc = -tc;
    } else if (spec.eps == std::pair<int, int>{-1, -1}) {
        ta = -ta;
        tb = -tb;
    }
    const Rat sigma = ta + tb + tc - half(d + 1);
    const Rat quarter(1, 4), three_quarters(3, 4);
    const SubquotientTag big =
        normalized_R_tag(d / 2, -ta / 2 - quarter, -tb / 2 - quarter, -tc / 2 - quarter);
    auto small_tag = [&] {
        return normalized_R_tag(d / 2 - 1, -ta / 2 - three_quarters, -tb / 2 - three_quarters,
                                -tc / 2 - three_quarters);
    };
    if (d == 0) {
        out.shape = LatticeShape::simple;
        out.node_dims = {0, 1};
        out.t0_diagonalizable = true;
        out.edges = {make_edge(0, 1, {}, {}, big)};
    } else if (sigma.is_zero()) {
        const SubquotientTag small = small_tag();
        const SubquotientTag top = normalized_R_tag(0, -(tb + tc + 1) / 2, -(tc + ta + 1) / 2,
                                                    -(ta + tb + 1) / 2);
        out.shape = LatticeShape::chain4;
        out.node_dims = {0, d / 2, d / 2 + 1, n};
        out.t0_diagonalizable = false;
        out.edges = {make_edge(0, d / 2, {}, {}, small),
                     make_edge(d / 2, d / 2 + 1, {}, Rat(0), top),
                     make_edge(d / 2 + 1, n, Rat(0), {}, small)};
    } else {
        const SubquotientTag small = small_tag();
        const Rat theta = sigma / 2;
        out.shape = LatticeShape::diamond;
        out.node_dims = {0, d / 2, d / 2 + 1, n};
        out.t0_diagonalizable = true;
        out.edges = {make_edge(0, d / 2 + 1, {}, theta, big), make_edge(0, d / 2, {}, -theta, small),
                     make_edge(d / 2 + 1, n, theta, {}, small), make_edge(d / 2, n, -theta, {}, big)};
    }
    return out;
}

bool lattice_matches_prediction(const LatticeReport& got, const PredictedLattice& want,
                                std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (got.shape != want.shape)
        return fail("shape: got " + to_string(got.shape) + ", want " + to_string(want.shape));
    std::vector<int> dims;
    for (const auto& nd : got.nodes) dims.push_back(static_cast<int>(nd.dim()));
    if (dims != want.node_dims) return fail("node dimensions differ");
    if (got.t0_diagonalizable != want.t0_diagonalizable) return fail("t0 diagonalizability differs");
    if (got.hasse_edges.size() != want.edges.size()) return fail("edge count differs");

    std::vector<bool> used(got.hasse_edges.size(), false);
    for (const auto& pe : want.edges) {
        std::size_t match = got.hasse_edges.size();
        int found = 0;
        for (std::size_t k = 0; k < got.hasse_edges.size(); ++k) {
            if (used[k]) continue;
            const auto& [lo, hi] = got.hasse_edges[k];
            if (static_cast<int>(got.nodes[lo].dim()) != pe.lower_dim ||
                static_cast<int>(got.nodes[hi].dim()) != pe.upper_dim)
                continue;
            if (pe.lower_theta) {
                const auto it = got.eigenspace_node.find(*pe.lower_theta);
                if (it == got.eigenspace_node.end() || it->second != lo) continue;
            }
            if (pe.upper_theta) {
                const auto it = got.eigenspace_node.find(*pe.upper_theta);
                if (it == got.eigenspace_node.end() || it->second != hi) continue;
            }
            ++found;
            match = k;
        }
        if (found != 1)
            return fail("edge (" + std::to_string(pe.lower_dim) + " -> " +
                        std::to_string(pe.upper_dim) + ") not uniquely matched");
        used[match] = true;
        const SubquotientTag& gt = got.subquotients[match].tag;
        if (!gt.verified)
            return fail("subquotient on edge (" + std::to_string(pe.lower_dim) + " -> " +
                        std::to_string(pe.upper_dim) + ") unverified: " + gt.note);
        if (!(gt == pe.tag))
            return fail("subquotient parameters differ on edge (" + std::to_string(pe.lower_dim) +
                        " -> " + std::to_string(pe.upper_dim) + ")");
    }
    return true;
}

bool is_completely_reducible(const LatticeReport& rep) {
    Subspace sum = Subspace::zero(rep.nodes.front().ambient_dim());
    for (const auto& [i, j] : rep.hasse_edges)
        if (i == 0) sum = subspace_sum(sum, rep.nodes[j]);
    const bool cr = sum == rep.nodes.back();
    if (cr != rep.t0_diagonalizable)
        throw internal_error("complete reducibility disagrees with t0 diagonalizability");
    return cr;
}

bool is_completely_reducible(const HRep& h) { return is_completely_reducible(submodule_lattice(h)); }

std::optional<Subspace> find_proper_h_invariant_subspace(const HRep& h, std::uint64_t seed) {
    const std::size_t n = h.dim;
    auto proper = [&](const Subspace& s) { return s.dim() > 0 && s.dim() < n; };

    const RacahRep r = zeta_pullback(h);
    const Subspace zero = Subspace::zero(n);
    try {
        for (const auto& ev : rational_eigenvalues(h.t0)) {
            const Subspace e = kernel(shift_diag(h.t0, ev.value));
            for (std::size_t i = 0; i < e.dim(); ++i) {
                const Subspace s = h_spin(h, {e.basis().row(i)});
                if (proper(s)) return s;
            }
            const RatMatrix m = subquotient_matrix(r.A, e, zero);
            for (const auto& mu : rational_eigenvalues(m)) {
                const Subspace k = kernel(shift_diag(m, mu.value));
                for (std::size_t i = 0; i < k.dim(); ++i) {
                    std::vector<Rat> v(n);
                    for (std::size_t j = 0; j < e.dim(); ++j)
                        v = scaled_add(k.basis().row(i)[j], e.basis().row(j), v);
                    const Subspace s = h_spin(h, {v});
                    if (proper(s)) return s;
                }
            }
        }
    } catch (const internal_error&) {
        // Fall through to random probing.
    }

    Rng rng(seed);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = rng.rational(9, 3);
        if (is_zero_vector(v)) continue;
        const Subspace s = h_spin(h, {v});
        if (proper(s)) return s;
    }
    return std::nullopt;
}

} // namespace racah
