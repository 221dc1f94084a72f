#include "racah/eigen.hpp"

#include <algorithm>
#include <stdexcept>

namespace racah {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

ZPoly sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Exact quotient f / g in Z[y]; throws if the division is not exact.
ZPoly divexact(ZPoly f, const ZPoly& g) {
    if (g.empty()) throw std::domain_error("poly divexact: zero divisor");
    if (f.empty()) return {};
    if (f.size() < g.size()) throw std::runtime_error("poly divexact: not divisible");
    ZPoly q(f.size() - g.size() + 1);
    const mpz_class& glc = g.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        const mpz_class& flc = f[k + g.size() - 1];
        if (flc == 0) continue;
        mpz_class c;
        mpz_class r;
        mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), flc.get_mpz_t(), glc.get_mpz_t());
        if (r != 0) throw std::runtime_error("poly divexact: not divisible");
        q[k] = c;
        for (std::size_t j = 0; j < g.size(); ++j) f[k + j] -= c * g[j];
    }
    trim(f);
    if (!f.empty()) throw std::runtime_error("poly divexact: nonzero remainder");
    trim(q);
    return q;
}

ZPoly derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mpz_class(static_cast<long>(i)) * p[i];
    return d;
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Primitive part with positive leading coefficient.
ZPoly primitive(ZPoly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

QPoly to_q(const ZPoly& p) {
    QPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = mpq_class(p[i]);
    return q;
}

void trim_q(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder of f modulo g over Q.
QPoly rem_q(QPoly f, const QPoly& g) {
    trim_q(f);
    while (f.size() >= g.size() && !f.empty()) {
        const mpq_class c = f.back() / g.back();
        const std::size_t shift = f.size() - g.size();
        for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] -= c * g[j];
        trim_q(f);
    }
    return f;
}

ZPoly primitive_from_q(const QPoly& p) {
    mpz_class l = 1;
    for (const mpq_class& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpq_class s = p[i] * l;
        z[i] = s.get_num();
    }
    return primitive(z);
}

// Monic-input gcd in Z[y], normalized primitive with positive lead.
ZPoly gcd_z(ZPoly a, ZPoly b) {
    QPoly f = to_q(a), g = to_q(b);
    trim_q(f);
    trim_q(g);
    while (!g.empty()) {
        QPoly r = rem_q(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return primitive_from_q(f);
}

int sign_at(const ZPoly& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + mpq_class(*it);
    return sgn(acc);
}

mpz_class eval_z(const ZPoly& p, const mpz_class& t) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

// Sturm chain of a squarefree polynomial, each member primitive over Z.
// Positive rescaling of chain members preserves the sign-variation counts.
std::vector<ZPoly> sturm_chain(const ZPoly& q) {
    std::vector<ZPoly> chain;
    chain.push_back(q);
    ZPoly d = derivative(q);
    if (d.empty()) return chain;
    chain.push_back(primitive(std::move(d)));
    while (deg(chain.back()) > 0) {
        QPoly r = rem_q(to_q(chain[chain.size() - 2]), to_q(chain.back()));
        if (r.empty()) break;
        for (mpq_class& c : r) c = -c;
        chain.push_back(primitive_from_q(r));
    }
    return chain;
}

int variations(const std::vector<ZPoly>& chain, const mpq_class& t) {
    int v = 0, prev = 0;
    for (const ZPoly& p : chain) {
        const int s = sign_at(p, t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Evaluation points are half-odd integers, which are never roots of a monic
// integer polynomial, so the Sturm count hypotheses always hold.
mpq_class half_below(const mpz_class& k) { return mpq_class(2 * k - 1, 2); }
mpq_class half_above(const mpz_class& k) { return mpq_class(2 * k + 1, 2); }

void isolate(const std::vector<ZPoly>& chain, const mpz_class& lo, const mpz_class& hi,
             int count, std::vector<mpz_class>& out) {
    if (count <= 0) return;
    if (lo == hi) {
        if (eval_z(chain.front(), lo) == 0) out.push_back(lo);
        return;
    }
    mpz_class mid = lo + (hi - lo) / 2;
    const int left = variations(chain, half_below(lo)) - variations(chain, half_above(mid));
    isolate(chain, lo, mid, left, out);
    isolate(chain, mid + 1, hi, count - left, out);
}

} // namespace

std::pair<ZPoly, mpz_class> charpoly_scaled(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix not square");
    const std::size_t n = m.rows();
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    if (n == 0) return {ZPoly{1}, scale};

    // Entries of y I - (scale m) as integer polynomials in y.
    std::vector<std::vector<ZPoly>> w(n, std::vector<ZPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class s = m.at(i, j).raw() * scale;
            ZPoly e{mpz_class(-s.get_num())};
            if (i == j) e.push_back(1);
            trim(e);
            w[i][j] = std::move(e);
        }

    // Bareiss: every pivot equals the leading principal minor of stage k,
    // a monic polynomial of degree k+1, so no pivoting is ever needed and
    // all divisions are exact.
    ZPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const ZPoly pivot = w[k][k];
        if (deg(pivot) != static_cast<int>(k) + 1 || pivot.back() != 1)
            throw std::runtime_error("charpoly: pivot invariant violated");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w[i][j] = divexact(sub(mul(w[i][j], pivot), mul(w[i][k], w[k][j])), prev);
            w[i][k].clear();
        }
        prev = pivot;
    }
    ZPoly p = w[n - 1][n - 1];
    if (deg(p) != static_cast<int>(n) || p.back() != 1)
        throw std::runtime_error("charpoly: result not monic of full degree");
    return {std::move(p), std::move(scale)};
}

std::vector<std::pair<mpz_class, int>> integer_roots(const ZPoly& p_in) {
    ZPoly p = p_in;
    trim(p);
    if (p.empty()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<std::pair<mpz_class, int>> roots;

    std::size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    if (z > 0) {
        roots.emplace_back(mpz_class(0), static_cast<int>(z));
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
    }
    if (deg(p) < 1) return roots;

    const ZPoly g = gcd_z(p, derivative(p));
    const ZPoly q = deg(g) > 0 ? divexact(p, g) : p;

    mpz_class bound = 0;
    for (const mpz_class& c : q) {
        mpz_class a = ::abs(c);
        if (a > bound) bound = a;
    }
    bound += 1;

    const std::vector<ZPoly> chain = sturm_chain(q);
    const int total = variations(chain, half_below(-bound)) - variations(chain, half_above(bound));
    std::vector<mpz_class> found;
    isolate(chain, -bound, bound, total, found);

    for (const mpz_class& r : found) {
        // Multiplicity by repeated exact synthetic division of the original.
        int mult = 0;
        ZPoly cur = p;
        for (;;) {
            ZPoly quot(cur.size() - 1);
            mpz_class carry = 0;
            for (int i = static_cast<int>(cur.size()) - 1; i >= 1; --i) {
                carry = cur[static_cast<std::size_t>(i)] + r * carry;
                quot[static_cast<std::size_t>(i) - 1] = carry;
            }
            carry = cur[0] + r * carry;
            if (carry != 0) break;
            ++mult;
            cur = std::move(quot);
            if (cur.size() <= 1) break;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<Eigenvalue> rational_eigenvalues(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("rational_eigenvalues: matrix not square");
    if (m.rows() == 0) return {};
    auto [p, scale] = charpoly_scaled(m);
    std::vector<Eigenvalue> out;
    for (const auto& [root, mult] : integer_roots(p))
        out.push_back({Rat(mpq_class(root, scale)), mult});
    std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
    return out;
}

} // namespace racah
