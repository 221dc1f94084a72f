#include "racah/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace racah {

RrefResult rref(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        const Rat inv = Rat(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rat f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = RatMatrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::from_rows(std::size_t ambient, const std::vector<std::vector<Rat>>& rows) {
    RatMatrix m(rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return from_matrix_rows(m);
}

Subspace Subspace::from_matrix_rows(const RatMatrix& rows) {
    RrefResult r = rref(rows);
    Subspace s(rows.cols());
    RatMatrix b(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) b.set_row(i, r.reduced.row(i));
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
}

std::vector<Rat> Subspace::reduce(std::vector<Rat> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
        const Rat c = v[pivots_[j]];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < ambient_; ++k) v[k] -= c * basis_.at(j, k);
    }
    return v;
}

bool Subspace::contains_vector(const std::vector<Rat>& v) const {
    return is_zero_vector(reduce(v));
}

std::optional<std::vector<Rat>> Subspace::coordinates(const std::vector<Rat>& v) const {
    if (!contains_vector(v)) return std::nullopt;
    std::vector<Rat> c(dim());
    for (std::size_t j = 0; j < pivots_.size(); ++j) c[j] = v[pivots_[j]];
    return c;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_; ++j) {
            const Rat &x = a.basis_.at(i, j), &y = b.basis_.at(i, j);
            if (x != y) return x < y;
        }
    return false;
}

bool contains(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("contains: ambient mismatch");
    if (w.dim() > u.dim()) return false;
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (!u.contains_vector(w.basis().row(i))) return false;
    return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
    RatMatrix stacked(u.dim() + w.dim(), u.ambient_dim());
    for (std::size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row(i));
    for (std::size_t i = 0; i < w.dim(); ++i) stacked.set_row(u.dim() + i, w.basis().row(i));
    return Subspace::from_matrix_rows(stacked);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace_intersect: ambient mismatch");
    const std::size_t n = u.ambient_dim(), du = u.dim(), dw = w.dim();
    if (du == 0 || dw == 0) return Subspace::zero(n);
    // x in U cap W  <=>  x = a . U = b . W; solve for (a, b) in the kernel of
    // the column-stacked system [U^T | -W^T].
    RatMatrix sys(n, du + dw);
    for (std::size_t i = 0; i < du; ++i)
        for (std::size_t k = 0; k < n; ++k) sys.at(k, i) = u.basis().at(i, k);
    for (std::size_t i = 0; i < dw; ++i)
        for (std::size_t k = 0; k < n; ++k) sys.at(k, du + i) = -w.basis().at(i, k);
    const Subspace coeff = kernel(sys);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(coeff.dim());
    for (std::size_t i = 0; i < coeff.dim(); ++i) {
        const std::vector<Rat> ab = coeff.basis().row(i);
        std::vector<Rat> x(n);
        for (std::size_t j = 0; j < du; ++j)
            for (std::size_t k = 0; k < n; ++k) x[k] += ab[j] * u.basis().at(j, k);
        rows.push_back(std::move(x));
    }
    return Subspace::from_rows(n, rows);
}

Subspace kernel(const RatMatrix& m) {
    const RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n);
        v[f] = 1;
        for (std::size_t j = 0; j < r.pivot_cols.size(); ++j) v[r.pivot_cols[j]] = -r.reduced.at(j, f);
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(n, rows);
}

Subspace image(const RatMatrix& op, const Subspace& u) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(act(op, u.basis().row(i)));
    return Subspace::from_rows(op.rows(), rows);
}

} // namespace racah
