#include "racah/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace racah {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    return {e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void RatMatrix::set_row(std::size_t i, const std::vector<Rat>& v) {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void RatMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Rat> RatMatrix::as_scalar() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const Rat& lambda = at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != lambda : !at(i, j).is_zero()) return std::nullopt;
        }
    return lambda;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in +");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in -");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in *");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& m) {
    RatMatrix c = m;
    for (std::size_t i = 0; i < c.rows_; ++i)
        for (std::size_t j = 0; j < c.cols_; ++j) c.at(i, j) *= s;
    return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::vector<Rat> act(const RatMatrix& m, const std::vector<Rat>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Rat> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat acc;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

bool is_zero_vector(const std::vector<Rat>& v) {
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace racah
