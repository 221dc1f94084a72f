#pragma once

#include "racah/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace racah {

/// Dense matrix of exact rationals, row-major storage. Operators act on
/// column vectors throughout the library.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& v);
    void swap_rows(std::size_t i, std::size_t j);

    bool is_zero() const;
    /// The scalar lambda with *this == lambda * I, when the matrix is square
    /// and scalar; nullopt otherwise.
    std::optional<Rat> as_scalar() const;

    RatMatrix transpose() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { a += b; return a; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { a -= b; return a; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rat& s, const RatMatrix& m);
    RatMatrix operator-() const { return Rat(-1) * *this; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }
inline RatMatrix anticommutator(const RatMatrix& a, const RatMatrix& b) { return a * b + b * a; }

/// Action of m on a row-stored vector: returns (m v^T)^T.
std::vector<Rat> act(const RatMatrix& m, const std::vector<Rat>& v);

bool is_zero_vector(const std::vector<Rat>& v);

} // namespace racah
