#pragma once

#include "racah/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace racah {

struct RrefResult {
    RatMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form, computed by exact Gauss-Jordan.
RrefResult rref(RatMatrix m);

/// Subspace of Q^n in canonical form: the basis matrix is in RREF with no
/// zero rows, one basis vector per row. Two subspaces are equal iff their
/// basis matrices are entry-wise equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    static Subspace from_rows(std::size_t ambient, const std::vector<std::vector<Rat>>& rows);
    static Subspace from_matrix_rows(const RatMatrix& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// v with the pivot coordinates of this subspace eliminated; zero iff
    /// v lies in the subspace.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool contains_vector(const std::vector<Rat>& v) const;
    /// Coefficients c with v = sum_j c_j basis_row_j, when v lies here.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    /// Total order: by dimension, then lexicographic on basis entries.
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    RatMatrix basis_;
    std::vector<std::size_t> pivots_;
};

bool contains(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

/// Null space {v : m v = 0} as a canonical subspace of Q^cols.
Subspace kernel(const RatMatrix& m);

/// Image of a subspace under a matrix acting on column vectors.
Subspace image(const RatMatrix& op, const Subspace& u);

} // namespace racah
