#pragma once

#include "racah/matrix.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace racah {

/// Integer polynomial, coeffs[i] is the coefficient of y^i. Empty means zero.
using ZPoly = std::vector<mpz_class>;

/// Monic integer characteristic polynomial det(y I - L m) of the
/// integer-scaled matrix, where L is the lcm of all entry denominators.
/// Computed by fraction-free Bareiss elimination with polynomial entries.
std::pair<ZPoly, mpz_class> charpoly_scaled(const RatMatrix& m);

/// All integer roots of p with multiplicities, found by Sturm-sequence
/// isolation on the squarefree part. Complete: every integer root of p is
/// returned.
std::vector<std::pair<mpz_class, int>> integer_roots(const ZPoly& p);

struct Eigenvalue {
    Rat value;
    int multiplicity; // algebraic
};

/// All rational eigenvalues with algebraic multiplicities, ascending.
/// Irrational and complex eigenvalues do not appear; callers needing a full
/// rational spectrum must check that multiplicities sum to the dimension.
std::vector<Eigenvalue> rational_eigenvalues(const RatMatrix& m);

} // namespace racah
