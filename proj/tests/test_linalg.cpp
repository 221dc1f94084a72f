#include "racah/catalog.hpp"
#include "racah/eigen.hpp"
#include "racah/rng.hpp"
#include "racah/subspace.hpp"

#include <doctest.h>

#include <algorithm>

using namespace racah;

namespace {

RatMatrix from_rows_list(const std::vector<std::vector<Rat>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_num = 5, long max_den = 3) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.rational(max_num, max_den);
    return m;
}

Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t gens) {
    return Subspace::from_matrix_rows(random_matrix(rng, gens, ambient));
}

} // namespace

TEST_CASE("rref on the spec examples") {
    SUBCASE("proportional rows") {
        const auto r = rref(from_rows_list({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
        CHECK(r.rank == 1);
        CHECK(r.pivot_cols == std::vector<std::size_t>{0});
        CHECK(r.reduced.row(0) == std::vector<Rat>{Rat(1), Rat(2)});
        CHECK(r.reduced.row(1) == std::vector<Rat>{Rat(0), Rat(0)});
    }
    SUBCASE("identity is fixed") {
        const auto r = rref(RatMatrix::identity(3));
        CHECK(r.rank == 3);
        CHECK(r.reduced == RatMatrix::identity(3));
    }
    SUBCASE("fractional leading entry") {
        // Hand row reduction: [[1/2,1],[1,2]] -> [[1,2],[0,0]].
        const auto r = rref(from_rows_list({{Rat(1, 2), Rat(1)}, {Rat(1), Rat(2)}}));
        CHECK(r.rank == 1);
        CHECK(r.reduced.row(0) == std::vector<Rat>{Rat(1), Rat(2)});
    }
}

TEST_CASE("kernel on the spec examples") {
    SUBCASE("single relation") {
        const Subspace k = kernel(from_rows_list({{Rat(1), Rat(1)}}));
        CHECK(k.dim() == 1);
        CHECK(k.contains_vector({Rat(1), Rat(-1)}));
    }
    SUBCASE("zero map") {
        const Subspace k = kernel(RatMatrix(2, 2));
        CHECK(k == Subspace::full(2));
    }
    SUBCASE("t0 + 2 on the d=3 even family module") {
        // Eigenspace of eigenvalue -2, predicted dimension (d+3)/2 = 3.
        const HRep h = build_E(3, Rat(2), Rat(3), Rat(7));
        RatMatrix shifted = h.t0 + Rat(2) * RatMatrix::identity(4);
        CHECK(kernel(shifted).dim() == 3);
    }
}

TEST_CASE("subspace sum and intersection on the spec examples") {
    const Subspace e0 = Subspace::from_rows(3, {{Rat(1), Rat(0), Rat(0)}});
    const Subspace e1 = Subspace::from_rows(3, {{Rat(0), Rat(1), Rat(0)}});
    CHECK(subspace_sum(e0, e1).dim() == 2);
    CHECK(subspace_sum(e0, e0) == e0);

    const Subspace e01 = Subspace::from_rows(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
    const Subspace e12 = Subspace::from_rows(3, {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    CHECK(subspace_intersect(e01, e12) == e1);
    CHECK(subspace_intersect(e0, Subspace::full(3)) == e0);

    const HRep h = build_E(3, Rat(2), Rat(3), Rat(7));
    const auto minus = kernel(h.t0 + Rat(2) * RatMatrix::identity(4));
    const auto plus = kernel(h.t0 - Rat(2) * RatMatrix::identity(4));
    CHECK(subspace_sum(minus, plus) == Subspace::full(4));
    CHECK(subspace_intersect(minus, plus) == Subspace::zero(4));

    CHECK_THROWS_AS(subspace_sum(e0, Subspace::full(2)), std::invalid_argument);
    CHECK_THROWS_AS(subspace_intersect(e0, Subspace::full(2)), std::invalid_argument);
}

TEST_CASE("containment") {
    const Subspace e0 = Subspace::from_rows(2, {{Rat(1), Rat(0)}});
    const Subspace diag = Subspace::from_rows(2, {{Rat(1), Rat(1)}});
    CHECK(contains(Subspace::full(2), e0));
    CHECK(contains(Subspace::full(2), diag));
    CHECK(!contains(e0, diag));
    CHECK(contains(e0, Subspace::zero(2)));
}

TEST_CASE("rational eigenvalues on the spec examples") {
    SUBCASE("nilpotent") {
        const auto evs = rational_eigenvalues(from_rows_list({{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}));
        REQUIRE(evs.size() == 1);
        CHECK(evs[0].value == Rat(0));
        CHECK(evs[0].multiplicity == 2);
    }
    SUBCASE("diagonal") {
        RatMatrix d(3, 3);
        d.at(0, 0) = 6;
        d.at(1, 1) = 2;
        d.at(2, 2) = 0;
        const auto evs = rational_eigenvalues(d);
        REQUIRE(evs.size() == 3);
        CHECK(evs[0].value == Rat(0));
        CHECK(evs[1].value == Rat(2));
        CHECK(evs[2].value == Rat(6));
        for (const auto& e : evs) CHECK(e.multiplicity == 1);
    }
    SUBCASE("t0 of the d=3 even family module") {
        const HRep h = build_E(3, Rat(2), Rat(3), Rat(7));
        const auto evs = rational_eigenvalues(h.t0);
        REQUIRE(evs.size() == 2);
        CHECK(evs[0].value == Rat(-2));
        CHECK(evs[0].multiplicity == 3);
        CHECK(evs[1].value == Rat(2));
        CHECK(evs[1].multiplicity == 1);
    }
    SUBCASE("no rational roots") {
        // y^2 - 2: irrational pair simply does not appear.
        const auto evs = rational_eigenvalues(from_rows_list({{Rat(0), Rat(2)}, {Rat(1), Rat(0)}}));
        CHECK(evs.empty());
    }
    SUBCASE("fractional eigenvalues") {
        RatMatrix d(2, 2);
        d.at(0, 0) = Rat(5, 4);
        d.at(1, 1) = Rat(-7, 6);
        const auto evs = rational_eigenvalues(d);
        REQUIRE(evs.size() == 2);
        CHECK(evs[0].value == Rat(-7, 6));
        CHECK(evs[1].value == Rat(5, 4));
    }
}

TEST_CASE("charpoly is monic and matches a hand example") {
    // [[1,2],[3,4]] has char poly y^2 - 5y - 2.
    auto [p, scale] = charpoly_scaled(from_rows_list({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}));
    CHECK(scale == 1);
    REQUIRE(p.size() == 3);
    CHECK(p[2] == 1);
    CHECK(p[1] == -5);
    CHECK(p[0] == -2);
}

TEST_CASE("property: rref is idempotent and rank-nullity holds") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const std::size_t rows = static_cast<std::size_t>(rng.int_in(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.int_in(1, 6));
        const RatMatrix m = random_matrix(rng, rows, cols);
        const auto r1 = rref(m);
        const auto r2 = rref(r1.reduced);
        CHECK(r1.reduced == r2.reduced);
        CHECK(r1.rank == r2.rank);
        CHECK(kernel(m).dim() + r1.rank == cols);
    }
}

TEST_CASE("property: modular law for nested triples") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(2, 6));
        const Subspace x = random_subspace(rng, n, static_cast<std::size_t>(rng.int_in(1, 4)));
        // u spanned by random combinations of x's basis, so u is inside x.
        std::vector<std::vector<Rat>> urows;
        for (int k = 0; k < 2; ++k) {
            std::vector<Rat> v(n);
            for (std::size_t i = 0; i < x.dim(); ++i) {
                const Rat coeff = rng.rational(3, 2);
                for (std::size_t j = 0; j < n; ++j) v[j] += coeff * x.basis().at(i, j);
            }
            urows.push_back(std::move(v));
        }
        const Subspace u = Subspace::from_rows(n, urows);
        const Subspace w = random_subspace(rng, n, static_cast<std::size_t>(rng.int_in(1, 4)));
        REQUIRE(contains(x, u));
        CHECK(subspace_sum(u, subspace_intersect(w, x)) ==
              subspace_intersect(subspace_sum(u, w), x));
    }
}

TEST_CASE("property: mutual containment is equality") {
    Rng rng(37);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(2, 5));
        const Subspace u = random_subspace(rng, n, 2);
        const Subspace w = random_subspace(rng, n, 2);
        CHECK((contains(u, w) && contains(w, u)) == (u == w));
        // A reshuffled spanning set yields the identical canonical basis.
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = u.dim(); i-- > 0;) rows.push_back(u.basis().row(i));
        if (u.dim() >= 2) {
            std::vector<Rat> mix(n);
            for (std::size_t j = 0; j < n; ++j) mix[j] = u.basis().at(0, j) + Rat(3) * u.basis().at(1, j);
            rows.push_back(std::move(mix));
        }
        CHECK(Subspace::from_rows(n, rows) == u);
    }
}

TEST_CASE("property: spectrum is invariant under conjugation") {
    Rng rng(53);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(2, 5));
        // Upper triangular source, so the rational spectrum is the diagonal.
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                m.at(i, j) = i == j ? Rat(rng.int_in(-4, 4)) : rng.rational(4, 2);
        RatMatrix p(n, n);
        do {
            p = random_matrix(rng, n, n, 3, 2);
        } while (rref(p).rank != n);
        // Solve p q = I exactly via rref on [p | I].
        RatMatrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = p.at(i, j);
            aug.at(i, n + i) = 1;
        }
        const auto solved = rref(aug).reduced;
        RatMatrix pinv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pinv.at(i, j) = solved.at(i, n + j);
        const auto evs = rational_eigenvalues(m);
        const auto evs2 = rational_eigenvalues(p * m * pinv);
        REQUIRE(evs.size() == evs2.size());
        for (std::size_t i = 0; i < evs.size(); ++i) {
            CHECK(evs[i].value == evs2[i].value);
            CHECK(evs[i].multiplicity == evs2[i].multiplicity);
        }
    }
}
