#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "tucensus/catalog.hpp"
#include "tucensus/errors.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/matrix.hpp"

#include "helpers.hpp"

using namespace tucensus;

TEST_CASE("matrix basics") {
    const IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
    REQUIRE(m.rows() == 2);
    REQUIRE(m(1, 0) == 3);
    REQUIRE(m.transpose()(0, 1) == 3);
    REQUIRE(m.trace() == 5);
    REQUIRE_FALSE(m.is_symmetric());
    REQUIRE(IntMatrix::identity(3).is_symmetric());
    REQUIRE((m + m)(1, 1) == 8);
    REQUIRE((m - m)(0, 0) == 0);
    const IntMatrix p = m * IntMatrix::identity(2);
    REQUIRE(p == m);
    REQUIRE_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), error);
    REQUIRE_THROWS_AS(m * IntMatrix(3, 3), error);
    REQUIRE_THROWS_AS(IntMatrix(2, 3).trace(), error);
}

TEST_CASE("graph matrices of the paw match the worked figure") {
    const Graph paw = paw_graph();
    REQUIRE(degree_matrix(paw) == IntMatrix::from_rows({{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
    REQUIRE(adjacency_matrix(paw) == IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}}));
    // Columns follow edge labels (1,2), (2,3), (3,4), (2,4).
    REQUIRE(incidence_matrix(paw) ==
            IntMatrix::from_rows({{1, 0, 0, 0}, {1, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    REQUIRE(signless_laplacian(paw) ==
            IntMatrix::from_rows({{1, 1, 0, 0}, {1, 3, 1, 1}, {0, 1, 2, 1}, {0, 1, 1, 2}}));
    REQUIRE(laplacian(paw) ==
            IntMatrix::from_rows({{1, -1, 0, 0}, {-1, 3, -1, -1}, {0, -1, 2, -1}, {0, -1, -1, 2}}));
}

TEST_CASE("incidence columns have exactly two ones and Q = N N^T") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const IntMatrix nmat = incidence_matrix(g);
            for (std::size_t c = 0; c < nmat.cols(); ++c) {
                Int sum = 0;
                for (std::size_t r = 0; r < nmat.rows(); ++r) sum += nmat(r, c);
                REQUIRE(sum == 2);
            }
            REQUIRE(nmat * nmat.transpose() == signless_laplacian(g));
        }
    }
}

TEST_CASE("deleting a vertex commutes with the incidence product") {
    const Graph g = paw_graph();
    const IntMatrix nmat = incidence_matrix(g);
    const IntMatrix q = signless_laplacian(g);
    for (int i = 1; i <= g.vertex_count(); ++i) {
        const IntMatrix ni = submatrix(nmat, Drop{{i}}, Keep{{1, 2, 3, 4}});
        REQUIRE(ni * ni.transpose() == principal_submatrix(q, i));
    }
}

TEST_CASE("submatrix notations keep, drop, and mixed") {
    const IntMatrix q = signless_laplacian(paw_graph());
    REQUIRE(principal_submatrix(q, 1) == IntMatrix::from_rows({{3, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
    REQUIRE(principal_submatrix(q, 2) == IntMatrix::from_rows({{1, 0, 0}, {0, 2, 1}, {0, 1, 2}}));
    REQUIRE(submatrix(q, Keep{{2, 3}}, Keep{{2, 3}}) == IntMatrix::from_rows({{3, 1}, {1, 2}}));
    REQUIRE(submatrix(q, Drop{{}}, Drop{{}}) == q);
    REQUIRE(submatrix(q, Keep{{1, 2, 3, 4}}, Keep{{1, 2, 3, 4}}) == q);
    REQUIRE(submatrix(q, Drop{{1}}, Keep{{2}}) == IntMatrix::from_rows({{3}, {1}, {1}}));
    REQUIRE_THROWS_AS(submatrix(q, Keep{{0}}, Keep{{1}}), error);
    REQUIRE_THROWS_AS(submatrix(q, Keep{{5}}, Keep{{1}}), error);
    REQUIRE_THROWS_AS(submatrix(q, Keep{{1, 1}}, Keep{{1}}), error);
    REQUIRE_THROWS_AS(principal_submatrix(IntMatrix(2, 3), 1), error);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    REQUIRE(det(IntMatrix(0, 0)) == 1);
    REQUIRE(det(IntMatrix::identity(4)) == 1);
    REQUIRE(det(IntMatrix::from_rows({{2, 1}, {1, 2}})) == 3);
    REQUIRE(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    REQUIRE(det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    REQUIRE(det(IntMatrix::from_rows({{0, 2, 1}, {0, 0, 3}, {5, 0, 0}})) == 30);

    const Graph paw = paw_graph();
    const IntMatrix q = signless_laplacian(paw);
    REQUIRE(det(principal_submatrix(q, 1)) == 7);
    REQUIRE(det(principal_submatrix(q, 2)) == 3);
    REQUIRE(det(principal_submatrix(q, 3)) == 3);
    REQUIRE(det(principal_submatrix(q, 4)) == 3);
    REQUIRE(det(q) == 4);

    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            REQUIRE(det(signless_laplacian(g)) == oracle::cofactor_det(signless_laplacian(g)));
            REQUIRE(det(laplacian(g)) == oracle::cofactor_det(laplacian(g)));
        }
    }

    // Deterministic integer matrices with negatives and zeros.
    std::srand(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(std::rand() % 5);
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = std::rand() % 21 - 10;
        REQUIRE(det(m) == oracle::cofactor_det(m));
        REQUIRE(det(m.transpose()) == det(m));
    }
    REQUIRE_THROWS_AS(det(IntMatrix(2, 3)), error);
}

TEST_CASE("product determinant expands over column subsets") {
    const Graph paw = paw_graph();
    const IntMatrix nmat = incidence_matrix(paw);
    const IntMatrix n1 = submatrix(nmat, Drop{{1}}, Drop{{}});
    const CauchyBinetSides paw_sides = cauchy_binet_check(n1, n1);
    REQUIRE(paw_sides.lhs == 7);
    REQUIRE(paw_sides.rhs == 7);

    const IntMatrix k3 = incidence_matrix(complete_graph(3));
    const IntMatrix k3_1 = submatrix(k3, Drop{{1}}, Drop{{}});
    const CauchyBinetSides k3_sides = cauchy_binet_check(k3_1, k3_1);
    REQUIRE(k3_sides.lhs == k3_sides.rhs);
    REQUIRE(k3_sides.lhs == 3);

    // Different matrices on each side.
    const IntMatrix a = IntMatrix::from_rows({{1, 0, 2}, {0, 1, 1}});
    const IntMatrix b = IntMatrix::from_rows({{2, 1, 0}, {1, 1, 3}});
    const CauchyBinetSides mixed = cauchy_binet_check(a, b);
    REQUIRE(mixed.lhs == mixed.rhs);

    const CauchyBinetSides one = cauchy_binet_check(IntMatrix::from_rows({{3}}), IntMatrix::from_rows({{5}}));
    REQUIRE(one.lhs == 15);
    REQUIRE(one.rhs == 15);

    REQUIRE_THROWS_AS(cauchy_binet_check(IntMatrix(3, 2), IntMatrix(3, 2)), error);
    REQUIRE_THROWS_AS(cauchy_binet_check(IntMatrix(2, 3), IntMatrix(2, 4)), error);
}
