#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "boxspec/bessel.hpp"
#include "boxspec/oracle.hpp"

using namespace boxspec;
using namespace boxspec::oracle;

namespace {

constexpr double kPi = 3.14159265358979323846;

DenseSymMatrix random_sym(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseSymMatrix m = DenseSymMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = u(rng);
    return m;
}

}  // namespace

TEST_CASE("symmetry detection") {
    DenseSymMatrix good(2, {1, 2, 2, 3});
    CHECK(good.is_symmetric());
    DenseSymMatrix bad(2, {1, 2, 2 + 1e-6, 3});
    CHECK_FALSE(bad.is_symmetric());
    CHECK_THROWS_AS(symmetric_eigen_dense(bad), std::invalid_argument);
}

TEST_CASE("jacobi on closed-form matrices") {
    auto eig = symmetric_eigen_dense(DenseSymMatrix(2, {2, 1, 1, 2}));
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-14));

    // diag(5, -1, 2) under a permutation-like similarity stays {-1, 2, 5}.
    auto d = symmetric_eigen_dense(DenseSymMatrix(3, {5, 0, 0, 0, -1, 0, 0, 0, 2}));
    CHECK(d[0] == -1.0);
    CHECK(d[1] == 2.0);
    CHECK(d[2] == 5.0);
}

TEST_CASE("jacobi invariants on random matrices") {
    std::mt19937_64 rng(40923);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 3 + t % 6;
        auto m = random_sym(rng, n);
        auto eig = symmetric_eigen_dense(m);
        REQUIRE(eig.size() == n);
        double tr = 0.0, trm = 0.0, sq = 0.0, frob = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            trm += m(i, i);
            for (std::size_t j = 0; j < n; ++j) frob += m(i, j) * m(i, j);
        }
        for (double v : eig) {
            tr += v;
            sq += v * v;
        }
        CHECK(std::abs(tr - trm) < 1e-12 * std::max(1.0, std::abs(trm)));
        CHECK(std::abs(sq - frob) < 1e-12 * std::max(1.0, frob));
        for (std::size_t i = 1; i < n; ++i) CHECK(eig[i - 1] <= eig[i]);
    }
}

TEST_CASE("householder+QL agrees with jacobi") {
    std::mt19937_64 rng(515253);
    for (int t = 0; t < 6; ++t) {
        const std::size_t n = 5 + 7 * t;
        auto m = random_sym(rng, n);
        auto a = symmetric_eigen_dense(m);
        auto b = symmetric_eigen_large(m);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(a[i] - b[i]) < 1e-10 * std::max(1.0, std::abs(a[i])));
    }
}

TEST_CASE("tridiagonal QL matches the Toeplitz closed form") {
    const std::size_t n = 30;
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    auto eig = tridiagonal_eigen(d, e);
    for (std::size_t k = 1; k <= n; ++k) {
        const double closed = 2.0 - 2.0 * std::cos(k * kPi / (n + 1));
        CHECK(eig[k - 1] == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("kronecker sum structure") {
    DenseSymMatrix a(2, {1, 0, 0, 2});
    DenseSymMatrix b(2, {10, 0, 0, 20});
    auto k = kronecker_sum(a, b);
    REQUIRE(k.order() == 4);
    auto eig = symmetric_eigen_dense(k);
    CHECK(eig[0] == doctest::Approx(11.0));
    CHECK(eig[1] == doctest::Approx(12.0));
    CHECK(eig[2] == doctest::Approx(21.0));
    CHECK(eig[3] == doctest::Approx(22.0));
}

TEST_CASE("kronecker sum spectrum is the Minkowski sum (randomized)") {
    std::mt19937_64 rng(777001);
    for (int t = 0; t < 5; ++t) {
        auto a = random_sym(rng, 3 + t % 3);
        auto b = random_sym(rng, 2 + t % 4);
        auto ea = symmetric_eigen_dense(a);
        auto eb = symmetric_eigen_dense(b);
        std::vector<double> expected;
        for (double x : ea)
            for (double y : eb) expected.push_back(x + y);
        std::sort(expected.begin(), expected.end());
        auto got = symmetric_eigen_dense(kronecker_sum(a, b));
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(std::abs(got[i] - expected[i]) < 1e-10);
    }
}

TEST_CASE("interval FD eigenvalues") {
    SUBCASE("single point") {
        auto eig = fd_dirichlet_interval(kPi, 1);
        CHECK(eig[0] == doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-14));
    }
    SUBCASE("closed form at any size") {
        const std::size_t n = 17;
        const double L = 2.5, h = L / (n + 1);
        auto eig = fd_dirichlet_interval(L, n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double closed = (2.0 - 2.0 * std::cos(k * kPi / (n + 1))) / (h * h);
            CHECK(eig[k - 1] == doctest::Approx(closed).epsilon(1e-12));
        }
    }
    SUBCASE("convergence to (pi/L)^2") {
        auto eig = fd_dirichlet_interval(kPi, 400);
        CHECK(std::abs(eig[0] - 1.0) < 1e-4);
    }
}

TEST_CASE("rectangle FD matrix is the kronecker sum of interval matrices") {
    auto rect = fd_dirichlet_rect_matrix(2.0, 1.0, 6, 4);
    auto ks = kronecker_sum(fd_dirichlet_interval_matrix(2.0, 6),
                            fd_dirichlet_interval_matrix(1.0, 4));
    REQUIRE(rect.order() == ks.order());
    CHECK(rect.entries() == ks.entries());
}

TEST_CASE("disc FD smallest eigenvalue approaches (j01/r)^2") {
    auto eig = fd_dirichlet_disc(1.0, 1.0 / 12.0);
    const double j01 = bessel_zero(0, 1);
    const double target = j01 * j01;
    CHECK(std::abs(eig[0] - target) < 0.05 * target);
    // The second Dirichlet eigenvalue is double; the FD split is small.
    CHECK(std::abs(eig[2] - eig[1]) < 0.02 * eig[1]);
    CHECK(disc_interior_node_count(1.0, 1.0 / 12.0) == eig.size());
}

TEST_CASE("box0 rectangle: kernel size and smallest positive eigenvalue") {
    const std::size_t nx = 16, ny = 16;
    auto eig = fd_box0_rectangle(kPi, kPi, nx, ny);
    REQUIRE(eig.size() == nx * ny);
    std::size_t kernel = 0;
    while (kernel < eig.size() && eig[kernel] < 1e-8) ++kernel;
    CHECK(kernel == nx + ny - 1);
    // Coarse grid: wide tolerance, tightened in the acceptance run.
    CHECK(std::abs(eig[kernel] - 0.5) < 0.2 * 0.5);
}

TEST_CASE("dense solver rejects desk-scale overruns") {
    CHECK_THROWS_AS(symmetric_eigen_dense(DenseSymMatrix::zero(kDenseOrderLimit + 1)),
                    std::invalid_argument);
}
