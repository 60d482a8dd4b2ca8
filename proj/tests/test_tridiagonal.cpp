#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "exciton/errors.hpp"
#include "exciton/tridiagonal.hpp"

using namespace exciton;

namespace {

// || T v - lambda v ||_inf for the tridiagonal T given by (d, e).
double residual(const std::vector<double>& d, const std::vector<double>& e,
                const std::vector<double>& v, double lambda)
{
    const std::size_t n = d.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double tv = d[i] * v[i];
        if (i > 0) tv += e[i - 1] * v[i - 1];
        if (i + 1 < n) tv += e[i] * v[i + 1];
        worst = std::max(worst, std::fabs(tv - lambda * v[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("1x1 and 2x2 matrices")
{
    const std::vector<double> d1{3.5};
    auto one = solve_symmetric_tridiagonal(d1, {});
    CHECK(one.values[0] == 3.5);
    CHECK(one.vectors[0][0] == 1.0);

    const std::vector<double> d2{1.0, 1.0};
    const std::vector<double> e2{-0.25};
    auto two = solve_symmetric_tridiagonal(d2, e2);
    CHECK(two.values[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(two.values[1] == doctest::Approx(1.25).epsilon(1e-15));
    // Lower state of a negative hopping is symmetric.
    CHECK(two.vectors[0][0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(two.vectors[0][1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(two.vectors[1][0] > 0.0);
    CHECK(two.vectors[1][1] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("random matrices: residuals, orthonormality, ordering and sign")
{
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 25);
        std::vector<double> d(n);
        std::vector<double> e(n - 1);
        for (auto& x : d) x = u(rng);
        for (auto& x : e) x = u(rng);
        const auto eig = solve_symmetric_tridiagonal(d, e);
        REQUIRE(eig.values.size() == n);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(residual(d, e, eig.vectors[j], eig.values[j]) < 1e-12);
            if (j > 0) CHECK(eig.values[j - 1] <= eig.values[j]);
            for (std::size_t l = 0; l < n; ++l) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += eig.vectors[j][i] * eig.vectors[l][i];
                CHECK(s == doctest::Approx(j == l ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
            }
            double peak = 0.0;
            for (double x : eig.vectors[j]) peak = std::max(peak, std::fabs(x));
            for (double x : eig.vectors[j]) {
                if (std::fabs(x) > 1e-10 * peak) {
                    CHECK(x > 0.0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("size mismatch is rejected")
{
    const std::vector<double> d{1.0, 2.0};
    const std::vector<double> e{1.0, 2.0};
    CHECK_THROWS_AS(solve_symmetric_tridiagonal(d, e), DomainError);
    CHECK_THROWS_AS(solve_symmetric_tridiagonal({}, {}), DomainError);
}
