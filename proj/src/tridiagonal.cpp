#include "exciton/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "exciton/errors.hpp"

namespace exciton {

namespace {

constexpr int kMaxIterations = 60;

double with_sign(double magnitude, double sign_source)
{
    return sign_source >= 0.0 ? std::fabs(magnitude) : -std::fabs(magnitude);
}

// Implicit QL on (d, e), accumulating rotations into the column-major
// identity `z`. On return d holds the eigenvalues and column j of z the
// corresponding eigenvector.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z,
                 std::size_t n)
{
    auto at = [&](std::size_t row, std::size_t col) -> double& { return z[col * n + row]; };

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) + dd == dd) break;
            }
            if (m == l) break;
            if (iter++ == kMaxIterations) {
                throw DomainError("tridiagonal QL did not converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + with_sign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < n; ++k) {
                    f = at(k, i + 1);
                    at(k, i + 1) = s * at(k, i) + c * f;
                    at(k, i) = c * at(k, i) - s * f;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

void fix_sign(std::vector<double>& v)
{
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::fabs(x));
    for (double x : v) {
        if (std::fabs(x) > 1e-10 * peak) {
            if (x < 0.0) {
                for (double& y : v) y = -y;
            }
            return;
        }
    }
}

}  // namespace

TridiagonalEigen solve_symmetric_tridiagonal(std::span<const double> diagonal,
                                             std::span<const double> off_diagonal)
{
    const std::size_t n = diagonal.size();
    if (n == 0) throw DomainError("tridiagonal matrix must be at least 1x1");
    if (off_diagonal.size() + 1 != n) {
        throw DomainError("off-diagonal length " + std::to_string(off_diagonal.size()) +
                          " does not match dimension " + std::to_string(n));
    }

    std::vector<double> d(diagonal.begin(), diagonal.end());
    std::vector<double> e(n, 0.0);
    std::copy(off_diagonal.begin(), off_diagonal.end(), e.begin());
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

    ql_implicit(d, e, z, n);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    TridiagonalEigen out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t j : order) {
        out.values.push_back(d[j]);
        std::vector<double> v(z.begin() + static_cast<std::ptrdiff_t>(j * n),
                              z.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
        fix_sign(v);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

}  // namespace exciton
