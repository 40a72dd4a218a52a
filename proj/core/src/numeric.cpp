#include "augraph/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace augraph {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / (na * nb);
}

namespace {

double off_diagonal_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(Matrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return {};

    constexpr double kTol = 1e-10;
    constexpr int kMaxSweeps = 100;

    bool converged = off_diagonal_frobenius(a) < kTol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double app = a.at(p, p);
                const double aqq = a.at(q, q);

                // Classic stable rotation (Golub & Van Loan 8.4).
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a.at(i, p);
                    const double aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a.at(p, i);
                    const double aqi = a.at(q, i);
                    a.at(p, i) = c * api - s * aqi;
                    a.at(q, i) = s * api + c * aqi;
                }
            }
        }
        converged = off_diagonal_frobenius(a) < kTol;
    }
    if (!converged)
        throw std::runtime_error("jacobi_eigenvalues: no convergence within 100 sweeps");

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a.at(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace augraph
