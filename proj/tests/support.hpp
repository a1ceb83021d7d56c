#pragma once

#include <random>
#include <string>

#include "ostro/linalg.hpp"
#include "ostro/system.hpp"

namespace ostro::testing {

/// F(x) = A x + b.
inline NonlinearSystem affine_system(const Matrix& a, const Vector& b) {
    return NonlinearSystem("affine", a.size(), [a, b](std::size_t i, std::span<const Real> x) {
        Real sum = b[i];
        for (std::size_t j = 0; j < x.size(); ++j) sum += a(i, j) * x[j];
        return sum;
    });
}

/// m = 1 system f(x) = x^2 - c.
inline NonlinearSystem square_minus(long c) {
    return NonlinearSystem("square", 1, [c](std::size_t, std::span<const Real> x) { return x[0] * x[0] - Real(c); });
}

/// Diagonally dominant random matrix, so it is comfortably nonsingular.
inline Matrix random_matrix(std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    Matrix a(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = Real(entry(rng));
        a(i, i) += Real(static_cast<long>(m));
    }
    return a;
}

inline Vector random_vector(std::size_t m, std::mt19937_64& rng, double spread = 1.0) {
    std::uniform_real_distribution<double> entry(-spread, spread);
    Vector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = Real(entry(rng));
    return v;
}

inline Real max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs_entry(a - b); }

}  // namespace ostro::testing
