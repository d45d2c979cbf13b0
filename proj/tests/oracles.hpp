#pragma once

#include <vector>

#include <semialg/polynomial.hpp>

// Reference implementations used only to cross-check the production
// algorithms.  They favor transparency over speed.
namespace oracles {

using semialg::Polynomial;
using semialg::Rational;

// Sylvester-matrix resultant via Bareiss fraction-free elimination.
inline Polynomial resultant_sylvester(const Polynomial& f, const Polynomial& g,
                                      std::size_t var) {
    long m = f.degree_in(var), n = g.degree_in(var);
    if (m < 0 || n < 0) throw semialg::error(semialg::errc::zero_input, "zero input");
    const auto& ring = f.ring();
    auto one = Polynomial::constant(ring, Rational(1));
    if (m == 0 && n == 0) return one;
    if (m == 0) return f.pow(static_cast<unsigned>(n));
    if (n == 0) return g.pow(static_cast<unsigned>(m));

    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Polynomial>> M(dim, std::vector<Polynomial>(dim, Polynomial(ring)));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k)
            M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                fc[static_cast<std::size_t>(m - k)];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
                gc[static_cast<std::size_t>(n - k)];

    int sign = 1;
    Polynomial prev = one;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t swap_row = dim;
            for (std::size_t i = k + 1; i < dim; ++i)
                if (!M[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row == dim) return Polynomial(ring);
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j)
                M[i][j] = semialg::exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Polynomial(ring);
        }
        prev = M[k][k];
    }
    Polynomial det = M[dim - 1][dim - 1];
    return sign < 0 ? -det : det;
}

} // namespace oracles
