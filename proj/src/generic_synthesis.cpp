#include "spherediv/generic_synthesis.hpp"

#include <cmath>

namespace spherediv {

Rational synthesis_delta(std::size_t d)
{
    Integer denom = 1;
    for (std::size_t k = 1; k <= d; ++k) denom *= 2 * static_cast<long>(k);
    return Rational(Integer(1), denom);
}

std::vector<Rational> epsilon_schedule(std::size_t d)
{
    if (d < 2) throw InputError("epsilon_schedule needs d >= 2");
    const Rational delta = synthesis_delta(d);
    const Rational step(1, 4 * static_cast<long>(d));
    std::vector<Rational> bounds(d - 1);
    Rational b = delta;
    for (std::size_t m = d - 1; m >= 1; --m) {
        b *= step;
        bounds[m - 1] = b;
    }
    return bounds;
}

UpperEntries random_upper_entries(std::size_t d, std::size_t r, std::mt19937_64& rng, double fraction)
{
    const auto bounds = epsilon_schedule(d);
    UpperEntries u{d, {}};
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<double> block;
        for (std::size_t row = 1; row < d; ++row) {
            const double b = bounds[row - 1].get_d() * fraction;
            std::uniform_real_distribution<double> dist(-b, b);
            for (std::size_t col = row + 1; col <= d; ++col) block.push_back(dist(rng));
        }
        u.blocks.push_back(std::move(block));
    }
    return u;
}

namespace {

std::string where(std::size_t k, std::size_t m)
{
    return "matrix " + std::to_string(k + 1) + ", row " + std::to_string(m);
}

} // namespace

CompletionResult complete_rows(const UpperEntries& upper)
{
    const std::size_t d = upper.d;
    if (d < 2) throw InputError("complete_rows needs d >= 2");
    const std::size_t per = d * (d - 1) / 2;
    const double delta = synthesis_delta(d).get_d();
    CompletionResult out;
    out.tuple.dim = d;
    for (std::size_t k = 0; k < upper.blocks.size(); ++k) {
        const auto& vals = upper.blocks[k];
        if (vals.size() != per) throw InputError("matrix " + std::to_string(k + 1) + " needs " + std::to_string(per) + " upper entries");
        Matrix<double> g(d, d);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) g(i, j) = vals[idx++];

        std::vector<double> residuals;
        for (std::size_t m = 0; m < d; ++m) { // 0-based row
            double h = 0.0;
            for (std::size_t j = m + 1; j < d; ++j) h += g(m, j) * g(m, j);
            // x = u z + w solves the orthogonality system M x = f(z)
            std::vector<double> u(m, 0.0);
            std::vector<double> w(m, 0.0);
            if (m > 0) {
                Matrix<double> M(m, m);
                Matrix<double> rhs(m, 2);
                for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = 0; j < m; ++j) M(i, j) = g(i, j);
                    double tail = 0.0;
                    for (std::size_t j = m + 1; j < d; ++j) tail += g(i, j) * g(m, j);
                    rhs(i, 0) = -g(i, m);
                    rhs(i, 1) = -tail;
                }
                const double detM = determinant(M);
                if (std::fabs(detM) < 1e-12) throw PreconditionError(where(k, m + 1) + ": singular leading block");
                const auto sol = inverse(M) * rhs;
                for (std::size_t i = 0; i < m; ++i) {
                    u[i] = sol(i, 0);
                    w[i] = sol(i, 1);
                }
            }
            double uu = 0.0;
            double uw = 0.0;
            double ww = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                uu += u[i] * u[i];
                uw += u[i] * w[i];
                ww += w[i] * w[i];
            }
            const double a = uu + 1.0;
            const double b = 2.0 * uw;
            const double c = ww + h - 1.0;
            const double disc = b * b - 4.0 * a * c;
            if (disc < 0.0) throw PreconditionError(where(k, m + 1) + ": no real diagonal entry (entries too large)");
            const double sq = std::sqrt(disc);
            // stable pair of roots
            const double q = -0.5 * (b + std::copysign(sq, b == 0.0 ? 1.0 : b));
            double z1 = q / a;
            double z2 = q != 0.0 ? c / q : -z1;
            if (std::fabs(z2 - 1.0) < std::fabs(z1 - 1.0)) std::swap(z1, z2);
            if (!(std::fabs(z1 - 1.0) < 0.5)) {
                throw PreconditionError(where(k, m + 1) + ": no root of the diagonal quadratic near 1 (entries too large)");
            }
            out.roots.push_back({k, m + 1, z1, z2});
            g(m, m) = z1;
            for (std::size_t i = 0; i < m; ++i) g(m, i) = u[i] * z1 + w[i];
            double res = 0.0;
            for (std::size_t i = 0; i <= m; ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += g(i, j) * g(m, j);
                res = std::max(res, std::fabs(s - (i == m ? 1.0 : 0.0)));
            }
            residuals.push_back(res);
        }
        const double dist = inf_norm(g - Matrix<double>::identity(d));
        if (!(dist < delta)) {
            throw PreconditionError("matrix " + std::to_string(k + 1) + ": completion strays " + std::to_string(dist)
                                    + " from the identity, above 1/(2^d d!)");
        }
        out.max_orthonormality_residual = std::max(out.max_orthonormality_residual, inf_norm(g * g.transpose() - Matrix<double>::identity(d)));
        out.max_det_residual = std::max(out.max_det_residual, std::fabs(determinant(g) - 1.0));
        out.max_distance_from_identity = std::max(out.max_distance_from_identity, dist);
        out.row_residuals.push_back(std::move(residuals));
        out.tuple.rotations.push_back(std::move(g));
    }
    return out;
}

} // namespace spherediv
