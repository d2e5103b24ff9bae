#ifndef SPHEREDIV_GEGENBAUER_HPP
#define SPHEREDIV_GEGENBAUER_HPP

#include "spherediv/rational.hpp"
#include "spherediv/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace spherediv {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Trailing zeros are trimmed; the zero polynomial is the single coefficient 0.
class RationalPolynomial {
public:
    RationalPolynomial() : coeffs_{Rational(0)} {}
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    RationalPolynomial(std::initializer_list<Rational> coeffs) : RationalPolynomial(std::vector<Rational>(coeffs)) {}

    static RationalPolynomial monomial(int degree, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && sgn(coeffs_[0]) == 0; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Horner evaluation in any scalar kind.
    template <class T>
    T evaluate_at(const T& t) const
    {
        T acc = from_rational<T>(coeffs_.back());
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
            acc = acc * t;
            acc += from_rational<T>(coeffs_[i]);
        }
        return acc;
    }

    /// p(-t).
    RationalPolynomial reflected() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation.
Rational evaluate(const RationalPolynomial& p, const Rational& t);

/// Normalized moments mu_k = m_k / m_0 of the weight (1 - t^2)^((d-3)/2) on [-1, 1].
class WeightProfile {
public:
    explicit WeightProfile(int dimension);

    int dimension() const { return dimension_; }
    /// mu_k; zero for odd k.
    const Rational& moment(int k) const;

private:
    int dimension_;
    mutable std::vector<Rational> even_; // even_[j] = mu_{2j}
};

/// Gegenbauer polynomial P_n for S^(d-1), normalized to P_n(1) = 1, built by the
/// three-term recurrence (n + d - 2) P_{n+1} = (2n + d - 2) t P_n - n P_{n-1}.
RationalPolynomial gegenbauer(int d, int n);

/// Dimension N_n of the degree-n spherical harmonics on S^(d-1).
std::int64_t harmonic_dimension(int d, int n);

/// Exact pairing sum_{i,j} p_i q_j mu_{i+j} (the weighted L2 product divided by m_0).
Rational weighted_inner_product(int d, const RationalPolynomial& p, const RationalPolynomial& q);

/// Surface area 2 pi^(d/2) / Gamma(d/2) of S^(d-1); floating only.
double sphere_area(int d);

} // namespace spherediv

#endif
