#include "spherediv/gegenbauer.hpp"

#include "spherediv/errors.hpp"

#include <cmath>
#include <numbers>

namespace spherediv {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) coeffs_.emplace_back(0);
    trim();
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim()
{
    while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::reflected() const
{
    RationalPolynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
{
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(r));
}

Rational evaluate(const RationalPolynomial& p, const Rational& t)
{
    return p.evaluate_at<Rational>(t);
}

WeightProfile::WeightProfile(int dimension) : dimension_(dimension), even_{Rational(1)}
{
    if (dimension < 2) throw InputError("weight profile needs d >= 2");
}

const Rational& WeightProfile::moment(int k) const
{
    static const Rational zero(0);
    if (k < 0) throw InputError("negative moment index");
    if (k % 2 == 1) return zero;
    const auto j = static_cast<std::size_t>(k / 2);
    while (even_.size() <= j) {
        const long m = 2 * static_cast<long>(even_.size() - 1); // index of the last known moment
        Rational next = even_.back() * ratio(m + 1, m + dimension_);
        even_.push_back(next);
    }
    return even_[j];
}

RationalPolynomial gegenbauer(int d, int n)
{
    if (d < 2) throw InputError("gegenbauer needs d >= 2");
    if (n < 0) throw InputError("gegenbauer needs n >= 0");
    RationalPolynomial prev; // P_{-1} = 0
    RationalPolynomial cur{Rational(1)};
    const RationalPolynomial t{Rational(0), Rational(1)};
    for (int k = 0; k < n; ++k) {
        RationalPolynomial next;
        if (k == 0) {
            // the k = 0 step has leading factor d - 2, which vanishes on the circle
            next = t;
        } else {
            next = (t * cur) * Rational(2 * k + d - 2) - prev * Rational(k);
            next *= Rational(1, k + d - 2);
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::int64_t harmonic_dimension(int d, int n)
{
    if (d < 2 || n < 0) throw InputError("harmonic_dimension needs d >= 2, n >= 0");
    Integer total = binomial(d + n - 1, n);
    if (n >= 2) total -= binomial(d + n - 3, n - 2);
    return to_int64(total);
}

Rational weighted_inner_product(int d, const RationalPolynomial& p, const RationalPolynomial& q)
{
    const WeightProfile w(d);
    Rational s(0);
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if ((i + j) % 2 == 1) continue;
            s += a[i] * b[j] * w.moment(static_cast<int>(i + j));
        }
    }
    return s;
}

double sphere_area(int d)
{
    return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

} // namespace spherediv
