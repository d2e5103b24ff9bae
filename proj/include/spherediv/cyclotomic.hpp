#ifndef SPHEREDIV_CYCLOTOMIC_HPP
#define SPHEREDIV_CYCLOTOMIC_HPP

#include "spherediv/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace spherediv {

/// The cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N), presented as Q[x] / Phi_N(x).
class CyclotomicField {
public:
    /// Shared instance per order; thread-safe.
    static std::shared_ptr<const CyclotomicField> get(int order);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    /// Phi_N, ascending coefficients, monic.
    const std::vector<Integer>& modulus() const { return modulus_; }

    /// Reduces a polynomial (ascending coefficients) modulo Phi_N; result has exactly degree() entries.
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

    explicit CyclotomicField(int order);

private:
    int order_;
    std::vector<Integer> modulus_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, ascending.
std::vector<Integer> cyclotomic_polynomial(int order);

/// Element of Q(zeta_N). A value without a field is a rational constant and mixes with
/// any field; combining elements of two different fields throws InputError.
class CyclotomicNumber {
public:
    CyclotomicNumber() : coeffs_{Rational(0)} {}
    CyclotomicNumber(const Rational& c) : coeffs_{c} {} // NOLINT(google-explicit-constructor)
    CyclotomicNumber(long c) : coeffs_{Rational(c)} {}  // NOLINT(google-explicit-constructor)
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

    /// zeta_N^k for any integer k.
    static CyclotomicNumber zeta_power(const std::shared_ptr<const CyclotomicField>& field, long k);
    /// cos(2 pi k / N) and sin(2 pi k / N); sine needs 4 | N.
    static CyclotomicNumber cos_turn(const std::shared_ptr<const CyclotomicField>& field, long k);
    static CyclotomicNumber sin_turn(const std::shared_ptr<const CyclotomicField>& field, long k);

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    /// Coefficients over 1, x, ..., x^(phi-1) (a single entry for rational constants).
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    double real_part() const;
    double imag_part() const;
    double to_double() const { return real_part(); }
    std::string key() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o);

    CyclotomicNumber inverse() const;

    friend CyclotomicNumber operator+(CyclotomicNumber x, const CyclotomicNumber& y) { return x += y; }
    friend CyclotomicNumber operator-(CyclotomicNumber x, const CyclotomicNumber& y) { return x -= y; }
    friend CyclotomicNumber operator*(CyclotomicNumber x, const CyclotomicNumber& y) { return x *= y; }
    friend CyclotomicNumber operator/(CyclotomicNumber x, const CyclotomicNumber& y) { return x /= y; }
    friend bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) { return (x - y).is_zero(); }

private:
    void promote_to(const std::shared_ptr<const CyclotomicField>& field);
    std::shared_ptr<const CyclotomicField> joint_field(const CyclotomicNumber& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

} // namespace spherediv

#endif
