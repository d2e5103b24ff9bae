#ifndef SPHEREDIV_QUADRATIC_HPP
#define SPHEREDIV_QUADRATIC_HPP

#include "spherediv/rational.hpp"

#include <cstdint>
#include <string>

namespace spherediv {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), D > 1 squarefree.
///
/// A value with b == 0 carries radicand 0 and mixes freely with any field; combining
/// two irrational values over different radicands throws InputError.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(const Rational& a) : a_(a) {} // NOLINT(google-explicit-constructor)
    QuadraticNumber(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a, Rational b, std::int64_t radicand);

    /// sqrt(D) itself.
    static QuadraticNumber root(std::int64_t radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    std::int64_t radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    int sign() const;
    double to_double() const;
    std::string key() const;

    QuadraticNumber operator-() const;
    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o);

    QuadraticNumber inverse() const;

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
    }
    friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }

private:
    void normalize();
    std::int64_t joint_radicand(const QuadraticNumber& o) const;

    Rational a_;
    Rational b_;
    std::int64_t d_ = 0;
};

bool is_squarefree_radicand(std::int64_t d);

} // namespace spherediv

#endif
