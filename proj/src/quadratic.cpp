#include "spherediv/quadratic.hpp"

#include "spherediv/errors.hpp"

#include <cmath>

namespace spherediv {

bool is_squarefree_radicand(std::int64_t d)
{
    if (d < 2) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand)
{
    if (sgn(b_) != 0 && !is_squarefree_radicand(d_)) {
        throw InputError("radicand must be a squarefree integer > 1, got " + std::to_string(d_));
    }
    normalize();
}

QuadraticNumber QuadraticNumber::root(std::int64_t radicand)
{
    return {Rational(0), Rational(1), radicand};
}

void QuadraticNumber::normalize()
{
    if (sgn(b_) == 0) d_ = 0;
}

std::int64_t QuadraticNumber::joint_radicand(const QuadraticNumber& o) const
{
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw InputError("mixed radicands " + std::to_string(d_) + " and " + std::to_string(o.d_));
}

int QuadraticNumber::sign() const
{
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // a and b*sqrt(D) have opposite signs: compare squares
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const
{
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticNumber::key() const
{
    if (d_ == 0) return a_.get_str();
    return a_.get_str() + "+" + b_.get_str() + "r" + std::to_string(d_);
}

QuadraticNumber QuadraticNumber::operator-() const
{
    QuadraticNumber r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o)
{
    d_ = joint_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o)
{
    d_ = joint_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o)
{
    const std::int64_t d = joint_radicand(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    normalize();
    return *this;
}

QuadraticNumber QuadraticNumber::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt D)");
    const Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    QuadraticNumber r;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    r.d_ = d_;
    r.normalize();
    return r;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o)
{
    return *this *= o.inverse();
}

} // namespace spherediv
