#include "spherediv/cyclotomic.hpp"

#include "spherediv/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace spherediv {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

bool is_zero_poly(const Poly& p)
{
    for (const auto& c : p) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

Poly mul(const Poly& a, const Poly& b)
{
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// quotient and remainder of a / b over Q, b nonzero
std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {Poly{Rational(0)}, a};
    Poly q(a.size() - db, Rational(0));
    for (std::size_t i = a.size(); i-- > db;) {
        const Rational c = a[i] / b[db];
        q[i - db] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(db == 0 ? 1 : db);
    trim(a);
    trim(q);
    return {q, a};
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(int order)
{
    if (order < 1) throw InputError("cyclotomic order must be positive");
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    Poly num(static_cast<std::size_t>(order) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<std::size_t>(order)] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        const auto phi_d = cyclotomic_polynomial(d);
        Poly den(phi_d.begin(), phi_d.end());
        num = divmod(num, den).first;
    }
    std::vector<Integer> out;
    out.reserve(num.size());
    for (const auto& c : num) out.push_back(c.get_num());
    return out;
}

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicField>> fields;
    std::lock_guard lock(mutex);
    auto& slot = fields[order];
    if (!slot) slot = std::make_shared<const CyclotomicField>(order);
    return slot;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const
{
    const std::size_t deg = modulus_.size() - 1;
    // Phi_N is monic: eliminate from the top
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) continue;
        const Rational c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * Rational(modulus_[j]);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (field_) {
        coeffs_ = field_->reduce(std::move(coeffs_));
    } else if (coeffs_.size() != 1) {
        throw InputError("a rational constant carries exactly one coefficient");
    }
}

CyclotomicNumber CyclotomicNumber::zeta_power(const std::shared_ptr<const CyclotomicField>& field, long k)
{
    const long n = field->order();
    long e = k % n;
    if (e < 0) e += n;
    Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return {field, std::move(p)};
}

CyclotomicNumber CyclotomicNumber::cos_turn(const std::shared_ptr<const CyclotomicField>& field, long k)
{
    return (zeta_power(field, k) + zeta_power(field, -k)) * CyclotomicNumber(Rational(1, 2));
}

CyclotomicNumber CyclotomicNumber::sin_turn(const std::shared_ptr<const CyclotomicField>& field, long k)
{
    const long n = field->order();
    if (n % 4 != 0) throw InputError("sine values need a cyclotomic order divisible by 4");
    // 1/i = zeta^(3N/4)
    const long shift = 3 * n / 4;
    return (zeta_power(field, k + shift) - zeta_power(field, -k + shift)) * CyclotomicNumber(Rational(1, 2));
}

bool CyclotomicNumber::is_zero() const
{
    return is_zero_poly(coeffs_);
}

double CyclotomicNumber::real_part() const
{
    if (!field_) return coeffs_[0].get_d();
    double s = 0.0;
    const double n = field_->order();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        s += coeffs_[k].get_d() * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / n);
    }
    return s;
}

double CyclotomicNumber::imag_part() const
{
    if (!field_) return 0.0;
    double s = 0.0;
    const double n = field_->order();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        s += coeffs_[k].get_d() * std::sin(2.0 * std::numbers::pi * static_cast<double>(k) / n);
    }
    return s;
}

std::string CyclotomicNumber::key() const
{
    // a rational constant and its promoted form must share a key
    std::size_t last = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) last = k;
    }
    if (last == 0) return coeffs_[0].get_str();
    std::string s = "z" + std::to_string(field_->order());
    for (std::size_t k = 0; k <= last; ++k) s += ":" + coeffs_[k].get_str();
    return s;
}

void CyclotomicNumber::promote_to(const std::shared_ptr<const CyclotomicField>& field)
{
    if (field_ || !field) return;
    Poly p(static_cast<std::size_t>(field->degree()), Rational(0));
    if (!p.empty()) p[0] = coeffs_[0];
    field_ = field;
    coeffs_ = std::move(p);
}

std::shared_ptr<const CyclotomicField> CyclotomicNumber::joint_field(const CyclotomicNumber& o) const
{
    if (!field_) return o.field_;
    if (!o.field_ || o.field_->order() == field_->order()) return field_;
    throw InputError("mixed cyclotomic orders " + std::to_string(field_->order()) + " and "
                     + std::to_string(o.field_->order()));
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o)
{
    const auto f = joint_field(o);
    promote_to(f);
    CyclotomicNumber other = o;
    other.promote_to(f);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o)
{
    return *this += -o;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o)
{
    if (!field_ && !o.field_) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    if (!o.field_) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    if (!field_) {
        const Rational c = coeffs_[0];
        *this = o;
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    const auto f = joint_field(o);
    coeffs_ = f->reduce(mul(coeffs_, o.coeffs_));
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in a cyclotomic field");
    if (!field_) return CyclotomicNumber(Rational(1) / coeffs_[0]);
    // extended Euclid: s * a + t * Phi = gcd (a nonzero constant, Phi irreducible)
    const auto& m = field_->modulus();
    Poly r0(m.begin(), m.end());
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0{Rational(0)};
    Poly s1{Rational(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return {field_, s1};
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o)
{
    return *this *= o.inverse();
}

} // namespace spherediv
