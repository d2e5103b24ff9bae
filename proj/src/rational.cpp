#include "spherediv/rational.hpp"

#include "spherediv/errors.hpp"

#include <cctype>

namespace spherediv {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s)) throw InputError("not a rational number: '" + std::string(text) + "'");
        return Rational(parse_integer(s));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    const Integer d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational ratio(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational frac(const Rational& q)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

Integer height(const Rational& q)
{
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : Integer(q.get_den());
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p()) throw InputError("integer out of 64-bit range: " + z.get_str());
    return z.get_si();
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace spherediv
