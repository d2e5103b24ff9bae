#include "spherediv/rotation_tuple.hpp"

#include <numeric>

namespace spherediv {

std::string_view mode_name(const RotationTuple& t)
{
    return std::visit([](const auto& x) { return mode_name<typename std::decay_t<decltype(x)>::scalar_type>(); }, t);
}

std::size_t tuple_dimension(const RotationTuple& t)
{
    return std::visit([](const auto& x) { return x.dim; }, t);
}

std::size_t tuple_size(const RotationTuple& t)
{
    return std::visit([](const auto& x) { return x.size(); }, t);
}

ValidationReport validate_tuple(const RotationTuple& t, const FloatingTolerances& tol)
{
    return std::visit([&](const auto& x) { return validate_tuple(x, tol); }, t);
}

Tuple<double> to_floating(const RotationTuple& t)
{
    return std::visit([](const auto& x) { return to_floating(x); }, t);
}

int cyclotomic_order_for(const std::vector<Rational>& turns)
{
    long n = 4;
    for (const auto& t : turns) {
        const Integer& den = t.get_den();
        if (!den.fits_slong_p() || den > 100000) throw InputError("turn denominator too large: " + den.get_str());
        n = std::lcm(n, den.get_si());
        if (n > 100000) throw InputError("common turn denominator too large");
    }
    return static_cast<int>(n);
}

Matrix<CyclotomicNumber> plane_rotation(std::size_t dim, std::size_t i, std::size_t j, const Rational& turn,
                                        const std::shared_ptr<const CyclotomicField>& field)
{
    if (i >= dim || j >= dim || i == j) throw InputError("invalid rotation plane");
    const Rational steps = frac(turn) * Rational(field->order());
    if (steps.get_den() != 1) throw InputError("turn " + turn.get_str() + " is not a multiple of 1/" + std::to_string(field->order()));
    const long k = steps.get_num().get_si();
    auto m = Matrix<CyclotomicNumber>::identity(dim);
    const auto c = CyclotomicNumber::cos_turn(field, k);
    const auto s = CyclotomicNumber::sin_turn(field, k);
    m(i, i) = c;
    m(i, j) = -s;
    m(j, i) = s;
    m(j, j) = c;
    return m;
}

Tuple<CyclotomicNumber> circle_tuple(const std::vector<Rational>& turns)
{
    const auto field = CyclotomicField::get(cyclotomic_order_for(turns));
    Tuple<CyclotomicNumber> t{2, {}};
    for (const auto& a : turns) t.rotations.push_back(plane_rotation(2, 0, 1, a, field));
    return t;
}

} // namespace spherediv
