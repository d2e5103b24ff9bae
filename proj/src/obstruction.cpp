#include "spherediv/obstruction.hpp"

#include "spherediv/json_io.hpp"

namespace spherediv {

int default_n_max(std::size_t d)
{
    if (d <= 3) return 8;
    if (d == 4) return 5;
    return 3;
}

std::string scalar_display(const Rational& x) { return scalar_to_string(x); }
std::string scalar_display(const QuadraticNumber& x) { return scalar_to_string(x); }
std::string scalar_display(const CyclotomicNumber& x) { return scalar_to_string(x); }
std::string scalar_display(double x) { return scalar_to_string(x); }

std::vector<double> random_sphere_point(std::size_t d, std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> x(d);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& c : x) {
            c = g(rng);
            norm += c * c;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (auto& c : x) c /= norm;
    return x;
}

} // namespace spherediv
