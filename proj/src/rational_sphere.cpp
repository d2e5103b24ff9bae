#include "spherediv/rational_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace spherediv {

bool is_unit(const RationalPoint& p)
{
    Rational s(0);
    for (const auto& x : p) s += x * x;
    return s == 1;
}

Integer point_height(const RationalPoint& p)
{
    Integer l(1);
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

namespace {

std::int64_t isqrt(std::int64_t v)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// all integer vectors of length d with squared norm q^2 and gcd(entries, q) = 1
std::vector<std::vector<std::int64_t>> primitive_vectors(int d, std::int64_t q)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(d), 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t rem) {
        if (i == d - 1) {
            const std::int64_t r = isqrt(rem);
            if (r * r != rem) return;
            for (std::int64_t s : {r, -r}) {
                cur[static_cast<std::size_t>(i)] = s;
                std::int64_t g = q;
                for (auto c : cur) g = std::gcd(g, c);
                if (g == 1) out.push_back(cur);
                if (r == 0) break;
            }
            return;
        }
        const std::int64_t bound = isqrt(rem);
        for (std::int64_t a = bound; a >= -bound; --a) {
            cur[static_cast<std::size_t>(i)] = a;
            rec(i + 1, rem - a * a);
        }
    };
    rec(0, q * q);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace

PointEnumerator::PointEnumerator(int dimension, std::uint64_t shuffle_seed)
    : dimension_(dimension), shuffle_seed_(shuffle_seed)
{
    if (dimension < 1) throw InputError("point enumeration needs d >= 1");
}

void PointEnumerator::fill_next_class()
{
    batch_.clear();
    cursor_ = 0;
    while (batch_.empty()) {
        ++height_;
        if (dimension_ == 1 && height_ > 1) throw BudgetExceeded("S^0 has only two points");
        for (const auto& v : primitive_vectors(dimension_, height_)) {
            RationalPoint p;
            p.reserve(v.size());
            for (auto c : v) {
                Rational x(c, height_);
                x.canonicalize();
                p.push_back(x);
            }
            batch_.push_back(std::move(p));
        }
    }
    if (shuffle_seed_ != 0) {
        std::mt19937_64 rng(shuffle_seed_ ^ static_cast<std::uint64_t>(height_));
        std::shuffle(batch_.begin(), batch_.end(), rng);
    }
}

const RationalPoint& PointEnumerator::next()
{
    if (cursor_ >= batch_.size()) fill_next_class();
    return batch_[cursor_++];
}

std::vector<RationalPoint> enumerate_points(int d, std::size_t count, std::uint64_t shuffle_seed)
{
    PointEnumerator e(d, shuffle_seed);
    std::vector<RationalPoint> out;
    out.reserve(count);
    while (out.size() < count) out.push_back(e.next());
    return out;
}

RationalPoint approximate_point(int d, const std::vector<double>& target, double eps, std::int64_t max_denominator)
{
    if (d < 1 || target.size() != static_cast<std::size_t>(d)) throw InputError("target dimension mismatch");
    if (!(eps > 0.0)) throw InputError("eps must be positive");
    double norm = 0.0;
    for (double x : target) norm += x * x;
    norm = std::sqrt(norm);
    if (std::fabs(norm - 1.0) > 1e-6) throw InputError("target is not on the unit sphere");
    std::vector<double> y(target);
    for (auto& x : y) x /= norm;
    if (d == 1) return {Rational(y[0] > 0 ? 1 : -1)};

    // project from the pole farther away from y
    const bool south = y.back() > 0.0;
    const double denom = south ? 1.0 + y.back() : 1.0 - y.back();
    std::vector<double> stereo(y.begin(), y.end() - 1);
    for (auto& s : stereo) s /= denom;

    for (std::int64_t q = 1; q <= max_denominator; q *= 2) {
        std::vector<Rational> x;
        Rational sq(0);
        for (double s : stereo) {
            Rational xi(static_cast<long>(std::llround(s * static_cast<double>(q))), q);
            xi.canonicalize();
            sq += xi * xi;
            x.push_back(xi);
        }
        RationalPoint p;
        const Rational scale = Rational(1) / (sq + 1);
        for (const auto& xi : x) p.push_back(Rational(2) * xi * scale);
        p.push_back(south ? Rational((1 - sq) * scale) : Rational((sq - 1) * scale));
        double dist = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double diff = p[i].get_d() - y[i];
            dist += diff * diff;
        }
        if (std::sqrt(dist) <= eps) return p;
    }
    throw BudgetExceeded("no rational point within eps below denominator " + std::to_string(max_denominator));
}

Matrix<Rational> random_skew(int d, std::mt19937_64& rng, int max_numerator, int max_denominator)
{
    std::uniform_int_distribution<int> num(-max_numerator, max_numerator);
    std::uniform_int_distribution<int> den(1, max_denominator);
    Matrix<Rational> s(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = i + 1; j < s.cols(); ++j) {
            const int p = num(rng);
            const int q = den(rng);
            Rational x(p, q);
            x.canonicalize();
            s(i, j) = x;
            s(j, i) = -x;
        }
    }
    return s;
}

Matrix<Rational> random_cayley_rotation(int d, std::mt19937_64& rng)
{
    return cayley_rotation(random_skew(d, rng));
}

} // namespace spherediv
