#ifndef SPHEREDIV_MATRIX_HPP
#define SPHEREDIV_MATRIX_HPP

#include "spherediv/errors.hpp"
#include "spherediv/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spherediv {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an exact field or double.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        const std::size_t c = rows.empty() ? 0 : rows[0].size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw InputError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector<T> column(std::size_t j) const
    {
        Vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o)
    {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend Vector<T> operator*(const Matrix& a, const Vector<T>& v)
    {
        if (a.cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
        Vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

    /// Exact entrywise equality (use inf-norm residuals for floating matrices).
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            if (!is_zero(a.data_[k] - b.data_[k])) return false;
        }
        return true;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>>
    {
        Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<double> to_double_matrix(const Matrix<T>& m)
{
    return m.map([](const T& x) { return to_double(x); });
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b)
{
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b)
{
    return dot<T>(std::span<const T>(a), std::span<const T>(b));
}

template <class T>
double inf_norm(const Matrix<T>& m)
{
    double best = 0.0;
    for (const auto& x : m.data()) best = std::max(best, std::fabs(to_double(x)));
    return best;
}

/// Fraction-free (Bareiss) determinant for exact fields; partial-pivot LU for double.
template <class T>
T determinant(Matrix<T> a)
{
    if (!a.square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    if constexpr (is_exact_v<T>) {
        T prev(1);
        bool negate = false;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (is_zero(a(k, k))) {
                std::size_t p = k + 1;
                while (p < n && is_zero(a(p, k))) ++p;
                if (p == n) return T(0);
                a.swap_rows(k, p);
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
                }
                a(i, k) = T(0);
            }
            prev = a(k, k);
        }
        T det = a(n - 1, n - 1);
        return negate ? T(-det) : det;
    } else {
        T det = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
            }
            if (a(p, k) == 0.0) return 0.0;
            if (p != k) {
                a.swap_rows(k, p);
                det = -det;
            }
            det *= a(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                const T f = a(i, k) / a(k, k);
                for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            }
        }
        return det;
    }
}

template <class T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Floating pivots below tol * max|entry| count as zero.
template <class T>
RowEchelon<T> rref(Matrix<T> a, double tol = 1e-10)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    double threshold = 0.0;
    if constexpr (!is_exact_v<T>) threshold = tol * std::max(1.0, inf_norm(a));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = m;
        if constexpr (is_exact_v<T>) {
            for (std::size_t i = r; i < m; ++i) {
                if (!is_zero(a(i, c))) {
                    p = i;
                    break;
                }
            }
        } else {
            double best = threshold;
            for (std::size_t i = r; i < m; ++i) {
                if (std::fabs(a(i, c)) > best) {
                    best = std::fabs(a(i, c));
                    p = i;
                }
            }
        }
        if (p == m) {
            if constexpr (!is_exact_v<T>) {
                for (std::size_t i = r; i < m; ++i) a(i, c) = 0.0;
            }
            continue;
        }
        a.swap_rows(r, p);
        const T inv = T(1) / a(r, c);
        for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const T f = a(i, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a, double tol = 1e-10)
{
    return rref(a, tol).pivots.size();
}

/// Basis of {x : a x = 0}, one vector per free column (free entry set to 1).
template <class T>
std::vector<Vector<T>> nullspace(const Matrix<T>& a, double tol = 1e-10)
{
    const auto ech = rref(a, tol);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Vector<T>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector<T> x(n, T(0));
        x[f] = T(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = -ech.reduced(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Inverse via Gauss-Jordan; throws PreconditionError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, double tol = 1e-12)
{
    if (!a.square()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    auto ech = rref(std::move(aug), tol);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

} // namespace spherediv

#endif
