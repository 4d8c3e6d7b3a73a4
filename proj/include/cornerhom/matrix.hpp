#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cornerhom/field.hpp"

namespace cornerhom {

/// Dense row-major matrix over an exact field F (Fp or Rationals).
/// All elimination is deterministic: pivots are the first nonzero entry in
/// column order, so every downstream basis is reproducible bit for bit.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix() : field_(), rows_(0), cols_(0) {}
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero())
    {
    }

    static Matrix identity(F field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Elem& at(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (field_.is_zero(x))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, o.at(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in sum");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = field_.add(r.a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in difference");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
        return r;
    }

    Matrix scaled(const Elem& c) const
    {
        Matrix r = *this;
        for (auto& x : r.a_)
            x = field_.mul(x, c);
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in apply");
        std::vector<Elem> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j)))
                    r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    std::vector<Elem> column(std::size_t j) const
    {
        std::vector<Elem> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<Elem>& v)
    {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            at(i, j) = v[i];
    }

    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(F field, std::size_t rows, const std::vector<std::vector<Elem>>& cols)
    {
        Matrix m(field, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.set_column(j, cols[j]);
        return m;
    }

    /// Kronecker product: (A ⊗ B)(i*rB+k, j*cB+l) = A(i,j) B(k,l).
    static Matrix kronecker(const Matrix& a, const Matrix& b)
    {
        Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a.field_.is_zero(a.at(i, j)))
                    continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) =
                            a.field_.mul(a.at(i, j), b.at(k, l));
            }
        return r;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row-echelon form via Gauss-Jordan elimination, first-nonzero pivoting.
template <class F>
RrefResult<F> rref(const Matrix<F>& m)
{
    const F& f = m.field();
    Matrix<F> r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t piv = row;
        while (piv < r.rows() && f.is_zero(r.at(piv, col)))
            ++piv;
        if (piv == r.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(row, j), r.at(piv, j));
        auto invp = f.inv(r.at(row, col));
        for (std::size_t j = col; j < r.cols(); ++j)
            r.at(row, j) = f.mul(r.at(row, j), invp);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || f.is_zero(r.at(i, col)))
                continue;
            auto c = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult<F>{std::move(r), pivots.size(), std::move(pivots)};
}

/// Columns form a basis of the right null space {x : m x = 0}.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m)
{
    const F& f = m.field();
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;
    std::size_t nullity = m.cols() - rr.rank;
    Matrix<F> k(f, m.cols(), nullity);
    std::size_t col = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        k.at(j, col) = f.one();
        for (std::size_t i = 0; i < rr.rank; ++i)
            k.at(rr.pivots[i], col) = f.neg(rr.reduced.at(i, j));
        ++col;
    }
    return k;
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    return rref(m).rank;
}

/// Solve a x = b; empty exactly when b is not in the column space of a.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& a,
                                                   const std::vector<typename F::Elem>& b)
{
    const F& f = a.field();
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto rr = rref(aug);
    for (std::size_t i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] == a.cols())
            return std::nullopt;  // inconsistent
    std::vector<typename F::Elem> x(a.cols(), f.zero());
    for (std::size_t i = 0; i < rr.rank; ++i)
        x[rr.pivots[i]] = rr.reduced.at(i, a.cols());
    return x;
}

/// Row-reduced basis of a span of vectors, with membership and residue tests.
/// Vectors are stored as the rows of an rref matrix.
template <class F>
class SpanBasis {
public:
    using Elem = typename F::Elem;

    SpanBasis() : field_(), ambient_(0) {}
    explicit SpanBasis(F field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    /// Build from a list of spanning vectors.
    static SpanBasis from_vectors(F field, std::size_t ambient,
                                  const std::vector<std::vector<Elem>>& vecs)
    {
        SpanBasis s(field, ambient);
        Matrix<F> m(field, vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                m.at(i, j) = vecs[i][j];
        auto rr = rref(m);
        s.pivots_ = rr.pivots;
        s.rows_ = Matrix<F>(field, rr.rank, ambient);
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                s.rows_.at(i, j) = rr.reduced.at(i, j);
        return s;
    }

    static SpanBasis from_columns(const Matrix<F>& m)
    {
        std::vector<std::vector<Elem>> vecs;
        for (std::size_t j = 0; j < m.cols(); ++j)
            vecs.push_back(m.column(j));
        return from_vectors(m.field(), m.rows(), vecs);
    }

    std::size_t dim() const { return rows_.rows(); }
    std::size_t ambient() const { return ambient_; }
    const Matrix<F>& basis_rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduce v modulo the span; zero residue means membership.
    std::vector<Elem> residue(const std::vector<Elem>& v) const
    {
        std::vector<Elem> r = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            const Elem& c = r[pivots_[i]];
            if (field_.is_zero(c))
                continue;
            Elem cc = c;
            for (std::size_t j = 0; j < ambient_; ++j)
                r[j] = field_.sub(r[j], field_.mul(cc, rows_.at(i, j)));
        }
        return r;
    }

    bool contains(const std::vector<Elem>& v) const
    {
        auto r = residue(v);
        for (const auto& x : r)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    bool contains_all(const SpanBasis& other) const
    {
        for (std::size_t i = 0; i < other.dim(); ++i) {
            std::vector<Elem> row(ambient_);
            for (std::size_t j = 0; j < ambient_; ++j)
                row[j] = other.rows_.at(i, j);
            if (!contains(row))
                return false;
        }
        return true;
    }

    bool same_span(const SpanBasis& other) const
    {
        return dim() == other.dim() && contains_all(other);
    }

private:
    F field_;
    std::size_t ambient_;
    Matrix<F> rows_{};
    std::vector<std::size_t> pivots_;
};

}  // namespace cornerhom
