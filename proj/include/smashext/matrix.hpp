#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "smashext/rational.hpp"

namespace smashext {

using QVec = std::vector<Rational>;

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// y += c * x
inline void axpy(QVec& y, const Rational& c, const QVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

// Dense matrix over the rationals.
class MatrixQ {
public:
    MatrixQ() : rows_(0), cols_(0) {}
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatrixQ identity(std::size_t n) {
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    static MatrixQ from_rows(const std::vector<QVec>& rows) {
        if (rows.empty()) return MatrixQ(0, 0);
        MatrixQ m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("MatrixQ::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVec row(std::size_t i) const {
        return QVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    QVec col(std::size_t j) const {
        QVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(std::size_t i, const QVec& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_col(std::size_t j, const QVec& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    MatrixQ transpose() const {
        MatrixQ t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("MatrixQ: size mismatch in product");
        MatrixQ c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend QVec operator*(const MatrixQ& a, const QVec& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("MatrixQ: size mismatch in mat-vec");
        QVec y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
        return y;
    }

    friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("MatrixQ: size mismatch in sum");
        MatrixQ c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }

    friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("MatrixQ: size mismatch in difference");
        MatrixQ c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

    friend MatrixQ operator*(const Rational& c, const MatrixQ& a) {
        MatrixQ r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
        return r;
    }

    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    MatrixQ reduced;
    std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form. Pivoting is deterministic: leftmost nonzero
// column, topmost remaining row.
inline RrefResult rref(MatrixQ m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(sel, j));
        Rational inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const MatrixQ& m) { return rref(m).pivot_columns.size(); }

// Basis of {x : Mx = 0}; one vector per non-pivot column, deterministic.
inline std::vector<QVec> kernel_basis(const MatrixQ& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        QVec v(m.cols());
        v[j] = Rational(1);
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = -r.reduced(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One exact solution of Mx = b, or nullopt if b is outside the column space.
inline std::optional<QVec> solve_linear(const MatrixQ& m, const QVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    MatrixQ aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    QVec x(m.cols());
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
        if (r.pivot_columns[i] == m.cols()) return std::nullopt;  // inconsistent
        x[r.pivot_columns[i]] = r.reduced(i, m.cols());
    }
    return x;
}

// A factored linear system M x = b for many right-hand sides: records the
// row transform T with T*M in rref, so each solve is a mat-vec plus readoff.
class SolvedSystem {
public:
    explicit SolvedSystem(const MatrixQ& m) : cols_(m.cols()) {
        MatrixQ aug(m.rows(), m.cols() + m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
            aug(i, m.cols() + i) = Rational(1);
        }
        // Eliminate only within the first cols_ columns; the identity block
        // accumulates the transform.
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < aug.rows(); ++c) {
            std::size_t sel = r;
            while (sel < aug.rows() && aug(sel, c).is_zero()) ++sel;
            if (sel == aug.rows()) continue;
            if (sel != r)
                for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(r, j), aug(sel, j));
            Rational inv = aug(r, c).inv();
            for (std::size_t j = 0; j < aug.cols(); ++j)
                if (!aug(r, j).is_zero()) aug(r, j) *= inv;
            for (std::size_t i = 0; i < aug.rows(); ++i) {
                if (i == r || aug(i, c).is_zero()) continue;
                Rational f = aug(i, c);
                for (std::size_t j = c; j < aug.cols(); ++j)
                    if (!aug(r, j).is_zero()) aug(i, j) -= f * aug(r, j);
            }
            pivots_.push_back(c);
            ++r;
        }
        rows_ = aug.rows();
        table_ = std::move(aug);
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::optional<QVec> solve(const QVec& b) const {
        if (b.size() != rows_) throw std::invalid_argument("SolvedSystem: rhs size mismatch");
        QVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < rows_; ++k)
                if (!table_(i, cols_ + k).is_zero() && !b[k].is_zero())
                    c[i] += table_(i, cols_ + k) * b[k];
        for (std::size_t i = pivots_.size(); i < rows_; ++i)
            if (!c[i].is_zero()) return std::nullopt;
        QVec x(cols_);
        for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = c[i];
        return x;
    }

    // Alternate particular solution: free columns set to 1 instead of 0.
    // Used to cross-check results that must not depend on the lift chosen.
    std::optional<QVec> solve_alternate(const QVec& b) const {
        auto x0 = solve(b);
        if (!x0) return std::nullopt;
        QVec x = *x0;
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots_) is_pivot[c] = true;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            x[j] += Rational(1);
            for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] -= table_(i, j);
        }
        return x;
    }

private:
    std::size_t cols_, rows_;
    std::vector<std::size_t> pivots_;
    MatrixQ table_;
};

// Incrementally maintained reduced row basis of a span of vectors. Rows are
// kept fully reduced against each other, so membership tests and kernel
// extraction read off directly.
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Returns true if the row enlarged the span.
    bool add_row(QVec v) {
        if (v.size() != width_) throw std::invalid_argument("RowSpace: width mismatch");
        reduce(v);
        std::size_t p = 0;
        while (p < width_ && v[p].is_zero()) ++p;
        if (p == width_) return false;
        Rational inv = v[p].inv();
        for (std::size_t j = p; j < width_; ++j)
            if (!v[j].is_zero()) v[j] *= inv;
        // Back-substitute into existing rows to stay fully reduced.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational f = rows_[i][p];
            if (f.is_zero()) continue;
            for (std::size_t j = p; j < width_; ++j)
                if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
        }
        auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
        pivots_.insert(it, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    void reduce(QVec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational f = v[pivots_[i]];
            if (f.is_zero()) continue;
            const QVec& r = rows_[i];
            for (std::size_t j = pivots_[i]; j < width_; ++j)
                if (!r[j].is_zero()) v[j] -= f * r[j];
        }
    }

    bool contains(QVec v) const {
        reduce(v);
        return smashext::is_zero(v);
    }

    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coordinates not occupied by pivots index a complement basis.
    std::vector<std::size_t> non_pivot_columns() const {
        std::vector<bool> is_pivot(width_, false);
        for (std::size_t c : pivots_) is_pivot[c] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < width_; ++j)
            if (!is_pivot[j]) out.push_back(j);
        return out;
    }

    // Kernel of the matrix whose row space this is.
    std::vector<QVec> kernel() const {
        std::vector<QVec> basis;
        for (std::size_t j : non_pivot_columns()) {
            QVec v(width_);
            v[j] = Rational(1);
            for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = -rows_[i][j];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t width_;
    std::vector<std::size_t> pivots_;
    std::vector<QVec> rows_;
};

}  // namespace smashext
