#pragma once

#include "rational.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hntau {

// Dense matrix over the rationals. Everything in this project is small
// (fibre dimensions of quiver representations), so no attempt at sparsity.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    const Rat& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_zero() const {
        for (const Rat& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const QMat& o) const { return !(*this == o); }

    QMat operator*(const QMat& o) const {
        assert(cols_ == o.rows_);
        QMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rat& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    QMat operator+(const QMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        QMat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    QMat operator-(const QMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        QMat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    QMat operator*(const Rat& s) const {
        QMat r = *this;
        for (Rat& x : r.data_) x *= s;
        return r;
    }

    QMat transpose() const {
        QMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c) != 0) { p = i; break; }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rat inv = Rat(1) / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Rat f = (*this)(i, c);
                if (f == 0) continue;
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        QMat tmp = *this;
        return static_cast<int>(tmp.rref().size());
    }

    // Basis of the right nullspace, returned as columns of a (cols x nullity) matrix.
    QMat nullspace() const {
        QMat tmp = *this;
        std::vector<int> pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int nullity = cols_ - static_cast<int>(pivots.size());
        QMat basis(cols_, nullity);
        int k = 0;
        for (int fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            basis(fc, k) = 1;
            for (size_t pi = 0; pi < pivots.size(); ++pi)
                basis(pivots[pi], k) = -tmp(static_cast<int>(pi), fc);
            ++k;
        }
        return basis;
    }

    // Indices of a maximal set of linearly independent columns.
    std::vector<int> independent_columns() const {
        QMat tmp = *this;
        return tmp.rref();
    }

    // Solve A x = b; returns one solution or nullopt when inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
        assert(static_cast<int>(b.size()) == rows_);
        QMat aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Rat> x(cols_, Rat(0));
        for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug(static_cast<int>(pi), cols_);
        return x;
    }

    // Solve A X = B columnwise; nullopt when any column is inconsistent.
    std::optional<QMat> solve_matrix(const QMat& B) const {
        assert(B.rows() == rows_);
        QMat X(cols_, B.cols());
        for (int j = 0; j < B.cols(); ++j) {
            std::vector<Rat> b(rows_);
            for (int i = 0; i < rows_; ++i) b[i] = B(i, j);
            auto x = solve(b);
            if (!x) return std::nullopt;
            for (int i = 0; i < cols_; ++i) X(i, j) = (*x)[i];
        }
        return X;
    }

    QMat inverse() const {
        assert(rows_ == cols_);
        auto inv = solve_matrix(identity(rows_));
        if (!inv || ((*this) * *inv) != identity(rows_))
            throw std::invalid_argument("QMat::inverse: singular matrix");
        return *inv;
    }

    bool is_nilpotent() const {
        assert(rows_ == cols_);
        QMat p = *this;
        for (int i = 0; i < rows_; ++i) {
            if (p.is_zero()) return true;
            p = p * (*this);
        }
        return p.is_zero();
    }

    static QMat hstack(const QMat& a, const QMat& b) {
        assert(a.rows() == b.rows());
        QMat r(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
            for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
        }
        return r;
    }

    static QMat vstack(const QMat& a, const QMat& b) {
        assert(a.cols() == b.cols());
        QMat r(a.rows() + b.rows(), a.cols());
        for (int j = 0; j < a.cols(); ++j) {
            for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
            for (int i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
        }
        return r;
    }

    QMat columns(const std::vector<int>& idx) const {
        QMat r(rows_, static_cast<int>(idx.size()));
        for (size_t k = 0; k < idx.size(); ++k)
            for (int i = 0; i < rows_; ++i) r(i, static_cast<int>(k)) = (*this)(i, idx[k]);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

// Extend the (independent) columns of `part` to a basis of the ambient space
// using standard unit vectors; returns the square invertible matrix
// [part | complement].
inline QMat complete_basis(const QMat& part, int ambient_dim) {
    QMat acc = part;
    std::vector<int> extra;
    for (int e = 0; e < ambient_dim && acc.cols() < ambient_dim; ++e) {
        QMat unit(ambient_dim, 1);
        unit(e, 0) = 1;
        QMat cand = QMat::hstack(acc, unit);
        if (cand.rank() == cand.cols()) {
            acc = cand;
            extra.push_back(e);
        }
    }
    if (acc.cols() != ambient_dim)
        throw std::invalid_argument("complete_basis: input columns not independent");
    return acc;
}

}  // namespace hntau
