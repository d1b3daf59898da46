#pragma once

#include "quadlog/rational.hpp"

#include <vector>

namespace quadlog {

/// Dense exact matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows_(r), cols_(c), data_(r * c) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    static QMatrix identity(size_t n);
    QMatrix transposed() const;
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    QMatrix operator*(const Rational& c) const;
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    size_t rank() const;
    /// Basis of the right null space, as columns of the returned matrix.
    QMatrix kernel() const;
    bool is_zero() const;

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct Inertia {
    int positive = 0, negative = 0, zero = 0;
};

/// Sylvester inertia of a symmetric matrix via congruent diagonalization.
Inertia signature(const QMatrix& sym);

} // namespace quadlog
