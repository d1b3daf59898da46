#include "quadlog/linalg.hpp"

#include <sstream>

namespace quadlog {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.rows_ * a.cols_; ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

bool QMatrix::is_zero() const {
    for (auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row echelon; returns pivot columns. Mutates a copy passed by value users make.
std::vector<size_t> echelon(QMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = m.at(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

size_t QMatrix::rank() const {
    QMatrix m = *this;
    return echelon(m).size();
}

QMatrix QMatrix::kernel() const {
    QMatrix m = *this;
    std::vector<size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix k(cols_, free_cols.size());
    for (size_t f = 0; f < free_cols.size(); ++f) {
        size_t fc = free_cols[f];
        k.at(fc, f) = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], f) = -m.at(r, fc);
    }
    return k;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Inertia signature(const QMatrix& sym) {
    QMatrix m = sym;
    size_t n = m.rows();
    Inertia s;
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; ++step) {
        // find a usable diagonal pivot
        size_t piv = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && !m.at(i, i).is_zero()) { piv = i; break; }
        if (piv == n) {
            // all remaining diagonal zero; find off-diagonal entry
            size_t a = n, b = n;
            for (size_t i = 0; i < n && a == n; ++i) {
                if (done[i]) continue;
                for (size_t j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (!m.at(i, j).is_zero()) { a = i; b = j; break; }
                }
            }
            if (a == n) break; // remaining block is zero
            // congruence u_a -> u_a + u_b makes the diagonal entry 2*m(a,b)
            for (size_t j = 0; j < n; ++j) m.at(a, j) += m.at(b, j);
            for (size_t i = 0; i < n; ++i) m.at(i, a) += m.at(i, b);
            piv = a;
        }
        Rational d = m.at(piv, piv);
        if (d.sign() > 0) ++s.positive;
        else ++s.negative;
        // clear row/column piv against the rest
        for (size_t i = 0; i < n; ++i) {
            if (i == piv || done[i] || m.at(i, piv).is_zero()) continue;
            Rational f = m.at(i, piv) / d;
            for (size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(piv, j);
            for (size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, piv);
        }
        done[piv] = true;
    }
    s.zero = (int)n - s.positive - s.negative;
    return s;
}

} // namespace quadlog
