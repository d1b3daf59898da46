#pragma once

#include "quadlog/rational.hpp"

#include <complex>
#include <map>
#include <vector>

namespace quadlog {

/// Exponent vector; trailing zeros trimmed so equal monomials compare equal.
using Mono = std::vector<unsigned>;

/// Pure lex order with x0 dominant; "greater" monomial = lex-leading.
struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        size_t n = std::max(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            unsigned ea = i < a.size() ? a[i] : 0;
            unsigned eb = i < b.size() ? b[i] : 0;
            if (ea != eb) return ea > eb;
        }
        return false;
    }
};

/// Sparse multivariate polynomial over Q in variables x0, x1, ...
/// Invariant: no zero coefficients stored, exponent vectors trimmed.
class Poly {
public:
    using Terms = std::map<Mono, Rational, MonoGreater>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    static Poly var(unsigned i, long exp = 1) {
        Poly p;
        Mono m(i + 1, 0);
        m[i] = (unsigned)exp;
        p.terms_[m] = Rational(1);
        return p;
    }
    static Poly constant(const Rational& c) { return Poly(c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const Rational& leading_coeff() const { return terms_.begin()->second; }
    const Mono& leading_mono() const { return terms_.begin()->first; }

    long total_degree() const {
        long d = -1;
        for (auto& [m, c] : terms_) {
            long s = 0;
            for (unsigned e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    /// Degree in variable i.
    long degree(unsigned i) const {
        long d = 0;
        for (auto& [m, c] : terms_)
            if (i < m.size()) d = std::max(d, (long)m[i]);
        return d;
    }
    /// Smallest variable index that occurs, or -1 for constants.
    int main_var() const {
        int mv = -1;
        for (auto& [m, c] : terms_)
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0 && (mv < 0 || (int)i < mv)) { mv = (int)i; break; }
        return mv;
    }

    void add_term(const Mono& m_in, const Rational& c) {
        if (c.is_zero()) return;
        Mono m = m_in;
        while (!m.empty() && m.back() == 0) m.pop_back();
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(std::move(m), c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Mono m(std::max(ma.size(), mb.size()), 0);
                for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b);

    Rational eval(const std::vector<Rational>& xs) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& xs) const;
    /// Substitute variable i by polynomial value.
    Poly subst(unsigned i, const Poly& value) const;

    std::string str() const;

private:
    Terms terms_;
};

/// Canonical split p = content * primitive: primitive has integer coprime
/// coefficients and positive lex-leading coefficient. Zero maps to (0, 0).
std::pair<Rational, Poly> poly_canonicalize(const Poly& p);

/// Exact division; returns false if remainder nonzero.
bool poly_try_divide(const Poly& a, const Poly& b, Poly& quot);

/// Multivariate gcd (primitive PRS, recursive in the main variable), canonical.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace quadlog
