#pragma once

#include "quadlog/symbol.hpp"

namespace quadlog {

/// Hodge correlator Cor_a(x0,...,xn); args form a cycle, weight = n. The
/// basepoint defaults to infinity.
struct CorTerm {
    Point base = Point::inf();
    std::vector<Point> args;

    size_t weight() const { return args.empty() ? 0 : args.size() - 1; }
    friend bool operator==(const CorTerm& a, const CorTerm& b) {
        return a.base == b.base && a.args == b.args;
    }
    friend bool operator<(const CorTerm& a, const CorTerm& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return a.args < b.args;
    }
    std::string str(const AtomTable& table) const;
};

using CorSeries = Series<CorTerm>;

/// Cyclic canonical rotation plus the zero rules: all arguments equal, or a
/// single argument against >= 2 copies of another. Nullopt means the term is 0.
std::optional<CorTerm> cor_canonicalize(const CorTerm& c);

/// Expansion of an infinity-based correlator into iterated integrals:
/// Cor(x0..xn) = (-1)^{n+1} sum_i I(x0; x0 wedge i, x1..x_{n-i}; x_{n-i+1}).
IIExpr cor_expand(const CorTerm& c);

/// Reduce Cor_a to infinity-based correlators by inserting the basepoint in
/// place of argument subsets with alternating signs.
CorSeries cor_change_basepoint(const CorTerm& c);

/// Antisymmetric pair of correlators, ordered canonically with sign.
struct CorWedge {
    CorTerm a, b;
    friend bool operator==(const CorWedge& x, const CorWedge& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const CorWedge& x, const CorWedge& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    }
};
using WedgeSum = Series<CorWedge>;

/// Add c * (a ^ b) in canonical antisymmetric form; weight-0 sides dropped.
void wedge_add(WedgeSum& sum, const CorTerm& a, const CorTerm& b, const Rational& coeff);

/// Cut-sum cobracket over the cyclic order; both sides of weight >= 1.
WedgeSum cor_cobracket(const CorTerm& c);

} // namespace quadlog
