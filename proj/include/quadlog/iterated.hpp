#pragma once

#include "quadlog/words.hpp"

#include <variant>

namespace quadlog {

/// Argument of a formal iterated integral: 0, a nonzero rational function,
/// or the point at infinity.
struct Point {
    enum Kind { Zero = 0, Finite = 1, Inf = 2 };
    Kind kind = Zero;
    FactoredRational value; // meaningful only for Finite

    static Point zero() { return Point{Zero, {}}; }
    static Point inf() { return Point{Inf, {}}; }
    static Point one() { return Point{Finite, FactoredRational::one()}; }
    static Point finite(FactoredRational f) { return Point{Finite, std::move(f)}; }
    static Point rational(const Rational& q) {
        return q.is_zero() ? zero() : finite(FactoredRational(q));
    }

    bool is_zero() const { return kind == Zero; }
    bool is_inf() const { return kind == Inf; }
    /// Literal rational constant (no atoms), including 0.
    std::optional<Rational> literal() const {
        if (kind == Zero) return Rational(0);
        if (kind == Finite && value.is_constant()) return value.constant();
        return std::nullopt;
    }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Finite || a.value == b.value;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == Finite && a.value < b.value;
    }
    std::string str(const AtomTable& table) const;
};

/// Formal iterated integral I(start; middle...; end), weight = |middle|.
struct IITerm {
    Point start;
    std::vector<Point> middle;
    Point end;

    size_t weight() const { return middle.size(); }
    friend bool operator==(const IITerm& a, const IITerm& b) {
        return a.start == b.start && a.end == b.end && a.middle == b.middle;
    }
    friend bool operator<(const IITerm& a, const IITerm& b) {
        if (!(a.start == b.start)) return a.start < b.start;
        if (!(a.end == b.end)) return a.end < b.end;
        return a.middle < b.middle;
    }
    std::string str(const AtomTable& table) const;
};

/// Commutative monomial in iterated integrals (sorted factors). Weight-0 and
/// vanishing factors are handled when monomials are built, not stored.
using IIMono = std::vector<IITerm>;

/// Q-linear combination of monomials: an element of the algebra generated by
/// iterated integrals. The empty monomial is the scalar 1.
using IIExpr = Series<IIMono>;

/// The unit-or-zero normalization of a single term: relation I(a;b)=1 plus
/// endpoint vanishing I(a;...;a)=0 in weight >= 1.
enum class IINorm { Keep, Unit, Vanish };
IINorm ii_normalize(const IITerm& t);

/// Multiply a normalized factor into a monomial; false means the product is 0.
bool ii_mono_mul(IIMono& m, const IITerm& t);

IIExpr ii_expr_one();
IIExpr ii_expr_term(const IITerm& t);
IIExpr ii_expr_mul(const IIExpr& a, const IIExpr& b);

/// Goncharov coproduct of a single term: sum of (arc-product) (x) (subsequence).
using IIPairSeries = Series<std::pair<IIMono, IIMono>>;
IIPairSeries goncharov_coproduct(const IITerm& t);
/// Multiplicative extension to monomials and linear extension to expressions.
IIPairSeries goncharov_coproduct(const IIExpr& e);

/// Sum over cuts of wedge(cut arc, complement), both sides of weight >= 1,
/// the Lambda^2-projection of the reduced coproduct.
struct IIWedge {
    IITerm a, b;
    friend bool operator==(const IIWedge& x, const IIWedge& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const IIWedge& x, const IIWedge& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    }
};
using IIWedgeSeries = Series<IIWedge>;
IIWedgeSeries ii_cobracket(const IITerm& t);

/// Variable substitution map for specialization: var -> rational constant or
/// another variable.
struct Specialization {
    std::map<unsigned, Rational> to_const;
    std::map<unsigned, unsigned> to_var;

    Poly apply(const Poly& p) const;
};

struct SpecializationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Specialize points of an expression. Terms that degenerate per
/// ii_normalize become 0; surviving all-zero-middle terms evaluate to the
/// regularized closed form log^w(q)/w! which is recorded symbolically.
struct SpecValue {
    // product over factors of log^w(q)/w!, q normalized to |q| > 1
    std::vector<std::pair<Rational, int>> log_powers; // (q, w)
    Rational coeff;
};
/// Result of specializing an IIExpr at a full (all-variables) substitution:
/// list of surviving constant terms. Empty list = the expression vanishes.
std::vector<SpecValue> specialize_full(const IIExpr& e, const Specialization& sigma,
                                       const AtomTable& table);

/// Partial specialization keeping symbolic terms (the spec's specialize op).
IIExpr specialize(const IIExpr& e, const Specialization& sigma, AtomTable& table);

} // namespace quadlog
