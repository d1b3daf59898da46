#include "quadlog/correlators.hpp"

#include <sstream>

namespace quadlog {

std::string CorTerm::str(const AtomTable& table) const {
    std::ostringstream os;
    os << "Cor";
    if (!base.is_inf()) os << "_" << base.str(table);
    os << "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) os << ",";
        os << args[i].str(table);
    }
    os << ")";
    return os.str();
}

std::optional<CorTerm> cor_canonicalize(const CorTerm& c) {
    size_t n = c.args.size();
    if (n == 0) return std::nullopt;
    // zero rules
    bool all_equal = true;
    for (auto& a : c.args)
        if (a != c.args.front()) all_equal = false;
    if (all_equal) return std::nullopt;
    if (n >= 3) {
        std::map<Point, int> mult;
        for (auto& a : c.args) mult[a] += 1;
        if (mult.size() == 2) {
            int mn = std::min(mult.begin()->second, std::next(mult.begin())->second);
            if (mn == 1) return std::nullopt; // Cor(x0, x1, ..., x1)
        }
    }
    // lexicographically minimal rotation
    CorTerm best = c;
    for (size_t r = 1; r < n; ++r) {
        CorTerm rot = c;
        std::rotate(rot.args.begin(), rot.args.begin() + r, rot.args.end());
        if (rot.args < best.args) best = rot;
    }
    return best;
}

IIExpr cor_expand(const CorTerm& c) {
    if (!c.base.is_inf()) throw std::invalid_argument("cor_expand: basepoint must be infinity");
    size_t n = c.weight();
    IIExpr out;
    Rational sign = (n + 1) % 2 ? Rational(-1) : Rational(1); // (-1)^{n+1}
    for (size_t i = 1; i <= n; ++i) {
        IITerm t;
        t.start = c.args[0];
        for (size_t k = 0; k < i; ++k) t.middle.push_back(c.args[0]);
        for (size_t k = 1; k + i <= n; ++k) t.middle.push_back(c.args[k]);
        t.end = c.args[n - i + 1];
        out += ii_expr_term(t) * sign;
    }
    return out;
}

CorSeries cor_change_basepoint(const CorTerm& c) {
    CorSeries out;
    size_t n1 = c.args.size();
    for (unsigned long mask = 0; mask < (1ul << n1); ++mask) {
        CorTerm t;
        t.base = Point::inf();
        int s = 0;
        for (size_t i = 0; i < n1; ++i) {
            if (mask & (1ul << i)) {
                t.args.push_back(c.base);
                ++s;
            } else t.args.push_back(c.args[i]);
        }
        auto canon = cor_canonicalize(t);
        if (canon) out.add(*canon, s % 2 ? Rational(-1) : Rational(1));
    }
    return out;
}

void wedge_add(WedgeSum& sum, const CorTerm& a, const CorTerm& b, const Rational& coeff) {
    if (a.weight() == 0 || b.weight() == 0) return;
    auto ca = cor_canonicalize(a), cb = cor_canonicalize(b);
    if (!ca || !cb) return;
    if (*ca == *cb) return;
    if (*cb < *ca) sum.add(CorWedge{*cb, *ca}, -coeff);
    else sum.add(CorWedge{*ca, *cb}, coeff);
}

WedgeSum cor_cobracket(const CorTerm& c) {
    WedgeSum out;
    size_t m = c.args.size(); // m = weight + 1 points on the circle
    if (m < 3) return out;
    for (size_t j = 0; j < m; ++j)
        for (size_t g = 0; g < m; ++g) {
            if (g == j || g == (j + 1) % m) continue;
            CorTerm first, second;
            first.base = c.base;
            second.base = c.base;
            for (size_t k = j; k != g; k = (k + 1) % m) first.args.push_back(c.args[k]);
            for (size_t k = g; k != (j + 1) % m; k = (k + 1) % m) second.args.push_back(c.args[k]);
            wedge_add(out, first, second, Rational(1));
        }
    return out;
}

} // namespace quadlog
