#include "quadlog/iterated.hpp"

#include <algorithm>
#include <sstream>

namespace quadlog {

std::string Point::str(const AtomTable& table) const {
    switch (kind) {
    case Zero: return "0";
    case Inf: return "inf";
    default: return value.str(table);
    }
}

std::string IITerm::str(const AtomTable& table) const {
    std::ostringstream os;
    os << "I(" << start.str(table) << ";";
    for (size_t i = 0; i < middle.size(); ++i) {
        if (i) os << ",";
        os << middle[i].str(table);
    }
    os << ";" << end.str(table) << ")";
    return os.str();
}

IINorm ii_normalize(const IITerm& t) {
    if (t.middle.empty()) return IINorm::Unit;
    if (t.start == t.end) return IINorm::Vanish;
    return IINorm::Keep;
}

bool ii_mono_mul(IIMono& m, const IITerm& t) {
    switch (ii_normalize(t)) {
    case IINorm::Unit: return true;
    case IINorm::Vanish: return false;
    default:
        m.insert(std::upper_bound(m.begin(), m.end(), t), t);
        return true;
    }
}

IIExpr ii_expr_one() { return IIExpr::unit(IIMono{}); }

IIExpr ii_expr_term(const IITerm& t) {
    IIMono m;
    if (!ii_mono_mul(m, t)) return IIExpr{};
    return IIExpr::unit(m);
}

IIExpr ii_expr_mul(const IIExpr& a, const IIExpr& b) {
    IIExpr r;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) {
            IIMono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            r.add(m, ca * cb);
        }
    return r;
}

IIPairSeries goncharov_coproduct(const IITerm& t) {
    IIPairSeries out;
    size_t n = t.weight();
    std::vector<Point> pts;
    pts.push_back(t.start);
    pts.insert(pts.end(), t.middle.begin(), t.middle.end());
    pts.push_back(t.end);
    // subsequences 0 = i0 < i1 < ... < ir < i_{r+1} = n+1 over middles
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<size_t> idx{0};
        for (size_t j = 1; j <= n; ++j)
            if (mask & (1ul << (j - 1))) idx.push_back(j);
        idx.push_back(n + 1);

        IIMono left;
        bool dead = false;
        for (size_t p = 0; p + 1 < idx.size() && !dead; ++p) {
            if (idx[p + 1] == idx[p] + 1) continue; // empty arc, weight 0
            IITerm arc;
            arc.start = pts[idx[p]];
            arc.end = pts[idx[p + 1]];
            arc.middle.assign(pts.begin() + idx[p] + 1, pts.begin() + idx[p + 1]);
            if (!ii_mono_mul(left, arc)) dead = true;
        }
        if (dead) continue;
        IITerm sub;
        sub.start = pts[idx.front()];
        sub.end = pts[idx.back()];
        for (size_t p = 1; p + 1 < idx.size(); ++p) sub.middle.push_back(pts[idx[p]]);
        IIMono right;
        if (!ii_mono_mul(right, sub)) continue;
        out.add({left, right}, Rational(1));
    }
    return out;
}

IIPairSeries goncharov_coproduct(const IIExpr& e) {
    IIPairSeries out;
    for (auto& [mono, c] : e.terms()) {
        IIPairSeries acc;
        acc.add({IIMono{}, IIMono{}}, Rational(1));
        for (auto& f : mono) {
            IIPairSeries df = goncharov_coproduct(f);
            IIPairSeries next;
            for (auto& [p1, c1] : acc.terms())
                for (auto& [p2, c2] : df.terms()) {
                    IIMono l = p1.first, r = p1.second;
                    l.insert(l.end(), p2.first.begin(), p2.first.end());
                    r.insert(r.end(), p2.second.begin(), p2.second.end());
                    std::sort(l.begin(), l.end());
                    std::sort(r.begin(), r.end());
                    next.add({l, r}, c1 * c2);
                }
            acc = std::move(next);
        }
        out += acc * c;
    }
    return out;
}

IIWedgeSeries ii_cobracket(const IITerm& t) {
    IIWedgeSeries out;
    size_t n = t.weight();
    if (n < 2) return out;
    std::vector<Point> pts;
    pts.push_back(t.start);
    pts.insert(pts.end(), t.middle.begin(), t.middle.end());
    pts.push_back(t.end);
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = i + 2; j <= n + 1; ++j) {
            if (i == 0 && j == n + 1) continue; // full cut: weight-0 complement
            IITerm cut;
            cut.start = pts[i];
            cut.end = pts[j];
            cut.middle.assign(pts.begin() + i + 1, pts.begin() + j);
            if (ii_normalize(cut) != IINorm::Keep) continue;
            IITerm rest;
            rest.start = pts.front();
            rest.end = pts.back();
            for (size_t k = 1; k <= n; ++k)
                if (k <= i || k >= j) rest.middle.push_back(pts[k]);
            if (ii_normalize(rest) != IINorm::Keep) continue;
            out.add(IIWedge{cut, rest}, Rational(1));
        }
    return out;
}

Poly Specialization::apply(const Poly& p) const {
    Poly q = p;
    // substitute variable renames first, then constants
    for (auto& [v, w] : to_var) q = q.subst(v, Poly::var(w));
    for (auto& [v, c] : to_const) q = q.subst(v, Poly::constant(c));
    return q;
}

namespace {

// Specialize one point: Zero stays, Finite evaluates atom by atom.
// Returns Zero/Finite point, throws on pole or 0/0.
Point specialize_point(const Point& pt, const Specialization& sigma, const AtomTable& table) {
    if (pt.kind != Point::Finite) return pt;
    long vanish_order = 0;
    Rational cst = pt.value.constant();
    std::vector<std::pair<Poly, int>> surviving;
    for (auto& [id, e] : pt.value.factors()) {
        Poly s = sigma.apply(table.poly(id));
        if (s.is_zero()) vanish_order += e;
        else surviving.emplace_back(s, e);
    }
    if (vanish_order > 0) return Point::zero();
    if (vanish_order < 0) throw SpecializationError("pole in specialization");
    // no vanishing atoms: value is the substituted product (constant if all folded)
    Poly num(cst), den{Poly(Rational(1))};
    for (auto& [s, e] : surviving) {
        Poly& side = e > 0 ? num : den;
        for (int k = 0; k < std::abs(e); ++k) side *= s;
    }
    if (num.is_constant() && den.is_constant())
        return Point::rational(num.constant_value() / den.constant_value());
    // symbolic content survives; caller decides how to refactor
    throw SpecializationError("partial specialization requires refactoring path");
}

} // namespace

std::vector<SpecValue> specialize_full(const IIExpr& e, const Specialization& sigma,
                                       const AtomTable& table) {
    Series<std::vector<std::pair<Rational, int>>> acc;
    for (auto& [mono, c] : e.terms()) {
        std::vector<std::pair<Rational, int>> logs;
        Rational coeff = c;
        bool dead = false;
        for (auto& f : mono) {
            IITerm s;
            s.start = specialize_point(f.start, sigma, table);
            s.end = specialize_point(f.end, sigma, table);
            for (auto& m : f.middle) s.middle.push_back(specialize_point(m, sigma, table));
            if (ii_normalize(s) == IINorm::Vanish || s.start == s.end) { dead = true; break; }
            // surviving factor must have all-zero middles: regularized log power
            bool all_zero = true;
            for (auto& m : s.middle)
                if (!m.is_zero()) all_zero = false;
            if (!all_zero)
                throw SpecializationError("specialized term needs regularization: middle survives");
            int w = (int)s.weight();
            auto ls = s.start.literal();
            auto le = s.end.literal();
            if (!ls || !le) throw SpecializationError("specialization left symbolic endpoint");
            Rational q;
            if (ls->is_zero()) q = *le;                // log^w(e)/w!
            else if (le->is_zero()) {                  // (-1)^w log^w(s)/w!
                q = *ls;
                if (w % 2) coeff = -coeff;
            } else q = *le / *ls;                      // log^w(e/s)/w!
            q = q.abs();                                // torsion
            if (q.is_one()) { dead = true; break; }     // log(1) = 0
            if (q < Rational(1)) {                      // log(1/q) = -log q
                q = q.inv();
                if (w % 2) coeff = -coeff;
            }
            Rational fact(1);
            for (int k = 2; k <= w; ++k) fact *= Rational(k);
            coeff /= fact;
            logs.emplace_back(q, w);
        }
        if (dead) continue;
        std::sort(logs.begin(), logs.end(), [](auto& a, auto& b) {
            if (a.second != b.second) return a.second < b.second;
            return a.first < b.first;
        });
        acc.add(logs, coeff);
    }
    std::vector<SpecValue> out;
    for (auto& [logs, c] : acc.terms()) out.push_back(SpecValue{logs, c});
    return out;
}

IIExpr specialize(const IIExpr& e, const Specialization& sigma, AtomTable& table) {
    IIExpr out;
    for (auto& [mono, c] : e.terms()) {
        IIMono m;
        bool dead = false;
        for (auto& f : mono) {
            IITerm s;
            auto spec_pt = [&](const Point& pt) -> Point {
                if (pt.kind != Point::Finite) return pt;
                // refactor through the table so symbolic values stay canonical
                auto [num, den] = pt.value.to_ratio(table);
                Poly n2 = sigma.apply(num), d2 = sigma.apply(den);
                if (n2.is_zero()) return Point::zero();
                if (d2.is_zero()) throw SpecializationError("pole in specialization");
                return Point::finite(FactoredRational::from_ratio(n2, d2, table));
            };
            s.start = spec_pt(f.start);
            s.end = spec_pt(f.end);
            for (auto& mid : f.middle) s.middle.push_back(spec_pt(mid));
            if (!ii_mono_mul(m, s)) { dead = true; break; }
        }
        if (!dead) out.add(m, c);
    }
    return out;
}

} // namespace quadlog
