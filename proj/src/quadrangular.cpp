#include "quadlog/quadrangular.hpp"

#include <functional>
#include <sstream>

namespace quadlog {

std::vector<AdmissibleSequence> enumerate_admissible(int n, int k) {
    std::vector<AdmissibleSequence> out;
    int len = n + k + 1;
    std::vector<int> seq;
    std::function<void(int)> rec = [&](int min_val) {
        if ((int)seq.size() == len) {
            std::vector<bool> pair_hit(n + 1, false);
            std::vector<int> even_count(n + 1, 0);
            int evens = 0;
            for (int v : seq) {
                pair_hit[v / 2] = true;
                if (v % 2 == 0) {
                    if (++even_count[v / 2] > 1) return;
                    ++evens;
                }
            }
            for (int i = 0; i <= n; ++i)
                if (!pair_hit[i]) return;
            out.push_back(AdmissibleSequence{seq, evens % 2 ? -1 : 1});
            return;
        }
        for (int v = min_val; v <= 2 * n + 1; ++v) {
            seq.push_back(v);
            rec(v);
            seq.pop_back();
        }
    };
    rec(0);
    return out;
}

CorSeries qli(int n, int k, const std::vector<Point>& points) {
    CorSeries out;
    Rational pref = (n + 1) % 2 ? Rational(-1) : Rational(1);
    for (auto& s : enumerate_admissible(n, k)) {
        CorTerm c;
        for (int idx : s.indices) c.args.push_back(points.at(idx));
        auto canon = cor_canonicalize(c);
        if (canon) out.add(*canon, pref * Rational(s.sign));
    }
    return out;
}

CorSeries qli_signed(int n, int k, const std::vector<Point>& points, int s) {
    if (s % 2 == 0) return qli(n, k, points);
    std::vector<Point> rot(points.begin() + 1, points.end());
    rot.push_back(points.front());
    return -qli(n, k, rot);
}

CorSeries qli_polygon(const AlternatingPolygon& p, int k, AtomTable& table) {
    int n = (int)p.size() / 2 - 1;
    std::vector<Point> pts;
    for (int l : p.labels)
        pts.push_back(Point::finite(FactoredRational::from_poly(Poly::var((unsigned)l), table)));
    if (p.parity() == 0) return qli(n, k, pts);
    return qli_signed(n, k, pts, 1);
}

VerificationReport verify_qli_coproduct(int n, int k, AtomTable& table) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = "qli-coproduct";
    {
        std::ostringstream os;
        os << "n=" << n << " k=" << k;
        rep.instance = os.str();
    }
    std::vector<Point> pts;
    for (int i = 0; i <= 2 * n + 1; ++i)
        pts.push_back(Point::finite(FactoredRational::from_poly(Poly::var((unsigned)i), table)));

    WedgeSum lhs;
    for (auto& [c, coeff] : qli(n, k, pts).terms())
        lhs += cor_cobracket(c) * coeff;

    WedgeSum rhs;
    for (int i = 0; i <= 2 * n + 1; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j) {
            if ((j - i) % 2 == 0) continue;
            int s = (j - i - 1) / 2;
            std::vector<Point> outer(pts.begin(), pts.begin() + i + 1);
            outer.insert(outer.end(), pts.begin() + j, pts.end());
            std::vector<Point> inner(pts.begin() + i, pts.begin() + j + 1);
            for (int k1 = 0; k1 <= k; ++k1) {
                int k2 = k - k1;
                if ((n - s) + k1 < 1 || s + k2 < 1) continue;
                CorSeries a = qli(n - s, k1, outer);
                CorSeries b = qli_signed(s, k2, inner, i);
                for (auto& [ca, wa] : a.terms())
                    for (auto& [cb, wb] : b.terms())
                        wedge_add(rhs, ca, cb, wa * wb);
            }
        }

    WedgeSum diff = lhs - rhs;
    rep.pass = diff.is_zero();
    for (auto& [w, c] : diff.terms()) {
        if (rep.residual_terms.size() >= 12) break;
        rep.residual_terms.push_back(c.str() + " * " + w.a.str(table) + " ^ " + w.b.str(table));
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

namespace {

Point specialize_simple_point(const Point& pt, const Specialization& sigma, AtomTable& table) {
    if (pt.kind != Point::Finite) return pt;
    auto [num, den] = pt.value.to_ratio(table);
    Poly n2 = sigma.apply(num), d2 = sigma.apply(den);
    if (n2.is_zero()) return Point::zero();
    return Point::finite(FactoredRational::from_ratio(n2, d2, table));
}

} // namespace

VerificationReport verify_quadrangulation_formula(const AlternatingPolygon& p, int k,
                                                  AtomTable& table) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = "quadrangulation-formula";
    {
        std::ostringstream os;
        os << p.str() << " k=" << k;
        rep.instance = os.str();
    }
    SymbolEngine se(table);
    CorSeries lhs = qli_polygon(p, k, table);

    // RHS element: Li_k of every word of T_P as iterated integrals
    WSeries T = formal_T(p, table);
    std::vector<std::pair<Rational, IITerm>> rhs_terms;
    for (auto& [w, c] : T.terms()) {
        auto [sg, t] = li_iiterm(k, w);
        if (ii_normalize(t) == IINorm::Keep) rhs_terms.emplace_back(c * sg, t);
    }

    // Lambda^2 symbol difference of the cobrackets
    WedgeSymbol diff;
    unsigned long ep = table.epoch();
    for (int pass = 0; pass < 8; ++pass) {
        diff = WedgeSymbol{};
        for (auto& [c, coeff] : lhs.terms())
            for (auto& [w, wc] : cor_cobracket(c).terms())
                diff += wedge_symbol(se, cor_expand(w.a), cor_expand(w.b), coeff * wc);
        for (auto& [coeff, t] : rhs_terms)
            for (auto& [w, wc] : ii_cobracket(t).terms())
                diff -= wedge_symbol(se, ii_expr_term(w.a), ii_expr_term(w.b), coeff * wc);
        if (table.epoch() == ep) break;
        ep = table.epoch();
    }
    rep.pass = diff.is_zero();
    if (!diff.is_zero()) {
        std::ostringstream os;
        os << "cobracket symbol difference: " << diff.size() << " surviving terms";
        rep.residual_terms.push_back(os.str());
    }

    // specializations at the collision divisor
    Specialization sigma;
    for (size_t i = 0; i + 1 < p.size(); i += 2)
        sigma.to_var[(unsigned)p.labels[i + 1]] = (unsigned)p.labels[i];

    CorSeries lhs_spec;
    for (auto& [c, coeff] : lhs.terms()) {
        CorTerm s;
        s.base = c.base;
        for (auto& a : c.args) s.args.push_back(specialize_simple_point(a, sigma, table));
        auto canon = cor_canonicalize(s);
        if (canon) lhs_spec.add(*canon, coeff);
    }
    if (!lhs_spec.is_zero()) {
        rep.pass = false;
        rep.residual_terms.push_back("QLi-side specialization survives with " +
                                     std::to_string(lhs_spec.size()) + " correlators");
    }
    IIExpr rhs_expr;
    for (auto& [coeff, t] : rhs_terms) rhs_expr += ii_expr_term(t) * coeff;
    try {
        auto survivors = specialize_full(rhs_expr, sigma, table);
        if (!survivors.empty()) {
            rep.pass = false;
            rep.residual_terms.push_back("Li-side specialization survives");
        }
    } catch (const SpecializationError& err) {
        rep.pass = false;
        rep.residual_terms.push_back(std::string("Li-side specialization: ") + err.what());
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

CorSeries universality_expand(int n, bool odd_case, const Point& a,
                              const std::vector<Point>& points) {
    size_t cnt = points.size(); // 2n+2 for odd case, 2n+1 for even case
    CorSeries out;
    for (unsigned long mask = 0; mask < (1ul << cnt); ++mask) {
        std::vector<Point> sub = points;
        int s = 0;
        for (size_t i = 0; i < cnt; ++i)
            if (mask & (1ul << i)) {
                sub[i] = a;
                ++s;
            }
        CorSeries q;
        if (odd_case) q = qli(n, n + 1, sub);
        else {
            std::vector<Point> with_a = sub;
            with_a.push_back(a);
            q = qli(n, n, with_a);
        }
        out += q * (s % 2 ? Rational(-1) : Rational(1));
    }
    return out;
}

VerificationReport verify_universality(int n, bool odd_case, AtomTable& table) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = "universality";
    {
        std::ostringstream os;
        os << "n=" << n << (odd_case ? " odd" : " even");
        rep.instance = os.str();
    }
    size_t cnt = odd_case ? (size_t)(2 * n + 2) : (size_t)(2 * n + 1);
    std::vector<Point> pts;
    for (size_t i = 0; i < cnt; ++i)
        pts.push_back(Point::finite(FactoredRational::from_poly(Poly::var((unsigned)i), table)));
    Point a = Point::finite(FactoredRational::from_poly(Poly::var((unsigned)cnt), table));

    CorSeries got = universality_expand(n, odd_case, a, pts);
    CorTerm target;
    target.base = a;
    target.args = pts;
    CorSeries expected = cor_change_basepoint(target);

    CorSeries diff = got - expected;
    rep.pass = diff.is_zero();
    for (auto& [c, coeff] : diff.terms()) {
        if (rep.residual_terms.size() >= 12) break;
        rep.residual_terms.push_back(coeff.str() + " * " + c.str(table));
    }
    rep.wall_time_ms = sw.ms();
    return rep;
}

} // namespace quadlog
