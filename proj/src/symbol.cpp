#include "quadlog/symbol.hpp"

#include <functional>

namespace quadlog {

std::optional<FactoredRational> slot_normalize(const FactoredRational& f) {
    FactoredRational g = f;
    if (g.constant().sign() < 0)
        g = FactoredRational::mul(FactoredRational(Rational(-1)), g, 1);
    if (g.is_torsion()) return std::nullopt;
    return g;
}

SymbolTensor symbol_shuffle(const SymbolTensor& a, const SymbolTensor& b) {
    SymbolTensor out;
    for (auto& [sa, ca] : a.terms())
        for (auto& [sb, cb] : b.terms()) {
            // interleavings of sa and sb
            size_t n = sa.size(), m = sb.size();
            std::vector<unsigned long> masks;
            // mask bit set => take from sa at that output position
            std::function<void(Slots&, size_t, size_t)> rec = [&](Slots& cur, size_t i, size_t j) {
                if (i == n && j == m) {
                    out.add(cur, ca * cb);
                    return;
                }
                if (i < n) {
                    cur.push_back(sa[i]);
                    rec(cur, i + 1, j);
                    cur.pop_back();
                }
                if (j < m) {
                    cur.push_back(sb[j]);
                    rec(cur, i, j + 1);
                    cur.pop_back();
                }
            };
            Slots cur;
            rec(cur, 0, 0);
        }
    return out;
}

SymbolTensor dynkin_project(const SymbolTensor& t) {
    SymbolTensor out;
    for (auto& [slots, c] : t.terms()) {
        // B(a w) = a (x) B(w) - B(w) (x) a, B(a) = a
        std::function<SymbolTensor(size_t)> brack = [&](size_t i) -> SymbolTensor {
            SymbolTensor r;
            if (i + 1 == slots.size()) {
                r.add(Slots{slots[i]}, Rational(1));
                return r;
            }
            SymbolTensor inner = brack(i + 1);
            for (auto& [w, cw] : inner.terms()) {
                Slots pre{slots[i]};
                pre.insert(pre.end(), w.begin(), w.end());
                r.add(pre, cw);
                Slots post = w;
                post.push_back(slots[i]);
                r.add(post, -cw);
            }
            return r;
        };
        if (slots.empty()) continue; // scalar part has no Lie content
        out += brack(0) * c;
    }
    return out;
}

FactoredRational SymbolEngine::point_diff(const Point& a, const Point& b) {
    if (a.kind == Point::Inf || b.kind == Point::Inf)
        throw InfinityInSymbol("infinity reached symbol computation");
    if (a.kind == Point::Zero) {
        if (b.kind == Point::Zero) throw std::logic_error("point_diff(0,0)");
        return b.value; // sign is torsion
    }
    if (b.kind == Point::Zero) return a.value;
    auto [na, da] = a.value.to_ratio(table_);
    auto [nb, db] = b.value.to_ratio(table_);
    Poly num = na * db - nb * da;
    Poly den = da * db;
    if (num.is_zero()) throw std::logic_error("point_diff of equal points");
    return FactoredRational::from_ratio(num, den, table_);
}

FactoredRational SymbolEngine::reduce1(const IITerm& t) {
    const Point& a = t.start;
    const Point& b = t.middle.at(0);
    const Point& c = t.end;
    if (b == a) return point_diff(c, b);
    if (c == b) return point_diff(b, a).inv();
    return FactoredRational::mul(point_diff(c, b), point_diff(b, a), -1);
}

SymbolTensor SymbolEngine::of_term(const IITerm& t) {
    switch (ii_normalize(t)) {
    case IINorm::Unit: return SymbolTensor::unit(Slots{});
    case IINorm::Vanish: return SymbolTensor{};
    default: break;
    }
    if (table_.epoch() != epoch_seen_) {
        memo_.clear();
        epoch_seen_ = table_.epoch();
    }
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;

    SymbolTensor out;
    if (t.weight() == 1) {
        auto s = slot_normalize(reduce1(t));
        if (s) out.add(Slots{*s}, Rational(1));
    } else {
        size_t n = t.weight();
        std::vector<Point> pts;
        pts.push_back(t.start);
        pts.insert(pts.end(), t.middle.begin(), t.middle.end());
        pts.push_back(t.end);
        // (1, n-1) component: drop one middle point
        for (size_t j = 1; j <= n; ++j) {
            IITerm arc{pts[j - 1], {pts[j]}, pts[j + 1]};
            if (ii_normalize(arc) == IINorm::Vanish) continue;
            auto s = slot_normalize(reduce1(arc));
            if (!s) continue;
            IITerm rest;
            rest.start = t.start;
            rest.end = t.end;
            for (size_t k = 1; k <= n; ++k)
                if (k != j) rest.middle.push_back(pts[k]);
            SymbolTensor sub = of_term(rest);
            for (auto& [slots, c] : sub.terms()) {
                Slots grown{*s};
                grown.insert(grown.end(), slots.begin(), slots.end());
                out.add(grown, c);
            }
        }
    }
    memo_.emplace(t, out);
    return out;
}

SymbolTensor SymbolEngine::of_mono(const IIMono& m) {
    SymbolTensor acc = SymbolTensor::unit(Slots{});
    for (auto& f : m) acc = symbol_shuffle(acc, of_term(f));
    return acc;
}

SymbolTensor SymbolEngine::of_expr(const IIExpr& e) {
    SymbolTensor acc;
    for (auto& [m, c] : e.terms()) acc += of_mono(m) * c;
    return acc;
}

WedgeSymbol wedge_symbol(SymbolEngine& se, const IIExpr& a, const IIExpr& b, const Rational& coeff) {
    WedgeSymbol out;
    SymbolTensor sa = dynkin_project(se.of_expr(a));
    SymbolTensor sb = dynkin_project(se.of_expr(b));
    for (auto& [wa, ca] : sa.terms())
        for (auto& [wb, cb] : sb.terms()) {
            Slots ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            out.add(SplitSlots{wa.size(), ab}, coeff * ca * cb);
            Slots ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            out.add(SplitSlots{wb.size(), ba}, -(coeff * ca * cb));
        }
    return out;
}

} // namespace quadlog
