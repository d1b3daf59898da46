#include "quadlog/atoms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace quadlog {

int AtomTable::insert_primitive(const Poly& prim) {
    for (size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i].retired() && entries_[i].poly == prim) return (int)i;
    entries_.push_back(Entry{prim, {}});
    return (int)entries_.size() - 1;
}

void AtomTable::resolve(int id, int exp, std::vector<std::pair<int, int>>& out) const {
    const Entry& e = entries_[id];
    if (!e.retired()) {
        out.emplace_back(id, exp);
        return;
    }
    for (auto& [sub, se] : e.remap) resolve(sub, se * exp, out);
}

std::pair<Rational, std::vector<std::pair<int, int>>> AtomTable::factorize(const Poly& p) {
    std::lock_guard<std::mutex> lock(mu_);
    if (p.is_zero()) throw std::domain_error("AtomTable: cannot factor zero");
    auto [content, prim] = poly_canonicalize(p);
    std::map<int, int> exps;

    // worklist of primitive factors still to place
    std::vector<Poly> work{prim};
    while (!work.empty()) {
        Poly q = work.back();
        work.pop_back();
        if (q.is_constant()) continue;

        // trial division by live atoms
        bool progressed = true;
        while (progressed && !q.is_constant()) {
            progressed = false;
            for (size_t i = 0; i < entries_.size() && !q.is_constant(); ++i) {
                if (entries_[i].retired()) continue;
                Poly quot;
                while (poly_try_divide(q, entries_[i].poly, quot)) {
                    exps[(int)i] += 1;
                    auto [c2, p2] = poly_canonicalize(quot);
                    content *= c2;
                    q = p2;
                    progressed = true;
                    if (q.is_constant()) break;
                }
            }
        }
        if (q.is_constant()) {
            content *= q.constant_value();
            continue;
        }

        // gcd refinement against live atoms
        bool split = false;
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].retired()) continue;
            Poly g = poly_gcd(q, entries_[i].poly);
            if (g.is_constant()) continue;
            if (g == entries_[i].poly) continue; // handled by trial division above
            // atom i splits as g * (atom/g); retire it
            Poly cof;
            poly_try_divide(entries_[i].poly, g, cof);
            auto [cc, cofp] = poly_canonicalize(cof);
            // cc must be 1 since both are primitive canonical, but fold anyway
            int gid = insert_primitive(g);
            int cid = insert_primitive(cofp);
            entries_[i].remap = {{gid, 1}, {cid, 1}};
            ++epoch_;
            // re-express exponents already granted to atom i
            auto it = exps.find((int)i);
            if (it != exps.end()) {
                int e = it->second;
                exps.erase(it);
                exps[gid] += e;
                exps[cid] += e;
                content *= cc.pow(e);
            }
            work.push_back(q);
            split = true;
            break;
        }
        if (split) continue;

        // coprime to everything: new atom
        int id = insert_primitive(q);
        exps[id] += 1;
    }

    std::vector<std::pair<int, int>> out;
    for (auto& [id, e] : exps)
        if (e != 0) out.emplace_back(id, e);
    return {content, out};
}

FactoredRational FactoredRational::from_poly(const Poly& p, AtomTable& table) {
    auto [c, fs] = table.factorize(p);
    FactoredRational f;
    f.constant_ = c;
    f.factors_ = fs;
    return f;
}

FactoredRational FactoredRational::from_ratio(const Poly& num, const Poly& den, AtomTable& table) {
    FactoredRational n = from_poly(num, table);
    FactoredRational d = from_poly(den, table);
    return mul(n, d, -1);
}

FactoredRational FactoredRational::mul(const FactoredRational& a, const FactoredRational& b, long pow_b) {
    FactoredRational r;
    r.constant_ = a.constant_ * b.constant_.pow(pow_b);
    std::map<int, long> exps;
    for (auto& [id, e] : a.factors_) exps[id] += e;
    for (auto& [id, e] : b.factors_) exps[id] += (long)e * pow_b;
    for (auto& [id, e] : exps)
        if (e != 0) r.factors_.emplace_back(id, (int)e);
    return r;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
    return FactoredRational::mul(a, b, 1);
}

FactoredRational FactoredRational::inv() const { return mul(one(), *this, -1); }

FactoredRational FactoredRational::pow(long e) const { return mul(one(), *this, e); }

void FactoredRational::refresh(const AtomTable& table) {
    bool stale = false;
    for (auto& [id, e] : factors_)
        if (table.retired(id)) { stale = true; break; }
    if (!stale) return;
    std::vector<std::pair<int, int>> resolved;
    for (auto& [id, e] : factors_) table.resolve(id, e, resolved);
    std::map<int, int> exps;
    for (auto& [id, e] : resolved) exps[id] += e;
    factors_.clear();
    for (auto& [id, e] : exps)
        if (e != 0) factors_.emplace_back(id, e);
}

std::optional<Rational> FactoredRational::eval(const std::vector<Rational>& xs, const AtomTable& table) const {
    Rational acc = constant_;
    for (auto& [id, e] : factors_) {
        Rational v = table.poly(id).eval(xs);
        if (v.is_zero()) return std::nullopt;
        acc *= v.pow(e);
    }
    return acc;
}

std::complex<double> FactoredRational::eval(const std::vector<std::complex<double>>& xs, const AtomTable& table) const {
    std::complex<double> acc = constant_.to_double();
    for (auto& [id, e] : factors_) {
        std::complex<double> v = table.poly(id).eval(xs);
        std::complex<double> p = 1.0;
        for (int k = 0; k < std::abs(e); ++k) p *= v;
        acc = e > 0 ? acc * p : acc / p;
    }
    return acc;
}

std::pair<Poly, Poly> FactoredRational::to_ratio(const AtomTable& table) const {
    Poly num(constant_), den(Rational(1));
    for (auto& [id, e] : factors_) {
        Poly& target = e > 0 ? num : den;
        for (int k = 0; k < std::abs(e); ++k) target *= table.poly(id);
    }
    return {num, den};
}

FactoredRational FactoredRational::subst_var(unsigned var, unsigned replacement, AtomTable& table) const {
    FactoredRational r(constant_);
    for (auto& [id, e] : factors_) {
        Poly sub = table.poly(id).subst(var, Poly::var(replacement));
        if (sub.is_zero()) throw std::domain_error("subst_var: atom vanished");
        r = mul(r, from_poly(sub, table), e);
    }
    return r;
}

std::string FactoredRational::str(const AtomTable& table) const {
    std::ostringstream os;
    bool printed = false;
    if (!constant_.is_one() || factors_.empty()) {
        os << constant_.str();
        printed = true;
    }
    for (auto& [id, e] : factors_) {
        if (printed) os << "*";
        os << "(" << table.poly(id).str() << ")";
        if (e != 1) os << "^" << e;
        printed = true;
    }
    return os.str();
}

std::string FactoredRational::json(const AtomTable& table) const {
    std::ostringstream os;
    os << "{\"const\":\"" << constant_.str() << "\",\"factors\":[";
    bool first = true;
    for (auto& [id, e] : factors_) {
        if (!first) os << ",";
        os << "{\"atom\":\"" << table.poly(id).str() << "\",\"exp\":" << e << "}";
        first = false;
    }
    os << "]}";
    return os.str();
}

} // namespace quadlog
