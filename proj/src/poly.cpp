#include "quadlog/poly.hpp"

#include <algorithm>
#include <sstream>

namespace quadlog {

bool operator<(const Poly& a, const Poly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    MonoGreater mg;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (mg(ia->first, ib->first)) return true;
        if (mg(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

Rational Poly::eval(const std::vector<Rational>& xs) const {
    Rational acc(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= xs.at(i).pow(m[i]);
        acc += t;
    }
    return acc;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& xs) const {
    std::complex<double> acc = 0.0;
    for (auto& [m, c] : terms_) {
        std::complex<double> t = c.to_double();
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= xs.at(i);
        acc += t;
    }
    return acc;
}

Poly Poly::subst(unsigned i, const Poly& value) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        unsigned e = i < m.size() ? m[i] : 0;
        Mono rest = m;
        if (i < rest.size()) rest[i] = 0;
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        Poly t;
        t.add_term(rest, c);
        for (unsigned k = 0; k < e; ++k) t *= value;
        out += t;
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? "-" : "+");
            if (a.sign() < 0) a = -a;
        }
        bool has_vars = false;
        for (unsigned e : m)
            if (e) has_vars = true;
        if (!has_vars || !a.is_one()) os << a.str();
        bool star = !has_vars || !a.is_one();
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (star) os << "*";
            os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

std::pair<Rational, Poly> poly_canonicalize(const Poly& p) {
    if (p.is_zero()) return {Rational(0), Poly()};
    // integer content over common denominator
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(boost::multiprecision::abs(c.num())));
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    }
    Rational content(num_gcd, den_lcm);
    if (p.leading_coeff().sign() < 0) content = -content;
    Poly prim = p * content.inv();
    return {content, prim};
}

bool poly_try_divide(const Poly& a, const Poly& b, Poly& quot) {
    if (b.is_zero()) return false;
    Poly rem = a;
    Poly q;
    const Mono& lb = b.leading_mono();
    const Rational& cb = b.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& lr = rem.leading_mono();
        Mono d(std::max(lr.size(), lb.size()), 0);
        for (size_t i = 0; i < d.size(); ++i) {
            unsigned er = i < lr.size() ? lr[i] : 0;
            unsigned eb = i < lb.size() ? lb[i] : 0;
            if (er < eb) return false;
            d[i] = er - eb;
        }
        Poly t;
        t.add_term(d, rem.leading_coeff() / cb);
        q += t;
        rem -= t * b;
    }
    quot = q;
    return true;
}

namespace {

// View p as univariate in variable v: coefficient polys indexed by degree.
std::vector<Poly> univariate_view(const Poly& p, unsigned v) {
    std::vector<Poly> coeffs(p.degree(v) + 1);
    for (auto& [m, c] : p.terms()) {
        unsigned e = v < m.size() ? m[v] : 0;
        Mono rest = m;
        if (v < rest.size()) rest[v] = 0;
        coeffs[e].add_term(rest, c);
    }
    return coeffs;
}

Poly from_univariate(const std::vector<Poly>& coeffs, unsigned v) {
    Poly p;
    for (size_t e = 0; e < coeffs.size(); ++e) {
        Poly xe = Poly::var(v, (long)e);
        if (e == 0) xe = Poly(Rational(1));
        p += coeffs[e] * xe;
    }
    return p;
}

Poly content_in(const Poly& p, unsigned v);

// Pseudo-remainder of a by b in variable v (both nonzero, deg_v a >= deg_v b).
Poly pseudo_rem(const Poly& a, const Poly& b, unsigned v) {
    auto bc = univariate_view(b, v);
    long db = (long)bc.size() - 1;
    Poly lead_b = bc.back();
    Poly rem = a;
    long da = rem.degree(v);
    while (!rem.is_zero() && (da = rem.degree(v)) >= db) {
        auto rc = univariate_view(rem, v);
        Poly lead_r = rc.back();
        Poly shifted = (da - db) > 0 ? Poly::var(v, da - db) : Poly(Rational(1));
        rem = rem * lead_b - b * lead_r * shifted;
    }
    return rem;
}

Poly gcd_rec(Poly a, Poly b) {
    if (a.is_zero()) return poly_canonicalize(b).second;
    if (b.is_zero()) return poly_canonicalize(a).second;
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    int va = a.main_var(), vb = b.main_var();
    unsigned v = (unsigned)std::min(va, vb);
    if ((int)v != va || (int)v != vb) {
        // one of them is free of v: gcd divides the content of the other
        const Poly& with_v = ((int)v == va) ? a : b;
        const Poly& other = ((int)v == va) ? b : a;
        return gcd_rec(content_in(with_v, v), other);
    }
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cont_gcd = gcd_rec(ca, cb);
    Poly pa, pb;
    poly_try_divide(a, ca, pa);
    poly_try_divide(b, cb, pb);
    // primitive PRS
    while (!pb.is_zero()) {
        if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
        if (pb.is_zero()) break;
        Poly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) { pb = Poly(); break; }
        if (r.degree(v) == 0) {
            // nonzero remainder free of v: primitive parts are coprime in v
            pa = Poly(Rational(1));
            pb = Poly();
            break;
        }
        Poly rc = content_in(r, v);
        Poly rp;
        poly_try_divide(r, rc, rp);
        pb = rp;
    }
    Poly g = poly_canonicalize(pa).second;
    if (g.is_constant()) return poly_canonicalize(cont_gcd).second;
    return poly_canonicalize(g * cont_gcd).second;
}

Poly content_in(const Poly& p, unsigned v) {
    auto coeffs = univariate_view(p, v);
    Poly g;
    for (auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? poly_canonicalize(c).second : gcd_rec(g, c);
        if (g.is_constant()) return Poly(Rational(1));
    }
    return g;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

} // namespace quadlog
