#include "quadlog/polygons.hpp"

#include <functional>
#include <sstream>

namespace quadlog {

AlternatingPolygon AlternatingPolygon::parse(const std::string& csv) {
    AlternatingPolygon p;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) p.labels.push_back(std::stoi(tok));
    }
    if (!p.valid()) throw std::invalid_argument("not an alternating polygon: " + csv);
    return p;
}

bool AlternatingPolygon::valid() const {
    if (labels.size() < 2 || labels.size() % 2) return false;
    for (size_t i = 0; i + 1 < labels.size(); ++i) {
        if (labels[i + 1] <= labels[i]) return false;
        if ((labels[i + 1] - labels[i]) % 2 == 0) return false;
    }
    for (int l : labels)
        if (l < 0) return false;
    return true;
}

std::string AlternatingPolygon::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ",";
        os << labels[i];
    }
    os << ")";
    return os.str();
}

FactoredRational cross_ratio4(int a, int b, int c, int d, AtomTable& table) {
    auto diff = [&](int i, int j) {
        // x_i - x_j, canonical atom is x_min - x_max
        Poly p = Poly::var(i) - Poly::var(j);
        return FactoredRational::from_poly(p, table);
    };
    FactoredRational r = diff(a, b) * diff(c, d);
    r = FactoredRational::mul(r, diff(a, d) * diff(c, b), -1);
    return r;
}

FactoredRational cross_ratio(const AlternatingPolygon& p, AtomTable& table) {
    size_t n2 = p.size();
    if (n2 == 2) return FactoredRational::one();
    FactoredRational r = FactoredRational::one();
    for (size_t i = 1; i + 1 < n2; i += 2)
        r = r * cross_ratio4(p.labels[0], p.labels[i], p.labels[i + 1], p.labels[i + 2], table);
    return p.parity() == 0 ? r : r.inv();
}

std::vector<Quadrangulation> enumerate_quadrangulations(const AlternatingPolygon& p) {
    size_t L = p.size();
    if (L == 2) return {Quadrangulation{}};
    std::vector<Quadrangulation> out;
    // root quadrangle (pos 0, i, j, L-1), i odd position, j even position
    for (size_t i = 1; i < L - 1; i += 2)
        for (size_t j = i + 1; j < L - 1; j += 2) {
            AlternatingPolygon root = p.select({0, i, j, L - 1});
            auto qs1 = enumerate_quadrangulations(p.slice(0, i));
            auto qs2 = enumerate_quadrangulations(p.slice(i, j));
            auto qs3 = enumerate_quadrangulations(p.slice(j, L - 1));
            for (auto& q1 : qs1)
                for (auto& q2 : qs2)
                    for (auto& q3 : qs3) {
                        Quadrangulation q{root};
                        q.insert(q.end(), q1.begin(), q1.end());
                        q.insert(q.end(), q2.begin(), q2.end());
                        q.insert(q.end(), q3.begin(), q3.end());
                        out.push_back(std::move(q));
                    }
        }
    return out;
}

std::vector<AltSubpolygon> alt_subpolygons(const AlternatingPolygon& p) {
    size_t L = p.size();
    std::vector<AltSubpolygon> out;
    // selected positions 0 = i0 < i1 < ... < i_{2r+1} = L-1, alternating parity
    std::vector<size_t> pos{0};
    std::function<void(size_t)> rec = [&](size_t next) {
        bool need_odd = pos.size() % 2 == 1; // position parity alternates along S
        for (size_t i = next; i + 1 < L; ++i) {
            if ((i % 2 == 1) != need_odd) continue;
            pos.push_back(i);
            rec(i + 1);
            pos.pop_back();
        }
        if (need_odd) {
            pos.push_back(L - 1);
            AltSubpolygon s;
            s.positions = pos;
            s.sub = p.select(pos);
            for (size_t t = 0; t + 1 < pos.size(); ++t)
                s.components.push_back(p.slice(pos[t], pos[t + 1]));
            out.push_back(std::move(s));
            pos.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<Decomposition> enumerate_decompositions(const AlternatingPolygon& p) {
    if (p.size() == 2) return {Decomposition{}};
    std::vector<Decomposition> out;
    for (auto& s : alt_subpolygons(p)) {
        if (s.sub.size() < 4) continue; // the part containing the closing side
        std::vector<std::vector<Decomposition>> comp_decs;
        for (auto& c : s.components) comp_decs.push_back(enumerate_decompositions(c));
        std::vector<Decomposition> partial{Decomposition{s.sub}};
        for (auto& choices : comp_decs) {
            std::vector<Decomposition> next;
            for (auto& base : partial)
                for (auto& d : choices) {
                    Decomposition nd = base;
                    nd.insert(nd.end(), d.begin(), d.end());
                    next.push_back(std::move(nd));
                }
            partial = std::move(next);
        }
        for (auto& d : partial) out.push_back(std::move(d));
    }
    return out;
}

DecoratedTree dual_tree(const AlternatingPolygon& p, const Quadrangulation& q, AtomTable& table) {
    size_t n = q.size();
    // adjacency: two quadrangles sharing two vertices share a diagonal
    auto shares_diagonal = [](const AlternatingPolygon& a, const AlternatingPolygon& b) {
        int common = 0;
        for (int la : a.labels)
            for (int lb : b.labels)
                if (la == lb) ++common;
        return common == 2;
    };
    int root = -1;
    for (size_t i = 0; i < n; ++i) {
        bool has_first = false, has_last = false;
        for (int l : q[i].labels) {
            if (l == p.labels.front()) has_first = true;
            if (l == p.labels.back()) has_last = true;
        }
        if (has_first && has_last) { root = (int)i; break; }
    }
    if (root < 0) throw std::logic_error("dual_tree: no root quadrangle");

    std::vector<bool> used(n, false);
    std::function<DecoratedTree(int)> build = [&](int v) {
        used[v] = true;
        Forest kids;
        for (size_t w = 0; w < n; ++w)
            if (!used[w] && shares_diagonal(q[v], q[w]))
                kids = kids.joined(Forest::single(build((int)w)));
        Letter lab{cross_ratio(q[v], table), 1};
        return graft(lab, q[v].labels.front() & 1, kids);
    };
    return build(root);
}

FSeries tree_sum(const AlternatingPolygon& p, AtomTable& table) {
    FSeries s;
    for (auto& q : enumerate_quadrangulations(p))
        s.add(Forest::single(dual_tree(p, q, table)), Rational(1));
    return s;
}

WSeries formal_T(const AlternatingPolygon& p, AtomTable& table) {
    if (p.size() == 2) return WSeries::unit(Word{});
    return arborify(tree_sum(p, table));
}

WSeries formal_T_recursive(const AlternatingPolygon& p, AtomTable& table) {
    size_t L = p.size();
    if (L == 2) return WSeries::unit(Word{});
    WSeries out;
    for (size_t i = 1; i < L - 1; i += 2)
        for (size_t j = i + 1; j < L - 1; j += 2) {
            AlternatingPolygon root = p.select({0, i, j, L - 1});
            WSeries s = qshuffle(formal_T_recursive(p.slice(0, i), table),
                                 qshuffle(formal_T_recursive(p.slice(i, j), table),
                                          formal_T_recursive(p.slice(j, L - 1), table)));
            Letter a{cross_ratio(root, table), 1};
            if (p.parity() == 0) out -= prepend(a, s);
            else out += prepend(a, s) + merge_into(a, s);
        }
    return out;
}

WSeries word_projection(const WSeries& s, WordShape shape) {
    WSeries r;
    for (auto& [w, c] : s.terms()) {
        switch (shape) {
        case WordShape::FullWeight:
            if (w.length() == 1) r.add(w, c);
            break;
        case WordShape::HeadLong:
            if (w.length() == 2 && w.letters[1].weight == 1 && w.letters[0].weight >= 1)
                r.add(w, c);
            break;
        case WordShape::TailLong:
            if (w.length() == 2 && w.letters[0].weight == 1)
                r.add(w, c);
            break;
        }
    }
    return r;
}

} // namespace quadlog
