#include "quadlog/trees.hpp"

namespace quadlog {

DecoratedTree graft(const Letter& a, int parity, const Forest& f) {
    DecoratedTree t;
    t.label = a;
    t.parity = parity;
    t.children = f.trees;
    t.canonicalize();
    return t;
}

namespace {

// All cut outcomes of t, the empty cut included: (root component, pruned forest).
std::vector<std::pair<DecoratedTree, Forest>> cut_outcomes(const DecoratedTree& t) {
    std::vector<std::pair<DecoratedTree, Forest>> acc;
    acc.push_back({DecoratedTree{t.label, t.parity, {}}, Forest::empty()});
    for (auto& child : t.children) {
        auto child_cuts = cut_outcomes(child);
        std::vector<std::pair<DecoratedTree, Forest>> next;
        for (auto& [root_part, pruned] : acc) {
            // cut the edge to this child: whole child subtree is pruned
            {
                auto r = root_part;
                next.push_back({r, pruned.joined(Forest::single(child))});
            }
            // keep the edge, recurse into the child
            for (auto& [cr, cp] : child_cuts) {
                auto r = root_part;
                r.children.push_back(cr);
                next.push_back({r, pruned.joined(cp)});
            }
        }
        acc = std::move(next);
    }
    for (auto& [r, p] : acc) r.canonicalize();
    return acc;
}

} // namespace

FPairSeries ck_coproduct(const DecoratedTree& t) {
    FPairSeries r;
    r.add(ForestPair{Forest::empty(), Forest::single(t)}, Rational(1)); // 1 (x) t
    for (auto& [root_part, pruned] : cut_outcomes(t))
        r.add(ForestPair{Forest::single(root_part), pruned}, Rational(1));
    return r;
}

FPairSeries ck_coproduct(const Forest& f) {
    FPairSeries r;
    r.add(ForestPair{Forest::empty(), Forest::empty()}, Rational(1));
    for (auto& t : f.trees) {
        FPairSeries dt = ck_coproduct(t);
        FPairSeries next;
        for (auto& [p1, c1] : r.terms())
            for (auto& [p2, c2] : dt.terms())
                next.add(ForestPair{p1.left.joined(p2.left), p1.right.joined(p2.right)}, c1 * c2);
        r = std::move(next);
    }
    return r;
}

WSeries arborify(const DecoratedTree& t) {
    WSeries sub = arborify(Forest{t.children});
    if (t.parity == 0) return -prepend(t.label, sub);
    return prepend(t.label, sub) + merge_into(t.label, sub);
}

WSeries arborify(const Forest& f) {
    WSeries r = WSeries::unit(Word{});
    for (auto& t : f.trees) r = qshuffle(r, arborify(t));
    return r;
}

WSeries arborify(const FSeries& s) {
    WSeries r;
    for (auto& [f, c] : s.terms()) r += arborify(f) * c;
    return r;
}

} // namespace quadlog
