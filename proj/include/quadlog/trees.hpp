#pragma once

#include "quadlog/words.hpp"

namespace quadlog {

/// Rooted tree with parity-tagged letters at vertices. Children are kept
/// sorted by canonical form so isomorphic trees compare equal.
struct DecoratedTree {
    Letter label;
    int parity = 0; // 0 even, 1 odd
    std::vector<DecoratedTree> children;

    size_t vertex_count() const {
        size_t n = 1;
        for (auto& c : children) n += c.vertex_count();
        return n;
    }
    void canonicalize() {
        for (auto& c : children) c.canonicalize();
        std::sort(children.begin(), children.end());
    }

    friend bool operator==(const DecoratedTree& a, const DecoratedTree& b) {
        return a.parity == b.parity && a.label == b.label && a.children == b.children;
    }
    friend bool operator<(const DecoratedTree& a, const DecoratedTree& b) {
        if (a.parity != b.parity) return a.parity < b.parity;
        if (!(a.label == b.label)) return a.label < b.label;
        return a.children < b.children;
    }
};

/// Multiset of decorated rooted trees, kept sorted.
struct Forest {
    std::vector<DecoratedTree> trees;

    static Forest empty() { return Forest{}; }
    static Forest single(DecoratedTree t) {
        t.canonicalize();
        return Forest{{std::move(t)}};
    }
    Forest joined(const Forest& o) const {
        Forest f = *this;
        f.trees.insert(f.trees.end(), o.trees.begin(), o.trees.end());
        std::sort(f.trees.begin(), f.trees.end());
        return f;
    }
    size_t vertex_count() const {
        size_t n = 0;
        for (auto& t : trees) n += t.vertex_count();
        return n;
    }
    friend bool operator==(const Forest& a, const Forest& b) { return a.trees == b.trees; }
    friend bool operator<(const Forest& a, const Forest& b) { return a.trees < b.trees; }
};

struct ForestPair {
    Forest left, right;
    friend bool operator==(const ForestPair& a, const ForestPair& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const ForestPair& a, const ForestPair& b) {
        if (!(a.left == b.left)) return a.left < b.left;
        return a.right < b.right;
    }
};

using FSeries = Series<Forest>;
using FPairSeries = Series<ForestPair>;

/// New root labeled a with the forest's roots grafted beneath it.
DecoratedTree graft(const Letter& a, int parity, const Forest& f);

/// Connes-Kreimer coproduct: 1(x)t + t(x)1 + sum over admissible cuts of
/// root part (x) pruned part.
FPairSeries ck_coproduct(const DecoratedTree& t);
/// Multiplicative extension to forests.
FPairSeries ck_coproduct(const Forest& f);

/// Arborification into the quasi-shuffle algebra: multiplicative on forests,
/// Arb(B_a t) = -a Arb(t) for even a, a Arb(t) + a.Arb(t) for odd a.
WSeries arborify(const DecoratedTree& t);
WSeries arborify(const Forest& f);
WSeries arborify(const FSeries& s);

} // namespace quadlog
