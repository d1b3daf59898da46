#pragma once

#include "quadlog/trees.hpp"

namespace quadlog {

/// Increasing integer labels (p0,...,p_{2n+1}) with consecutive differences
/// odd; parity = parity of p0. The 2-element sequence is the unit polygon.
struct AlternatingPolygon {
    std::vector<int> labels;

    static AlternatingPolygon standard(int n, bool odd = false) {
        AlternatingPolygon p;
        for (int i = 0; i < 2 * n + 2; ++i) p.labels.push_back(i + (odd ? 1 : 0));
        return p;
    }
    static AlternatingPolygon parse(const std::string& csv);

    size_t size() const { return labels.size(); }
    int parity() const { return labels.front() & 1; }
    bool valid() const;

    AlternatingPolygon slice(size_t i, size_t j) const { // positions i..j inclusive
        AlternatingPolygon p;
        p.labels.assign(labels.begin() + i, labels.begin() + j + 1);
        return p;
    }
    AlternatingPolygon select(const std::vector<size_t>& pos) const {
        AlternatingPolygon p;
        for (size_t i : pos) p.labels.push_back(labels[i]);
        return p;
    }

    friend bool operator==(const AlternatingPolygon& a, const AlternatingPolygon& b) {
        return a.labels == b.labels;
    }
    friend bool operator<(const AlternatingPolygon& a, const AlternatingPolygon& b) {
        return a.labels < b.labels;
    }
    std::string str() const;
};

using Quadrangulation = std::vector<AlternatingPolygon>; // disjoint alternating quadrangles
using Decomposition = std::vector<AlternatingPolygon>;   // parts of size >= 4

/// Cross-ratio [x1,x2,x3,x4] = (x1-x2)(x3-x4)/((x1-x4)(x3-x2)) on point labels.
FactoredRational cross_ratio4(int a, int b, int c, int d, AtomTable& table);

/// cr(P): product of quadrangle cross-ratios for even P, its inverse for odd.
FactoredRational cross_ratio(const AlternatingPolygon& p, AtomTable& table);

/// All quadrangulations; count is the Fuss-Catalan number (3n)!/(n!(2n+1)!).
std::vector<Quadrangulation> enumerate_quadrangulations(const AlternatingPolygon& p);

/// All decompositions of P into disjoint alternating subpolygons (the poset
/// D(P)); includes the trivial decomposition {P}.
std::vector<Decomposition> enumerate_decompositions(const AlternatingPolygon& p);

/// Dual tree of a quadrangulation: vertices labeled [cr(Q_i),1] with the
/// quadrangle's parity; root is the quadrangle on the side (p0, p_{2n+1}).
DecoratedTree dual_tree(const AlternatingPolygon& p, const Quadrangulation& q, AtomTable& table);

/// Sum of dual trees over all quadrangulations.
FSeries tree_sum(const AlternatingPolygon& p, AtomTable& table);

/// Formal quadrangular polylogarithm T_P = Arb(t_P).
WSeries formal_T(const AlternatingPolygon& p, AtomTable& table);
/// Same element through the root-quadrangle recursion; must agree termwise.
WSeries formal_T_recursive(const AlternatingPolygon& p, AtomTable& table);

/// alt(P): position subsequences containing both ends, alternating; each
/// entry is (selected positions, complementary components of size >= 2).
struct AltSubpolygon {
    std::vector<size_t> positions;
    AlternatingPolygon sub;
    std::vector<AlternatingPolygon> components; // closures of P \ S, in order
};
std::vector<AltSubpolygon> alt_subpolygons(const AlternatingPolygon& p);

enum class WordShape { FullWeight, HeadLong, TailLong }; // (n), (n-1,1), (1,n-1)

/// Restrict a weight-homogeneous series to words of the given shape.
WSeries word_projection(const WSeries& s, WordShape shape);

} // namespace quadlog
