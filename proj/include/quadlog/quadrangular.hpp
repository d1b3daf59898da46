#pragma once

#include "quadlog/coaction.hpp"
#include "quadlog/correlators.hpp"

namespace quadlog {

/// Nondecreasing index sequence of C_{n,k} with its sign.
struct AdmissibleSequence {
    std::vector<int> indices;
    int sign = 1;
};

/// The set C_{n,k}: nondecreasing sequences (i_0..i_{n+k}) in [0, 2n+1],
/// every even value at most once, each pair {2i, 2i+1} represented.
std::vector<AdmissibleSequence> enumerate_admissible(int n, int k);

/// QLi_{n,k}(points) = (-1)^{n+1} sum sign(s) Cor(points at s), canonical.
CorSeries qli(int n, int k, const std::vector<Point>& points);

/// QLi with the rotation/sign convention QLi^{(-)^s}.
CorSeries qli_signed(int n, int k, const std::vector<Point>& points, int s);

/// QLi_k(P): plain for even polygons, rotated-negated for odd ones.
CorSeries qli_polygon(const AlternatingPolygon& p, int k, AtomTable& table);

/// Thm 5.2 instance: cobracket of QLi_{n,k} equals the double sum over
/// (i,j), j-i = 2s+1, as an exact wedge multiset (cyclic symmetry only).
VerificationReport verify_qli_coproduct(int n, int k, AtomTable& table);

/// Thm 5.6 instance: QLi_k(P) = Li_k(T_P); cobracket difference vanishes at
/// Lambda^2-symbol level and both specializations vanish at the collision
/// divisor.
VerificationReport verify_quadrangulation_formula(const AlternatingPolygon& p, int k,
                                                  AtomTable& table);

/// Prop 5.7: alternating-substitution expansion of QLi_{n,n} / QLi_{n,n+1}
/// recovering Cor_a; returns the expanded side.
CorSeries universality_expand(int n, bool odd_case, const Point& a,
                              const std::vector<Point>& points);

/// Prop 5.7 instance check against the change-of-basepoint expansion.
VerificationReport verify_universality(int n, bool odd_case, AtomTable& table);

} // namespace quadlog
