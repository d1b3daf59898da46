#pragma once

#include "quadlog/polygons.hpp"
#include "quadlog/report.hpp"
#include "quadlog/symbol.hpp"

namespace quadlog {

/// Element of H (x) F: map from F-words to H-side coefficients. The
/// coefficient of the word x itself in coaction(x) is the scalar 1.
using CoactionResult = std::map<Word, IIExpr>;

void coaction_add(CoactionResult& r, const Word& w, const IIExpr& h);

/// The coaction of H on F, Delta^HF, over the i1 = 1 subsequences of
/// v_1(x) = (0, 1, ..., phi_1...phi_k).
CoactionResult coaction(const Word& x);
CoactionResult coaction(const WSeries& x);

/// Product in H (x) F: H-sides multiply, F-sides quasi-shuffle.
CoactionResult coaction_product(const CoactionResult& a, const CoactionResult& b);

CoactionResult coaction_sub(const CoactionResult& a, const CoactionResult& b);

/// pi_d(x): coefficient of [prod(phi), wt(x) - d] in the coaction.
IIExpr principal_coefficient(const Word& x, int d);

/// "Vanishes in H" oracle: symbol zero AND full specialization zero.
/// The specialization maps every symbol variable per sigma.
class HVanishChecker {
public:
    HVanishChecker(AtomTable& table, Specialization sigma)
        : engine_(table), sigma_(std::move(sigma)) {}

    SymbolEngine& engine() { return engine_; }

    /// True if e == 0 in H; otherwise appends residual descriptions.
    bool vanishes(const IIExpr& e, const std::string& context, std::vector<std::string>& residuals);

private:
    SymbolEngine engine_;
    Specialization sigma_;
};

/// Thm 3.16 instance check: D = coaction(x*y) - coaction(x)coaction(y)
/// vanishes coefficientwise in H. sigma sends all letter variables to 0.
VerificationReport verify_comodule_product(const Word& x, const Word& y, AtomTable& table,
                                           const Specialization& sigma);

/// Thm 4.21 instance check: reduced coaction of T_P vanishes in H at the
/// pairwise-collision divisor x_{p_{2i}} = x_{p_{2i+1}}.
VerificationReport verify_TP_coinvariant(const AlternatingPolygon& p, AtomTable& table);

/// Coproduct structure of Li^H(x) per the smash-coproduct factorization:
/// terms (H-monomial including the Li-encoded prefix) (x) word-to-interpret.
struct LiCoproductTerm {
    IIMono h;    // H-side: Li(prefix) factor and coaction coefficients
    Word word;   // to be interpreted as Li (or ALi) of this word
    friend bool operator<(const LiCoproductTerm& a, const LiCoproductTerm& b) {
        if (!(a.h == b.h)) return a.h < b.h;
        return a.word < b.word;
    }
    friend bool operator==(const LiCoproductTerm& a, const LiCoproductTerm& b) {
        return a.h == b.h && a.word == b.word;
    }
};
using LiCoproduct = Series<LiCoproductTerm>;
LiCoproduct li_coproduct_structure(const Word& x);

/// Generalized multiple polylogarithm Li_{n0; n1..nk}(args of w) as a signed
/// iterated integral; returns (sign, term).
std::pair<Rational, IITerm> li_iiterm(int n0, const Word& w);

/// Smash coproduct of sum c * (h (x) x) in H x F given the coaction.
struct SmashTerm {
    IIMono h;
    Word x;
    friend bool operator<(const SmashTerm& a, const SmashTerm& b) {
        if (!(a.h == b.h)) return a.h < b.h;
        return a.x < b.x;
    }
    friend bool operator==(const SmashTerm& a, const SmashTerm& b) {
        return a.h == b.h && a.x == b.x;
    }
};
using SmashSeries = Series<SmashTerm>;
using SmashPairSeries = Series<std::pair<SmashTerm, SmashTerm>>;
SmashPairSeries smash_coproduct(const SmashSeries& e);

} // namespace quadlog
