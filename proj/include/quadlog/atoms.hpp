#pragma once

#include "quadlog/poly.hpp"

#include <complex>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace quadlog {

/// Table of pairwise-coprime canonical polynomial atoms. Atoms may later be
/// split by gcd refinement, in which case the old id is retired and remapped
/// to its factors; values normalize themselves through the remap records.
class AtomTable {
public:
    struct Entry {
        Poly poly;                                   // live atom (primitive, canonical)
        std::vector<std::pair<int, int>> remap;      // nonempty => retired, product of (id, exp)
        bool retired() const { return !remap.empty(); }
    };

    AtomTable() = default;
    AtomTable(const AtomTable&) = delete;
    AtomTable& operator=(const AtomTable&) = delete;

    /// Factor a nonzero poly over the (refined) base. Returns constant part
    /// and exponent map over live atom ids.
    std::pair<Rational, std::vector<std::pair<int, int>>> factorize(const Poly& p);

    const Poly& poly(int id) const { return entries_[id].poly; }
    size_t size() const { return entries_.size(); }
    unsigned long epoch() const { return epoch_; }
    bool retired(int id) const { return entries_[id].retired(); }

    /// Resolve a (possibly retired) id into live (id, exp) factors.
    void resolve(int id, int exp, std::vector<std::pair<int, int>>& out) const;

    std::mutex& mutex() const { return mu_; }

private:
    int insert_primitive(const Poly& prim);

    std::vector<Entry> entries_;
    unsigned long epoch_ = 0;
    mutable std::mutex mu_;
};

/// Element of the multiplicative group of rational functions: nonzero
/// rational constant times a product of coprime atoms with integer exponents.
class FactoredRational {
public:
    FactoredRational() : constant_(1) {}
    explicit FactoredRational(const Rational& c) : constant_(c) {}

    static FactoredRational one() { return FactoredRational(Rational(1)); }
    static FactoredRational from_poly(const Poly& p, AtomTable& table);
    /// num/den as factored element.
    static FactoredRational from_ratio(const Poly& num, const Poly& den, AtomTable& table);

    const Rational& constant() const { return constant_; }
    /// Sorted (atom id, exponent) pairs, exponents nonzero.
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    bool is_constant() const { return factors_.empty(); }
    bool is_one() const { return factors_.empty() && constant_.is_one(); }
    /// Trivial in the torsion-free multiplicative group (constant +-1, no atoms).
    bool is_torsion() const { return factors_.empty() && constant_.abs().is_one(); }

    FactoredRational inv() const;
    FactoredRational pow(long e) const;
    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);

    /// a * b^pow with merged exponent vectors.
    static FactoredRational mul(const FactoredRational& a, const FactoredRational& b, long pow_b);

    friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
        return a.constant_ == b.constant_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactoredRational& a, const FactoredRational& b) { return !(a == b); }
    friend bool operator<(const FactoredRational& a, const FactoredRational& b) {
        if (a.factors_ != b.factors_) return a.factors_ < b.factors_;
        return a.constant_ < b.constant_;
    }

    /// Re-express retired atom ids through the table's remap records.
    void refresh(const AtomTable& table);

    /// Exact evaluation; nullopt if an atom vanishes (pole or zero).
    std::optional<Rational> eval(const std::vector<Rational>& xs, const AtomTable& table) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& xs, const AtomTable& table) const;

    /// Numerator and denominator polys (constant folded into numerator).
    std::pair<Poly, Poly> to_ratio(const AtomTable& table) const;

    /// Substitute variable -> variable in every atom; refactors over the table.
    FactoredRational subst_var(unsigned var, unsigned replacement, AtomTable& table) const;

    std::string str(const AtomTable& table) const;
    std::string json(const AtomTable& table) const;

private:
    Rational constant_;
    std::vector<std::pair<int, int>> factors_;
};

} // namespace quadlog
