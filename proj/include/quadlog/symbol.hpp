#pragma once

#include "quadlog/iterated.hpp"

namespace quadlog {

/// Tensor of weight-1 multiplicative entries; slot constants are kept
/// positive (sign is torsion in C(S)^x (x) Q and is dropped).
using Slots = std::vector<FactoredRational>;
using SymbolTensor = Series<Slots>;

struct InfinityInSymbol : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Normalize a slot entry; returns nullopt when the entry is torsion (the
/// whole tensor term is then zero).
std::optional<FactoredRational> slot_normalize(const FactoredRational& f);

SymbolTensor symbol_shuffle(const SymbolTensor& a, const SymbolTensor& b);

/// Right-nested bracketing operator [a1,[a2,[...]]] expanded in the tensor
/// algebra. Kills proper shuffle products, so equal projections mean equal
/// modulo products.
SymbolTensor dynkin_project(const SymbolTensor& t);

/// Symbol computation with memoization over a shared atom table.
class SymbolEngine {
public:
    explicit SymbolEngine(AtomTable& table) : table_(table) {}

    AtomTable& table() { return table_; }

    SymbolTensor of_term(const IITerm& t);
    SymbolTensor of_mono(const IIMono& m);
    SymbolTensor of_expr(const IIExpr& e);

    /// Weight-1 slot of I(a;b;c) = (c-b)/(b-a) with vanishing differences
    /// dropped (the tangential-base-point closed form).
    FactoredRational reduce1(const IITerm& t);

private:
    FactoredRational point_diff(const Point& a, const Point& b);

    AtomTable& table_;
    std::map<IITerm, SymbolTensor> memo_;
    unsigned long epoch_seen_ = 0;
};

/// Wedge sums with split-position tracking for Lambda^2-level comparisons.
struct SplitSlots {
    size_t left_len = 0;
    Slots slots;
    friend bool operator==(const SplitSlots& a, const SplitSlots& b) {
        return a.left_len == b.left_len && a.slots == b.slots;
    }
    friend bool operator<(const SplitSlots& a, const SplitSlots& b) {
        if (a.left_len != b.left_len) return a.left_len < b.left_len;
        return a.slots < b.slots;
    }
};
using WedgeSymbol = Series<SplitSlots>;

/// Antisymmetrized, Dynkin-projected symbol of a wedge a ^ b.
WedgeSymbol wedge_symbol(SymbolEngine& se, const IIExpr& a, const IIExpr& b, const Rational& coeff);

} // namespace quadlog
