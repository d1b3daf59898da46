#pragma once

#include "quadlog/atoms.hpp"

#include <map>

namespace quadlog {

/// Generic sparse Q-linear combination keyed by canonical terms.
template <class K>
class Series {
public:
    using Terms = std::map<K, Rational>;

    Series() = default;
    static Series unit(const K& k) {
        Series s;
        s.terms_[k] = Rational(1);
        return s;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const K& k, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Series& operator+=(const Series& o) {
        for (auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        for (auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator*(const Rational& c) const {
        Series r;
        if (c.is_zero()) return r;
        for (auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }
    Series operator-() const { return *this * Rational(-1); }
    friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    template <class F>
    auto map_terms(F&& f) const -> decltype(f(std::declval<K>())) {
        decltype(f(std::declval<K>())) out;
        for (auto& [k, c] : terms_) out += f(k) * c;
        return out;
    }

private:
    Terms terms_;
};

/// Letter (phi, n): nonzero rational-function argument and positive weight.
struct Letter {
    FactoredRational arg;
    int weight = 1;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.weight == b.weight && a.arg == b.arg;
    }
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.arg < b.arg;
    }
    /// Semigroup product (phi1,n1)*(phi2,n2) = (phi1 phi2, n1+n2).
    static Letter merge(const Letter& a, const Letter& b) {
        return Letter{a.arg * b.arg, a.weight + b.weight};
    }
};

/// Bar word [phi1,n1|...|phk,nk]; empty word is the unit.
struct Word {
    std::vector<Letter> letters;

    int weight() const {
        int w = 0;
        for (auto& l : letters) w += l.weight;
        return w;
    }
    size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    FactoredRational arg_product() const {
        FactoredRational p = FactoredRational::one();
        for (auto& l : letters) p = p * l.arg;
        return p;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }

    std::string str(const AtomTable& table) const;
    std::string json(const AtomTable& table) const;
};

using WSeries = Series<Word>;

/// Ordered pair of words, a term of F (x) F.
struct WordPair {
    Word left, right;
    friend bool operator==(const WordPair& a, const WordPair& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const WordPair& a, const WordPair& b) {
        if (!(a.left == b.left)) return a.left < b.left;
        return a.right < b.right;
    }
};

using WPairSeries = Series<WordPair>;

/// Recursive quasi-shuffle product of basis words, extended bilinearly.
WSeries qshuffle(const Word& u, const Word& v);
WSeries qshuffle(const WSeries& u, const WSeries& v);

/// Deconcatenation coproduct of a word.
WPairSeries deconcat(const Word& w);

/// a . w: semigroup-merge a into the first letter; a . 1 = 0.
WSeries merge_into(const Letter& a, const WSeries& s);
/// a w: prepend letter.
WSeries prepend(const Letter& a, const WSeries& s);

} // namespace quadlog
