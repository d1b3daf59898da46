#include "quadlog/words.hpp"

#include <sstream>

namespace quadlog {

std::string Word::str(const AtomTable& table) const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << "|";
        os << letters[i].arg.str(table) << "," << letters[i].weight;
    }
    os << "]";
    return os.str();
}

std::string Word::json(const AtomTable& table) const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ",";
        os << "{\"arg\":" << letters[i].arg.json(table) << ",\"n\":" << letters[i].weight << "}";
    }
    os << "]";
    return os.str();
}

WSeries qshuffle(const Word& u, const Word& v) {
    if (u.empty()) return WSeries::unit(v);
    if (v.empty()) return WSeries::unit(u);
    const Letter& a1 = u.letters.front();
    const Letter& a2 = v.letters.front();
    Word u_tail{std::vector<Letter>(u.letters.begin() + 1, u.letters.end())};
    Word v_tail{std::vector<Letter>(v.letters.begin() + 1, v.letters.end())};

    WSeries r = prepend(a1, qshuffle(u_tail, v));
    r += prepend(a2, qshuffle(u, v_tail));
    r += prepend(Letter::merge(a1, a2), qshuffle(u_tail, v_tail));
    return r;
}

WSeries qshuffle(const WSeries& u, const WSeries& v) {
    WSeries r;
    for (auto& [wu, cu] : u.terms())
        for (auto& [wv, cv] : v.terms())
            r += qshuffle(wu, wv) * (cu * cv);
    return r;
}

WPairSeries deconcat(const Word& w) {
    WPairSeries r;
    for (size_t i = 0; i <= w.letters.size(); ++i) {
        Word a{std::vector<Letter>(w.letters.begin(), w.letters.begin() + i)};
        Word b{std::vector<Letter>(w.letters.begin() + i, w.letters.end())};
        r.add(WordPair{a, b}, Rational(1));
    }
    return r;
}

WSeries merge_into(const Letter& a, const WSeries& s) {
    WSeries r;
    for (auto& [w, c] : s.terms()) {
        if (w.empty()) continue; // a . 1 = 0
        Word m = w;
        m.letters.front() = Letter::merge(a, m.letters.front());
        r.add(m, c);
    }
    return r;
}

WSeries prepend(const Letter& a, const WSeries& s) {
    WSeries r;
    for (auto& [w, c] : s.terms()) {
        Word m;
        m.letters.reserve(w.letters.size() + 1);
        m.letters.push_back(a);
        m.letters.insert(m.letters.end(), w.letters.begin(), w.letters.end());
        r.add(m, c);
    }
    return r;
}

} // namespace quadlog
