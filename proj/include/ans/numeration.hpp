#ifndef ANS_NUMERATION_HPP
#define ANS_NUMERATION_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ans/bigint.hpp"
#include "ans/counting.hpp"
#include "ans/ops.hpp"

namespace ans {

// One summand of the digit expansion val(w) = sum c * u_l(k).
struct Digit {
    State state;
    int length;
    int value;
};

// An abstract numeration system S = (L, Sigma, <): the infinite regular
// language L enumerated in radix order (length first, then
// lexicographically by <). rep maps n to the (n+1)-th word of L, val is
// its inverse. Both are exact for arbitrary-precision arguments.
class NumerationSystem {
  public:
    explicit NumerationSystem(const Dfa& d) : dfa_(minimize(d)), counts_(dfa_) {
        if (!is_infinite(dfa_))
            throw DomainError("numeration system requires an infinite language");
        finite_from_.resize(dfa_.state_count());
        auto [reach, coreach] = trim_info(dfa_);
        // L_k is finite iff no useful cycle is reachable from k; a finite
        // L_k is exhausted by words shorter than the state count.
        for (State k = 0; k < dfa_.state_count(); ++k) {
            Dfa rerooted(dfa_.alphabet(), dfa_.state_count(), k,
                         finals_of(dfa_), delta_of(dfa_));
            finite_from_[k] = !is_infinite(rerooted);
        }
    }

    const Dfa& dfa() const { return dfa_; }
    const Alphabet& alphabet() const { return dfa_.alphabet(); }

    const Int& count(State k, int length) const { return counts_.count(k, length); }
    Int cumulative(State k, int length) const { return counts_.cumulative(k, length); }
    Int count_root(int length) const { return counts_.count(dfa_.initial(), length); }

    bool member(const Word& w) const { return dfa_.accepts(w); }
    bool member(std::string_view s) const { return dfa_.accepts(s); }

    // ----- unranking (Algorithm-1 style greedy descent) -----

    Word rep(const Int& n) const { return rep_at(dfa_.initial(), n); }

    Word rep_at(State k, const Int& n) const {
        if (n < 0) throw DomainError("rep: negative value");
        if (finite_from_[k]) {
            Int total = counts_.cumulative(k, dfa_.state_count());
            if (n >= total)
                throw DomainError("rep: value " + n.str() + " out of range for finite L_k (#" +
                                  total.str() + ")");
        }
        int l = 0;
        while (counts_.cumulative(k, l) <= n) ++l;
        Int m = n - counts_.cumulative(k, l - 1);
        Word w;
        w.reserve(l);
        State cur = k;
        for (int i = 1; i <= l; ++i) {
            int j = 0;
            for (;; ++j) {
                if (j >= alphabet().size()) throw Error("rep: letter scan overran (count bug)");
                const Int& u = counts_.count(dfa_.next(cur, j), l - i);
                if (m < u) break;
                m -= u;
            }
            cur = dfa_.next(cur, j);
            w.push_back(j);
        }
        return w;
    }

    // ----- ranking (letterwise application of the factorization lemma) -----

    Int val(const Word& w) const { return val_at(dfa_.initial(), w); }
    Int val(std::string_view s) const { return val(word_from_string(alphabet(), s)); }

    Int val_at(State k, const Word& w) const {
        if (!dfa_.is_final(dfa_.run(k, w)))
            throw DomainError("val: word '" + word_to_string(alphabet(), w) + "' not in L_k");
        return counts_.cumulative(k, static_cast<int>(w.size()) - 1) + lex_rank(k, w);
    }

    // #{x in L_k, |x| = |w|, x <lex w}; defined for every w over Sigma.
    Int lex_rank(State k, const Word& w) const {
        Int rank = 0;
        State cur = k;
        int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
            for (int j = 0; j < w[i]; ++j) rank += counts_.count(dfa_.next(cur, j), len - 1 - i);
            cur = dfa_.next(cur, w[i]);
        }
        return rank;
    }

    // Digit expansion of val(w): val(w) = sum over digits of c * u_l(k),
    // every c between 0 and #Sigma.
    std::vector<Digit> val_decomposition(const Word& w) const {
        if (!member(w)) throw DomainError("val_decomposition: word not in L");
        int len = static_cast<int>(w.size());
        std::map<std::pair<State, int>, int> digits;
        for (int l = 0; l < len; ++l) digits[{dfa_.initial(), l}] += 1;  // v_{|w|-1}(s)
        State cur = dfa_.initial();
        for (int i = 0; i < len; ++i) {
            for (int j = 0; j < w[i]; ++j) digits[{dfa_.next(cur, j), len - 1 - i}] += 1;
            cur = dfa_.next(cur, w[i]);
        }
        std::vector<Digit> out;
        for (const auto& [key, c] : digits)
            if (c != 0 && counts_.count(key.first, key.second) != 0)
                out.push_back({key.first, key.second, c});
        return out;
    }

    // ----- order navigation -----

    std::optional<Word> min_word(State k, int length) const { return extreme_word(k, length, true); }
    std::optional<Word> max_word(State k, int length) const { return extreme_word(k, length, false); }

    Word successor(const Word& w) const {
        if (!member(w)) throw DomainError("successor: word not in L");
        int len = static_cast<int>(w.size());
        std::vector<State> prefix_state(len + 1);
        prefix_state[0] = dfa_.initial();
        for (int i = 0; i < len; ++i) prefix_state[i + 1] = dfa_.next(prefix_state[i], w[i]);
        for (int i = len - 1; i >= 0; --i) {
            for (int j = w[i] + 1; j < alphabet().size(); ++j) {
                State t = dfa_.next(prefix_state[i], j);
                if (counts_.count(t, len - 1 - i) > 0) {
                    Word out(w.begin(), w.begin() + i);
                    out.push_back(j);
                    Word tail = *extreme_word(t, len - 1 - i, true);
                    out.insert(out.end(), tail.begin(), tail.end());
                    return out;
                }
            }
        }
        // end of the length block: least word of the next inhabited length
        for (int l = len + 1;; ++l)
            if (counts_.count(dfa_.initial(), l) > 0) return *extreme_word(dfa_.initial(), l, true);
    }

    // Count of strictly lex-smaller same-length words of alpha, grouped by
    // the state they reach from k. Used for the factorization-lemma sum
    // without enumerating the words.
    std::vector<Int> smaller_prefix_state_counts(State k, const Word& alpha) const {
        std::vector<Int> t(dfa_.state_count());
        State cur = k;
        for (int letter : alpha) {
            std::vector<Int> next(dfa_.state_count());
            for (State q = 0; q < dfa_.state_count(); ++q) {
                if (t[q] == 0) continue;
                for (int c = 0; c < alphabet().size(); ++c) next[dfa_.next(q, c)] += t[q];
            }
            for (int c = 0; c < letter; ++c) next[dfa_.next(cur, c)] += 1;
            cur = dfa_.next(cur, letter);
            t = std::move(next);
        }
        return t;
    }

    bool finite_from(State k) const { return finite_from_[k]; }

    // Total size of a finite L_k.
    Int language_size(State k) const {
        if (!finite_from_[k]) throw DomainError("language_size: L_k is infinite");
        return counts_.cumulative(k, dfa_.state_count());
    }

  private:
    static std::vector<bool> finals_of(const Dfa& d) {
        std::vector<bool> f(d.state_count());
        for (State s = 0; s < d.state_count(); ++s) f[s] = d.is_final(s);
        return f;
    }
    static std::vector<State> delta_of(const Dfa& d) {
        std::vector<State> t(static_cast<std::size_t>(d.state_count()) * d.alphabet().size());
        for (State s = 0; s < d.state_count(); ++s)
            for (int c = 0; c < d.alphabet().size(); ++c) t[s * d.alphabet().size() + c] = d.next(s, c);
        return t;
    }

    std::optional<Word> extreme_word(State k, int length, bool least) const {
        if (counts_.count(k, length) == 0) return std::nullopt;
        Word w;
        w.reserve(length);
        State cur = k;
        for (int l = length; l > 0; --l) {
            int pick = -1;
            if (least) {
                for (int c = 0; c < alphabet().size(); ++c)
                    if (counts_.count(dfa_.next(cur, c), l - 1) > 0) {
                        pick = c;
                        break;
                    }
            } else {
                for (int c = alphabet().size() - 1; c >= 0; --c)
                    if (counts_.count(dfa_.next(cur, c), l - 1) > 0) {
                        pick = c;
                        break;
                    }
            }
            if (pick < 0) throw Error("extreme_word: inconsistent counts");
            w.push_back(pick);
            cur = dfa_.next(cur, pick);
        }
        return w;
    }

    Dfa dfa_;
    mutable CountTable counts_;
    std::vector<bool> finite_from_;
};

// Radix (genealogical) comparison: length first, then lexicographic.
inline bool radix_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace ans

#endif
