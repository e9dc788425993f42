#ifndef ANS_RELATIONS_HPP
#define ANS_RELATIONS_HPP

#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ans/counting.hpp"
#include "ans/numeration.hpp"
#include "ans/periodic.hpp"

namespace ans {

// Pair alphabet (Sigma u {#}) x (Sigma u {#}) \ {(#,#)}; # is the
// reserved right-padding symbol, written "_" in files.
struct PairAlphabet {
    Alphabet base;
    Alphabet pairs;
    int pad;  // pseudo-rank of # in either track

    int id(int i, int j) const {
        int v = table_[i * (pad + 1) + j];
        if (v < 0) throw DomainError("(#,#) is not a pair letter");
        return v;
    }
    std::pair<int, int> split(int letter) const { return splits_[letter]; }

    static PairAlphabet over(const Alphabet& base) {
        PairAlphabet pa;
        pa.base = base;
        pa.pad = base.size();
        int n = base.size() + 1;
        pa.table_.assign(n * n, -1);
        std::vector<std::string> names;
        auto track_name = [&](int i) { return i == pa.pad ? std::string("_") : base.name(i); };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == pa.pad && j == pa.pad) continue;
                pa.table_[i * n + j] = static_cast<int>(names.size());
                names.push_back(track_name(i) + "|" + track_name(j));
                pa.splits_.emplace_back(i, j);
            }
        pa.pairs = Alphabet(std::move(names));
        return pa;
    }

  private:
    std::vector<int> table_;
    std::vector<std::pair<int, int>> splits_;
};

// A binary relation on Sigma* encoded as a complete DFA over the pair
// alphabet; (u,v) is related iff the automaton accepts the right-padded
// convolution of u and v.
struct PaddedPairAutomaton {
    PairAlphabet pa;
    Dfa dfa;

    Word convolve(const Word& u, const Word& v) const {
        Word w;
        std::size_t n = std::max(u.size(), v.size());
        for (std::size_t i = 0; i < n; ++i)
            w.push_back(pa.id(i < u.size() ? u[i] : pa.pad, i < v.size() ? v[i] : pa.pad));
        return w;
    }

    bool accepts_pair(const Word& u, const Word& v) const { return dfa.accepts(convolve(u, v)); }
};

namespace detail {

// Letters indexed by another ordering of the same symbols.
inline Dfa rerank_dfa(const Dfa& d, const Alphabet& target) {
    if (d.alphabet() == target) return d;
    int p = target.size();
    if (p != d.alphabet().size()) throw DomainError("rerank: alphabets differ");
    std::vector<bool> fin(d.state_count());
    std::vector<State> delta(static_cast<std::size_t>(d.state_count()) * p);
    for (State s = 0; s < d.state_count(); ++s) {
        fin[s] = d.is_final(s);
        for (int i = 0; i < p; ++i)
            delta[s * p + i] = d.next(s, d.alphabet().rank(target.name(i)));
    }
    return Dfa(target, d.state_count(), d.initial(), std::move(fin), std::move(delta));
}

}  // namespace detail

inline PaddedPairAutomaton relation_intersect(const PaddedPairAutomaton& a,
                                              const PaddedPairAutomaton& b) {
    return {a.pa, minimize(intersect(a.dfa, b.dfa))};
}

inline PaddedPairAutomaton relation_union(const PaddedPairAutomaton& a,
                                          const PaddedPairAutomaton& b) {
    return {a.pa, minimize(union_of(a.dfa, b.dfa))};
}

inline PaddedPairAutomaton relation_difference(const PaddedPairAutomaton& a,
                                               const PaddedPairAutomaton& b) {
    return {a.pa, minimize(difference(a.dfa, b.dfa))};
}

// All well-padded convolutions: pads only as a suffix of one track.
inline Dfa well_padded_dfa(const PairAlphabet& pa) {
    // states: 0 both live, 1 u ended, 2 v ended, 3 dead
    int nl = pa.pairs.size();
    std::vector<bool> fin{true, true, true, false};
    std::vector<State> delta(4 * static_cast<std::size_t>(nl), 3);
    for (int c = 0; c < nl; ++c) {
        auto [i, j] = pa.split(c);
        if (i != pa.pad && j != pa.pad) delta[0 * nl + c] = 0;
        if (i == pa.pad) delta[0 * nl + c] = 1, delta[1 * nl + c] = 1;
        if (j == pa.pad) delta[0 * nl + c] = 2, delta[2 * nl + c] = 2;
    }
    return Dfa(pa.pairs, 4, 0, std::move(fin), std::move(delta));
}

// Complement within the well-padded pair words.
inline PaddedPairAutomaton relation_complement(const PaddedPairAutomaton& a) {
    return {a.pa, minimize(intersect(complement(a.dfa), well_padded_dfa(a.pa)))};
}

inline PaddedPairAutomaton swap_tracks(const PaddedPairAutomaton& a) {
    int nl = a.pa.pairs.size();
    std::vector<bool> fin(a.dfa.state_count());
    std::vector<State> delta(static_cast<std::size_t>(a.dfa.state_count()) * nl);
    for (State s = 0; s < a.dfa.state_count(); ++s) {
        fin[s] = a.dfa.is_final(s);
        for (int c = 0; c < nl; ++c) {
            auto [i, j] = a.pa.split(c);
            delta[s * nl + c] = a.dfa.next(s, a.pa.id(j, i));
        }
    }
    return {a.pa, Dfa(a.pa.pairs, a.dfa.state_count(), a.dfa.initial(), std::move(fin),
                      std::move(delta))};
}

// {(w,w) : w in Sigma*}.
inline PaddedPairAutomaton identity_relation(const Alphabet& base) {
    PairAlphabet pa = PairAlphabet::over(base);
    int nl = pa.pairs.size();
    std::vector<bool> fin{true, false};
    std::vector<State> delta(2 * static_cast<std::size_t>(nl), 1);
    for (int i = 0; i < base.size(); ++i) delta[0 * nl + pa.id(i, i)] = 0;
    return {pa, Dfa(pa.pairs, 2, 0, std::move(fin), std::move(delta))};
}

// R1 о R2 = {(u,w) : exists v, (u,v) in R1 and (v,w) in R2}. The middle
// track is guessed letter by letter; when it outlives both outer tracks
// the remaining letters are absorbed into the acceptance condition.
inline PaddedPairAutomaton compose(const PaddedPairAutomaton& r1, const PaddedPairAutomaton& r2,
                                   int cap = kStateCap) {
    if (r1.pa.base != r2.pa.base) throw DomainError("compose: base alphabet mismatch");
    const PairAlphabet& pa = r1.pa;
    int p = pa.base.size();
    const Dfa& d1 = r1.dfa;
    const Dfa& d2 = r2.dfa;
    int n1 = d1.state_count(), n2 = d2.state_count();
    const int kDone1 = n1, kDone2 = n2;

    // tail: can (p1,p2) accept after u and w ended while v continues?
    std::vector<bool> tail_ok(static_cast<std::size_t>(n1) * n2, false);
    {
        std::deque<int> queue;
        std::vector<std::vector<int>> preds(static_cast<std::size_t>(n1) * n2);
        for (State x = 0; x < n1; ++x)
            for (State y = 0; y < n2; ++y)
                for (int b = 0; b < p; ++b) {
                    State tx = d1.next(x, pa.id(pa.pad, b));
                    State ty = d2.next(y, pa.id(b, pa.pad));
                    preds[tx * n2 + ty].push_back(x * n2 + y);
                }
        for (State x = 0; x < n1; ++x)
            for (State y = 0; y < n2; ++y)
                if (d1.is_final(x) && d2.is_final(y)) {
                    tail_ok[x * n2 + y] = true;
                    queue.push_back(x * n2 + y);
                }
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop_front();
            for (int prev : preds[id])
                if (!tail_ok[prev]) {
                    tail_ok[prev] = true;
                    queue.push_back(prev);
                }
        }
    }

    Nfa nfa(pa.pairs);
    // state id = ((vlive ? 0 : 1) * (n1+1) + p1) * (n2+1) + p2
    auto sid = [&](bool vlive, int p1, int p2) {
        return ((vlive ? 0 : 1) * (n1 + 1) + p1) * (n2 + 1) + p2;
    };
    int total = 2 * (n1 + 1) * (n2 + 1);
    for (int i = 0; i < total; ++i) nfa.add_state();
    nfa.add_initial(sid(true, d1.initial(), d2.initial()));
    auto acc1 = [&](int p1) { return p1 == kDone1 || d1.is_final(p1); };
    auto acc2 = [&](int p2) { return p2 == kDone2 || d2.is_final(p2); };
    for (int p1 = 0; p1 <= n1; ++p1)
        for (int p2 = 0; p2 <= n2; ++p2) {
            if (p1 < n1 && p2 < n2 && tail_ok[p1 * n2 + p2]) nfa.add_final(sid(true, p1, p2));
            if (acc1(p1) && acc2(p2)) nfa.add_final(sid(false, p1, p2));
        }

    auto step1 = [&](int p1, int a, int b, int& out) {  // letter (a,b) on r1
        if (a == pa.pad && b == pa.pad) {               // u and v both over
            if (p1 == kDone1 || d1.is_final(p1)) {
                out = kDone1;
                return true;
            }
            return false;
        }
        if (p1 == kDone1) return false;
        out = d1.next(p1, pa.id(a, b));
        return true;
    };
    auto step2 = [&](int p2, int b, int c, int& out) {
        if (b == pa.pad && c == pa.pad) {
            if (p2 == kDone2 || d2.is_final(p2)) {
                out = kDone2;
                return true;
            }
            return false;
        }
        if (p2 == kDone2) return false;
        out = d2.next(p2, pa.id(b, c));
        return true;
    };
    for (int vlive = 0; vlive < 2; ++vlive)
        for (int p1 = 0; p1 <= n1; ++p1)
            for (int p2 = 0; p2 <= n2; ++p2) {
                int from = sid(vlive == 0, p1, p2);
                for (int c = 0; c < pa.pairs.size(); ++c) {
                    auto [x, y] = pa.split(c);
                    if (vlive == 0) {
                        // middle track still live: guess its letter
                        for (int b = 0; b < p; ++b) {
                            int q1, q2;
                            if (step1(p1, x, b, q1) && step2(p2, b, y, q2))
                                nfa.add_edge(from, c, sid(true, q1, q2));
                        }
                    }
                    // middle track ends here or ended before
                    int q1, q2;
                    if (step1(p1, x, pa.pad, q1) && step2(p2, pa.pad, y, q2))
                        nfa.add_edge(from, c, sid(false, q1, q2));
                }
            }
    return {pa, minimize(determinize(nfa, cap))};
}

// {v : exists u accepted by A with (u,v) in R}.
inline Dfa image(const PaddedPairAutomaton& r, const Dfa& a0, int cap = kStateCap) {
    const PairAlphabet& pa = r.pa;
    Dfa a = detail::rerank_dfa(a0, pa.base);
    int p = pa.base.size();
    const Dfa& dr = r.dfa;
    int nr = dr.state_count(), na = a.state_count();
    const int kDoneA = na;

    // u may outlive v; precompute which (pr,pa') pairs accept via a u-tail
    std::vector<bool> tail_ok(static_cast<std::size_t>(nr) * na, false);
    {
        std::deque<int> queue;
        std::vector<std::vector<int>> preds(static_cast<std::size_t>(nr) * na);
        for (State x = 0; x < nr; ++x)
            for (State y = 0; y < na; ++y)
                for (int u = 0; u < p; ++u)
                    preds[dr.next(x, pa.id(u, pa.pad)) * na + a.next(y, u)].push_back(x * na + y);
        for (State x = 0; x < nr; ++x)
            for (State y = 0; y < na; ++y)
                if (dr.is_final(x) && a.is_final(y)) {
                    tail_ok[x * na + y] = true;
                    queue.push_back(x * na + y);
                }
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop_front();
            for (int prev : preds[id])
                if (!tail_ok[prev]) {
                    tail_ok[prev] = true;
                    queue.push_back(prev);
                }
        }
    }

    Nfa nfa(pa.base);
    auto sid = [&](int pr, int pav) { return pr * (na + 1) + pav; };
    for (int i = 0; i < nr * (na + 1); ++i) nfa.add_state();
    nfa.add_initial(sid(dr.initial(), a.initial()));
    for (int pr = 0; pr < nr; ++pr)
        for (int pav = 0; pav <= na; ++pav) {
            bool acc = pav == kDoneA ? dr.is_final(pr) : tail_ok[pr * na + pav];
            if (acc) nfa.add_final(sid(pr, pav));
        }
    for (int pr = 0; pr < nr; ++pr)
        for (int pav = 0; pav <= na; ++pav)
            for (int c = 0; c < p; ++c) {
                if (pav != kDoneA) {
                    for (int u = 0; u < p; ++u)  // u still live
                        nfa.add_edge(sid(pr, pav), c,
                                     sid(dr.next(pr, pa.id(u, c)), a.next(pav, u)));
                    if (a.is_final(pav))  // u ends before this position
                        nfa.add_edge(sid(pr, pav), c, sid(dr.next(pr, pa.id(pa.pad, c)), kDoneA));
                } else {
                    nfa.add_edge(sid(pr, pav), c, sid(dr.next(pr, pa.id(pa.pad, c)), kDoneA));
                }
            }
    return minimize(determinize(nfa, cap));
}

inline Dfa relation_range(const PaddedPairAutomaton& r, int cap = kStateCap) {
    return image(r, universal_dfa(r.pa.base), cap);
}

inline Dfa relation_domain(const PaddedPairAutomaton& r, int cap = kStateCap) {
    return image(swap_tracks(r), universal_dfa(r.pa.base), cap);
}

// {(u,v) in L x L : u comes strictly before v in radix order}.
inline PaddedPairAutomaton radix_order_relation(const NumerationSystem& S) {
    const Dfa& d = S.dfa();
    PairAlphabet pa = PairAlphabet::over(d.alphabet());
    int p = d.alphabet().size(), nl = pa.pairs.size();
    enum Cmp { EQ = 0, LT = 1, GT = 2 };
    // states: (qu, qv, cmp) while both run; (qv) after u ended; dead
    int n = d.state_count();
    auto both_id = [&](State qu, State qv, int cmp) { return (qu * n + qv) * 3 + cmp; };
    int uend_base = n * n * 3;
    auto uend_id = [&](State qv) { return uend_base + qv; };
    int dead = uend_base + n;
    int total = dead + 1;
    std::vector<bool> fin(total, false);
    std::vector<State> delta(static_cast<std::size_t>(total) * nl, dead);
    for (State qu = 0; qu < n; ++qu)
        for (State qv = 0; qv < n; ++qv)
            for (int cmp = 0; cmp < 3; ++cmp) {
                int from = both_id(qu, qv, cmp);
                fin[from] = cmp == LT && d.is_final(qu) && d.is_final(qv);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < p; ++j) {
                        int nc = cmp != EQ ? cmp : (i < j ? LT : (i > j ? GT : EQ));
                        delta[from * nl + pa.id(i, j)] = both_id(d.next(qu, i), d.next(qv, j), nc);
                    }
                if (d.is_final(qu))  // shorter-first rule: u in L and |u| < |v|
                    for (int j = 0; j < p; ++j)
                        delta[from * nl + pa.id(pa.pad, j)] = uend_id(d.next(qv, j));
            }
    for (State qv = 0; qv < n; ++qv) {
        fin[uend_id(qv)] = d.is_final(qv);
        for (int j = 0; j < p; ++j) delta[uend_id(qv) * nl + pa.id(pa.pad, j)] = uend_id(d.next(qv, j));
    }
    Dfa raw(pa.pairs, total, both_id(d.initial(), d.initial(), EQ), std::move(fin),
            std::move(delta));
    return {pa, minimize(raw)};
}

// {(w, successor(w)) : w in L}, built as O \ (O o O) from the radix
// order relation O.
inline PaddedPairAutomaton successor_relation(const NumerationSystem& S, int cap = kStateCap) {
    PaddedPairAutomaton order = radix_order_relation(S);
    PaddedPairAutomaton skip = compose(order, order, cap);
    return relation_difference(order, skip);
}

// Minimal DFA of rep(val(L(A)) + t), via t successive successor images.
inline Dfa translate_dfa(const NumerationSystem& S, const Dfa& a, const Int& t,
                         int cap = kStateCap) {
    Dfa sub = detail::rerank_dfa(a, S.alphabet());
    if (!is_empty(difference(sub, S.dfa())))
        throw DomainError("translate_dfa: L(A) is not a subset of L");
    if (t < 0) throw DomainError("translate_dfa: t must be >= 0");
    Dfa cur = minimize(sub);
    if (t == 0) return cur;
    PaddedPairAutomaton succ = successor_relation(S, cap);
    for (Int i = 0; i < t; ++i) cur = image(succ, cur, cap);
    return cur;
}

// Letter ranks of one alphabet re-expressed in another ordering of the
// same symbols.
inline Word translate_ranks(const Alphabet& from, const Alphabet& to, const Word& w) {
    Word out(w);
    for (int& c : out) c = to.rank(from.name(c));
    return out;
}

// Change-of-system maps between two systems S and T. theta takes a word
// in S's letter ranks and returns one in T's; theta_prime works on values.
inline Word theta(const NumerationSystem& S, const NumerationSystem& T, const Word& w) {
    return T.rep(S.val(w));
}

inline Int theta_prime(const NumerationSystem& S, const NumerationSystem& T, const Int& n) {
    Word w = S.rep(n);
    return T.val(translate_ranks(S.alphabet(), T.alphabet(), w));
}

namespace detail {

inline void require_same_language(const NumerationSystem& S, const NumerationSystem& T,
                                  const char* who) {
    Dfa t_as_s = rerank_dfa(T.dfa(), S.alphabet());
    if (!equivalent(S.dfa(), t_as_s))
        throw DomainError(std::string(who) + ": systems must share the same language");
}

// Words of length n accepted from state k, in lexicographic order of the
// automaton's own alphabet, emitted as rank words of `out_alphabet`.
inline std::vector<Word> words_from_state(const Dfa& d, CountTable& counts, State k, int n,
                                          const Alphabet& out_alphabet) {
    std::vector<int> to_out(d.alphabet().size());
    for (int c = 0; c < d.alphabet().size(); ++c) to_out[c] = out_alphabet.rank(d.alphabet().name(c));
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, State s, int left) -> void {
        if (counts.count(s, left) == 0) return;
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < d.alphabet().size(); ++c) {
            cur.push_back(to_out[c]);
            self(self, d.next(s, c), left - 1);
            cur.pop_back();
        }
    };
    rec(rec, k, n);
    return out;
}

}  // namespace detail

// Graph of Theta_{S,T} for reordered systems whose state counts agree
// from some length n0 on: letter-by-letter rank translation plus
// terminal blocks of length n0 paired by equal lexicographic rank.
// Words shorter than n0 are tabulated explicitly.
inline PaddedPairAutomaton theta_graph_equal_counts(const NumerationSystem& S,
                                                    const NumerationSystem& T,
                                                    int cap = kStateCap) {
    detail::require_same_language(S, T, "theta_graph_equal_counts");
    auto bound = equal_count_bound(S.dfa());
    if (!bound)
        throw DomainError("theta_graph_equal_counts: equal-count hypothesis does not hold");
    auto [n0, lambda] = *bound;

    const Dfa& M = S.dfa();
    Dfa N = detail::rerank_dfa(T.dfa(), S.alphabet());  // y-track, letters in S ranks
    CountTable m_counts(M);
    // enumerating N with letters tried in T's order yields the T-lex sequence
    Dfa n_in_t_order = detail::rerank_dfa(N, T.alphabet());
    CountTable nt_counts(n_in_t_order);
    int p = S.alphabet().size();
    // nu[i] = S-rank of the i-th letter under T's order
    std::vector<int> nu(p);
    for (int i = 0; i < p; ++i) nu[i] = S.alphabet().rank(T.alphabet().name(i));

    PairAlphabet pa = PairAlphabet::over(S.alphabet());
    Nfa nfa(pa.pairs);
    int nm = M.state_count(), nn = N.state_count();
    std::vector<State> grid(static_cast<std::size_t>(nm) * nn);
    for (auto& g : grid) g = nfa.add_state();
    State f = nfa.add_state();
    nfa.add_final(f);
    nfa.add_initial(grid[M.initial() * nn + N.initial()]);
    for (State k = 0; k < nm; ++k)
        for (State k2 = 0; k2 < nn; ++k2) {
            State from = grid[k * nn + k2];
            for (int i = 0; i < p; ++i)
                nfa.add_edge(from, pa.id(i, nu[i]),
                             grid[M.next(k, i) * nn + N.next(k2, nu[i])]);
            // terminal blocks: the m-th length-n0 word of L_k under <
            // pairs with the m-th of L_{k'} under the other order
            auto bx = detail::words_from_state(M, m_counts, k, n0, S.alphabet());
            auto by = detail::words_from_state(n_in_t_order, nt_counts, k2, n0, S.alphabet());
            if (bx.size() != by.size())
                throw Error("theta_graph_equal_counts: block counts differ (hypothesis bug)");
            for (std::size_t mth = 0; mth < bx.size(); ++mth) {
                State at = from;
                for (int pos = 0; pos < n0; ++pos) {
                    State nxt = pos + 1 == n0 ? f : nfa.add_state();
                    nfa.add_edge(at, pa.id(bx[mth][pos], by[mth][pos]), nxt);
                    at = nxt;
                }
                if (n0 == 0) nfa.add_edge(at, Nfa::kEpsilon, f);
            }
        }
    // words shorter than n0, tabulated via the ranking maps
    State table_init = nfa.add_state();
    nfa.add_initial(table_init);
    for (int len = 0; len < n0; ++len) {
        auto xs = detail::words_from_state(M, m_counts, M.initial(), len, S.alphabet());
        for (const Word& x : xs) {
            Word y = theta(S, T, x);
            Word yr(y);  // y is in T ranks; translate to S ranks
            for (auto& c : yr) c = S.alphabet().rank(T.alphabet().name(c));
            if (x.empty()) {
                nfa.add_final(table_init);
                continue;
            }
            State at = table_init;
            for (std::size_t pos = 0; pos < x.size(); ++pos) {
                State nxt = nfa.add_state();
                nfa.add_edge(at, pa.id(x[pos], yr[pos]), nxt);
                at = nxt;
            }
            nfa.add_final(at);
        }
    }
    return {pa, minimize(determinize(nfa, cap))};
}

// Graph of Theta_{S,T} for a d-slender language: the union over j of the
// per-length j-th-smallest layers of the two orders, length-synchronized.
inline PaddedPairAutomaton theta_graph_slender(const NumerationSystem& S,
                                               const NumerationSystem& T, int cap = kStateCap) {
    detail::require_same_language(S, T, "theta_graph_slender");
    auto d_min = slenderness(S.dfa());
    if (!d_min) throw DomainError("theta_graph_slender: language is not slender");
    int d = static_cast<int>(to_long(*d_min));

    PairAlphabet pa = PairAlphabet::over(S.alphabet());
    Dfa rest_s = S.dfa();
    Dfa rest_t = detail::rerank_dfa(T.dfa(), T.alphabet());  // T's own order
    Dfa acc = empty_dfa(pa.pairs);
    for (int j = 0; j < d; ++j) {
        Dfa layer_s = first_per_length(rest_s, cap);
        Dfa layer_t_in_t = first_per_length(rest_t, cap);
        Dfa layer_t = detail::rerank_dfa(layer_t_in_t, S.alphabet());
        // synchronized product over real letter pairs
        int n1 = layer_s.state_count(), n2 = layer_t.state_count();
        int total = n1 * n2 + 1, dead = n1 * n2;
        std::vector<bool> fin(total, false);
        std::vector<State> delta(static_cast<std::size_t>(total) * pa.pairs.size(), dead);
        for (State a = 0; a < n1; ++a)
            for (State b = 0; b < n2; ++b) {
                fin[a * n2 + b] = layer_s.is_final(a) && layer_t.is_final(b);
                for (int i = 0; i < pa.base.size(); ++i)
                    for (int jj = 0; jj < pa.base.size(); ++jj)
                        delta[(a * n2 + b) * pa.pairs.size() + pa.id(i, jj)] =
                            layer_s.next(a, i) * n2 + layer_t.next(b, jj);
            }
        Dfa prod(pa.pairs, total, layer_s.initial() * n2 + layer_t.initial(), std::move(fin),
                 std::move(delta));
        acc = union_of(acc, prod);
        rest_s = minimize(difference(rest_s, layer_s));
        rest_t = minimize(difference(rest_t, layer_t_in_t));
    }
    return {pa, minimize(acc)};
}

}  // namespace ans

#endif
