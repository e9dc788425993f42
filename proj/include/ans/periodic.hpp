#ifndef ANS_PERIODIC_HPP
#define ANS_PERIODIC_HPP

#include <map>
#include <utility>
#include <vector>

#include "ans/numeration.hpp"

namespace ans {

namespace detail {

// Orbit of (u_n mod q, v_{n-1}(s) mod q), which is closed under n -> n+1;
// phases index its rho shape: preperiod entries then a cycle.
struct PhaseTable {
    std::vector<std::vector<Int>> u_mod;  // per phase, per state
    std::vector<Int> vprev_mod;           // per phase: v_{n-1}(s) mod q
    std::vector<int> next;                // phase successor
};

inline PhaseTable phase_table(const Dfa& d, const Int& q) {
    PhaseTable t;
    int n = d.state_count(), p = d.alphabet().size();
    std::vector<Int> u(n);
    for (State k = 0; k < n; ++k) u[k] = (d.is_final(k) ? Int(1) : Int(0)) % q;
    Int vprev = 0;
    std::map<std::pair<std::vector<Int>, Int>, int> seen;
    for (;;) {
        auto key = std::make_pair(u, vprev);
        auto it = seen.find(key);
        if (it != seen.end()) {
            t.next.back() = it->second;
            break;
        }
        int id = static_cast<int>(t.u_mod.size());
        seen.emplace(std::move(key), id);
        t.u_mod.push_back(u);
        t.vprev_mod.push_back(vprev);
        t.next.push_back(id + 1);
        Int vnext = (vprev + u[d.initial()]) % q;
        std::vector<Int> unext(n);
        for (State k = 0; k < n; ++k) {
            for (int c = 0; c < p; ++c) unext[k] += u[d.next(k, c)];
            unext[k] %= q;
        }
        u = std::move(unext);
        vprev = vnext;
    }
    return t;
}

}  // namespace detail

// Minimal DFA of rep_S({n : n = p mod q, n >= p}). The congruence class
// is recognized by a right-to-left automaton whose states carry, for
// every state k of M_L, the value rank_k(suffix) mod q, plus the phase of
// the suffix length; it is then reversed, determinized, intersected with
// M_L and minimized. For p >= q the finitely many class members below p
// are removed afterwards.
inline Dfa progression_dfa(const NumerationSystem& S, const Int& p, const Int& q,
                           int cap = kStateCap) {
    if (q < 1) throw DomainError("progression_dfa: q must be >= 1");
    if (p < 0) throw DomainError("progression_dfa: p must be >= 0");
    const Dfa& d = S.dfa();
    int kappa = d.state_count(), nl = d.alphabet().size();
    Int pmod = p % q;

    detail::PhaseTable phases = detail::phase_table(d, q);

    // construction budget: at most (r+t) * q^kappa states can exist
    Int budget = Int(phases.u_mod.size());
    for (int i = 0; i < kappa; ++i) budget *= q;

    // Right-to-left congruence automaton over reversed words.
    struct Key {
        int phase;
        std::vector<Int> rank_mod;
        bool operator<(const Key& o) const {
            return std::tie(phase, rank_mod) < std::tie(o.phase, o.rank_mod);
        }
    };
    std::map<Key, State> ids;
    std::vector<Key> keys;
    auto intern = [&](Key k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(keys.size());
        if (id >= cap) throw ResourceError("progression_dfa: state cap exceeded");
        ids.emplace(k, id);
        keys.push_back(std::move(k));
        return id;
    };
    intern(Key{0, std::vector<Int>(kappa, Int(0))});
    std::vector<State> delta;
    std::vector<bool> fin;
    for (State idx = 0; idx < static_cast<State>(keys.size()); ++idx) {
        Key cur = keys[idx];  // copy: keys grows below
        fin.push_back((phases.vprev_mod[cur.phase] + cur.rank_mod[d.initial()]) % q == pmod);
        const std::vector<Int>& u = phases.u_mod[cur.phase];
        for (int c = 0; c < nl; ++c) {
            Key nxt;
            nxt.phase = phases.next[cur.phase];
            nxt.rank_mod.resize(kappa);
            for (State k = 0; k < kappa; ++k) {
                Int r = cur.rank_mod[d.next(k, c)];
                for (int j = 0; j < c; ++j) r += u[d.next(k, j)];
                nxt.rank_mod[k] = r % q;
            }
            delta.push_back(intern(std::move(nxt)));
        }
    }
    if (Int(keys.size()) > budget)
        throw Error("progression_dfa: construction exceeded its (r+t) q^kappa bound");
    Dfa r2l(d.alphabet(), static_cast<int>(keys.size()), 0, std::move(fin), std::move(delta));
    Dfa congruent = minimize(intersect(determinize(reverse(r2l), cap), d));

    if (p < q) return congruent;
    // remove the class members below p
    std::vector<Word> removed;
    for (Int x = pmod; x < p; x += q) removed.push_back(S.rep(x));
    return minimize(difference(congruent, finite_language_dfa(d.alphabet(), removed)));
}

// Minimal DFA of rep_S(finite_part union of the progressions p_i + N q_i).
inline Dfa ultimately_periodic_dfa(const NumerationSystem& S, const std::vector<Int>& finite_part,
                                   const std::vector<std::pair<Int, Int>>& progressions) {
    std::vector<Word> words;
    for (const Int& x : finite_part) words.push_back(S.rep(x));
    Dfa acc = finite_language_dfa(S.alphabet(), words);
    for (const auto& [p, q] : progressions) acc = union_of(acc, progression_dfa(S, p, q));
    return minimize(acc);
}

namespace detail {

inline Dfa per_length_extreme(const Dfa& d, bool first, int cap) {
    int nl = d.alphabet().size();
    // deterministic product: current state x set of states reached by
    // strictly smaller (resp. greater) words of the same length
    struct Key {
        State k;
        std::vector<bool> t;
        bool operator<(const Key& o) const { return std::tie(k, t) < std::tie(o.k, o.t); }
    };
    std::map<Key, State> ids;
    std::vector<Key> keys;
    auto intern = [&](Key key) {
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(keys.size());
        if (id >= cap) throw ResourceError("per-length extreme construction: state cap exceeded");
        ids.emplace(key, id);
        keys.push_back(std::move(key));
        return id;
    };
    intern(Key{d.initial(), std::vector<bool>(d.state_count(), false)});
    std::vector<State> delta;
    std::vector<bool> fin;
    for (State idx = 0; idx < static_cast<State>(keys.size()); ++idx) {
        Key cur = keys[idx];
        bool ok = d.is_final(cur.k);
        for (State s = 0; ok && s < d.state_count(); ++s)
            if (cur.t[s] && d.is_final(s)) ok = false;
        fin.push_back(ok);
        for (int c = 0; c < nl; ++c) {
            Key nxt;
            nxt.k = d.next(cur.k, c);
            nxt.t.assign(d.state_count(), false);
            for (State s = 0; s < d.state_count(); ++s)
                if (cur.t[s])
                    for (int j = 0; j < nl; ++j) nxt.t[d.next(s, j)] = true;
            if (first) {
                for (int j = 0; j < c; ++j) nxt.t[d.next(cur.k, j)] = true;
            } else {
                for (int j = c + 1; j < nl; ++j) nxt.t[d.next(cur.k, j)] = true;
            }
            delta.push_back(intern(std::move(nxt)));
        }
    }
    return minimize(
        Dfa(d.alphabet(), static_cast<int>(keys.size()), 0, std::move(fin), std::move(delta)));
}

}  // namespace detail

// I(L,<): for each inhabited length, the lexicographically least word.
inline Dfa first_per_length(const Dfa& d, int cap = kStateCap) {
    return detail::per_length_extreme(d, true, cap);
}

// G(L,<): the lexicographically greatest word of each length.
inline Dfa last_per_length(const Dfa& d, int cap = kStateCap) {
    return detail::per_length_extreme(d, false, cap);
}

}  // namespace ans

#endif
