#ifndef ANS_OPS_HPP
#define ANS_OPS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/errors.hpp"

namespace ans {

// Default cap on constructed states for the potentially explosive
// operations (subset construction, relation composition).
inline constexpr int kStateCap = 2'000'000;

inline Dfa determinize(const Nfa& n, int cap = kStateCap) {
    const Alphabet& ab = n.alphabet();
    std::map<std::set<State>, State> ids;
    std::vector<std::set<State>> sets;
    auto intern = [&](std::set<State> s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(sets.size());
        if (id >= cap) throw ResourceError("determinization exceeded state cap");
        ids.emplace(s, id);
        sets.push_back(std::move(s));
        return id;
    };
    State start = intern(n.epsilon_closure(n.initials()));
    std::vector<State> delta;
    std::vector<bool> fin;
    for (State q = 0; q < static_cast<State>(sets.size()); ++q) {
        std::set<State> cur = sets[q];  // copy: sets grows below
        bool f = false;
        for (State s : cur)
            if (n.finals().count(s)) f = true;
        fin.push_back(f);
        for (int c = 0; c < ab.size(); ++c) {
            std::set<State> next;
            for (State s : cur) {
                auto it = n.edges(s).find(c);
                if (it != n.edges(s).end()) next.insert(it->second.begin(), it->second.end());
            }
            delta.push_back(intern(n.epsilon_closure(std::move(next))));
        }
    }
    return Dfa(ab, static_cast<int>(sets.size()), start, std::move(fin), std::move(delta))
        .canonicalized();
}

inline Nfa nfa_of(const Dfa& d) {
    Nfa n(d.alphabet());
    for (State s = 0; s < d.state_count(); ++s) n.add_state();
    n.add_initial(d.initial());
    for (State s = 0; s < d.state_count(); ++s) {
        if (d.is_final(s)) n.add_final(s);
        for (int c = 0; c < d.alphabet().size(); ++c) n.add_edge(s, c, d.next(s, c));
    }
    return n;
}

// Transition reversal; initial and final roles swap.
inline Nfa reverse(const Dfa& d) {
    Nfa n(d.alphabet());
    for (State s = 0; s < d.state_count(); ++s) n.add_state();
    for (State s = 0; s < d.state_count(); ++s) {
        if (d.is_final(s)) n.add_initial(s);
        for (int c = 0; c < d.alphabet().size(); ++c) n.add_edge(d.next(s, c), c, s);
    }
    n.add_final(d.initial());
    return n;
}

// Moore partition refinement followed by canonical renumbering, so
// minimize(minimize(d)) is byte-identical to minimize(d).
inline Dfa minimize(const Dfa& d0) {
    Dfa d = d0.canonicalized();  // drop unreachable states first
    int n = d.state_count(), p = d.alphabet().size();
    std::vector<int> cls(n);
    for (State s = 0; s < n; ++s) cls[s] = d.is_final(s) ? 1 : 0;
    int count = static_cast<int>(std::set<int>(cls.begin(), cls.end()).size());
    for (;;) {
        // A round that splits no class is a fixpoint: track the class count.
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (State s = 0; s < n; ++s) {
            std::vector<int> sig;
            sig.reserve(p + 1);
            sig.push_back(cls[s]);
            for (int c = 0; c < p; ++c) sig.push_back(cls[d.next(s, c)]);
            auto [it, _] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next_cls[s] = it->second;
        }
        int next_count = static_cast<int>(sig_ids.size());
        cls = std::move(next_cls);
        if (next_count == count) break;
        count = next_count;
    }
    std::vector<bool> fin(count, false);
    std::vector<State> delta(static_cast<std::size_t>(count) * p);
    for (State s = 0; s < n; ++s) {
        fin[cls[s]] = d.is_final(s);
        for (int c = 0; c < p; ++c) delta[cls[s] * p + c] = cls[d.next(s, c)];
    }
    return Dfa(d.alphabet(), count, cls[d.initial()], std::move(fin), std::move(delta))
        .canonicalized();
}

inline Dfa complement(const Dfa& d) {
    std::vector<bool> fin(d.state_count());
    std::vector<State> delta(static_cast<std::size_t>(d.state_count()) * d.alphabet().size());
    for (State s = 0; s < d.state_count(); ++s) {
        fin[s] = !d.is_final(s);
        for (int c = 0; c < d.alphabet().size(); ++c) delta[s * d.alphabet().size() + c] = d.next(s, c);
    }
    return Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(fin), std::move(delta));
}

namespace detail {

template <typename AcceptFn>
Dfa product(const Dfa& a, const Dfa& b, AcceptFn accept) {
    if (a.alphabet() != b.alphabet()) throw DomainError("alphabet mismatch in product");
    int p = a.alphabet().size();
    std::map<std::pair<State, State>, State> ids;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State x, State y) {
        auto it = ids.find({x, y});
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(pairs.size());
        ids.emplace(std::make_pair(x, y), id);
        pairs.emplace_back(x, y);
        return id;
    };
    intern(a.initial(), b.initial());
    std::vector<State> delta;
    std::vector<bool> fin;
    for (State q = 0; q < static_cast<State>(pairs.size()); ++q) {
        auto [x, y] = pairs[q];
        fin.push_back(accept(a.is_final(x), b.is_final(y)));
        for (int c = 0; c < p; ++c) delta.push_back(intern(a.next(x, c), b.next(y, c)));
    }
    return Dfa(a.alphabet(), static_cast<int>(pairs.size()), 0, std::move(fin), std::move(delta));
}

}  // namespace detail

inline Dfa intersect(const Dfa& a, const Dfa& b) {
    return detail::product(a, b, [](bool x, bool y) { return x && y; });
}

inline Dfa union_of(const Dfa& a, const Dfa& b) {
    return detail::product(a, b, [](bool x, bool y) { return x || y; });
}

inline Dfa difference(const Dfa& a, const Dfa& b) {
    return detail::product(a, b, [](bool x, bool y) { return x && !y; });
}

inline bool is_empty(const Dfa& d) {
    auto reach = d.reachable_states();
    for (State s = 0; s < d.state_count(); ++s)
        if (reach[s] && d.is_final(s)) return false;
    return true;
}

inline bool equivalent(const Dfa& a, const Dfa& b) {
    return is_empty(difference(a, b)) && is_empty(difference(b, a));
}

// (reachable, co-reachable) state sets.
inline std::pair<std::vector<bool>, std::vector<bool>> trim_info(const Dfa& d) {
    auto reach = d.reachable_states();
    auto dead = d.dead_states();
    std::vector<bool> coreach(d.state_count());
    for (State s = 0; s < d.state_count(); ++s) coreach[s] = !dead[s];
    return {reach, coreach};
}

// True iff some useful state lies on a cycle, i.e. L(d) is infinite.
inline bool is_infinite(const Dfa& d) {
    auto [reach, coreach] = trim_info(d);
    int n = d.state_count();
    std::vector<bool> useful(n);
    for (State s = 0; s < n; ++s) useful[s] = reach[s] && coreach[s];
    // DFS cycle detection restricted to useful states
    std::vector<int> color(n, 0);
    std::vector<std::pair<State, int>> stack;
    for (State s0 = 0; s0 < n; ++s0) {
        if (!useful[s0] || color[s0] != 0) continue;
        stack.push_back({s0, 0});
        color[s0] = 1;
        while (!stack.empty()) {
            auto& [s, c] = stack.back();
            if (c == d.alphabet().size()) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            State t = d.next(s, c++);
            if (!useful[t]) continue;
            if (color[t] == 1) return true;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return false;
}

// Singleton and finite-set automata.
inline Dfa word_dfa(const Alphabet& ab, const Word& w) {
    int n = static_cast<int>(w.size()) + 2;  // chain + sink
    State sink = n - 1;
    std::vector<bool> fin(n, false);
    fin[w.size()] = true;
    std::vector<State> delta(static_cast<std::size_t>(n) * ab.size(), sink);
    for (std::size_t i = 0; i < w.size(); ++i) delta[i * ab.size() + w[i]] = static_cast<State>(i + 1);
    return Dfa(ab, n, 0, std::move(fin), std::move(delta));
}

inline Dfa empty_dfa(const Alphabet& ab) {
    return Dfa(ab, 1, 0, {false}, std::vector<State>(ab.size(), 0));
}

inline Dfa universal_dfa(const Alphabet& ab) {
    return Dfa(ab, 1, 0, {true}, std::vector<State>(ab.size(), 0));
}

inline Dfa finite_language_dfa(const Alphabet& ab, const std::vector<Word>& words) {
    Dfa acc = empty_dfa(ab);
    for (const Word& w : words) acc = union_of(acc, word_dfa(ab, w));
    return minimize(acc);
}

}  // namespace ans

#endif
