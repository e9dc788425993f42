#ifndef ANS_COUNTING_HPP
#define ANS_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/bigint.hpp"
#include "ans/ops.hpp"

namespace ans {

// Per-state word counts of a DFA:
//   u_l(k) = number of words of length l accepted from state k,
//   v_l(k) = number of words of length at most l accepted from k.
// The memo grows monotonically; extension is single-writer, readers may
// query lengths <= computed_up_to() of a snapshot.
class CountTable {
  public:
    explicit CountTable(Dfa owner) : dfa_(std::move(owner)) {
        std::vector<Int> u0(dfa_.state_count());
        for (State k = 0; k < dfa_.state_count(); ++k) u0[k] = dfa_.is_final(k) ? 1 : 0;
        u_.push_back(u0);
        v_.push_back(std::move(u0));
    }

    const Dfa& owner() const { return dfa_; }
    int computed_up_to() const { return static_cast<int>(u_.size()) - 1; }

    void ensure(int length) {
        while (computed_up_to() < length) {
            const std::vector<Int>& prev = u_.back();
            std::vector<Int> next(dfa_.state_count());
            for (State k = 0; k < dfa_.state_count(); ++k)
                for (int c = 0; c < dfa_.alphabet().size(); ++c) next[k] += prev[dfa_.next(k, c)];
            std::vector<Int> vnext(v_.back());
            for (State k = 0; k < dfa_.state_count(); ++k) vnext[k] += next[k];
            u_.push_back(std::move(next));
            v_.push_back(std::move(vnext));
        }
    }

    const Int& count(State k, int length) {
        ensure(length);
        return u_[length][k];
    }

    // v_l(k); length -1 is allowed and yields 0.
    Int cumulative(State k, int length) {
        if (length < 0) return 0;
        ensure(length);
        return v_[length][k];
    }

    const std::vector<Int>& count_row(int length) {
        ensure(length);
        return u_[length];
    }

  private:
    Dfa dfa_;
    std::vector<std::vector<Int>> u_;
    std::vector<std::vector<Int>> v_;
};

// Incidence matrix A_L of a minimal automaton together with the final
// characteristic vector f_L; (A^m f)_i = u_m(i).
struct IncidenceMatrix {
    std::vector<std::vector<Int>> entries;
    std::vector<Int> final_vector;

    int size() const { return static_cast<int>(entries.size()); }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        std::vector<Int> y(size());
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) y[i] += entries[i][j] * x[j];
        return y;
    }
};

namespace detail {

inline void require_minimal(const Dfa& d, const char* who) {
    if (minimize(d).state_count() != d.state_count())
        throw DomainError(std::string(who) + ": automaton must be minimal");
}

// Exact rank over the rationals (plain fraction elimination on Int pairs
// would do; boost's cpp_rational keeps it short).
inline int matrix_rank(std::vector<std::vector<Int>> m) {
    using Rat = boost::multiprecision::cpp_rational;
    int n = static_cast<int>(m.size());
    if (n == 0) return 0;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[rank][col];
            for (int j = col; j < n; ++j) a[r][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                             const std::vector<std::vector<Int>>& b) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Int>> c(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace detail

inline IncidenceMatrix incidence(const Dfa& d) {
    detail::require_minimal(d, "incidence");
    int n = d.state_count();
    IncidenceMatrix m;
    m.entries.assign(n, std::vector<Int>(n));
    m.final_vector.assign(n, 0);
    for (State i = 0; i < n; ++i) {
        for (int c = 0; c < d.alphabet().size(); ++c) m.entries[i][d.next(i, c)] += 1;
        if (d.is_final(i)) m.final_vector[i] = 1;
    }
    return m;
}

// Least n0 such that u_n(k) = u_n(k') for all states and all n >= n0,
// together with the common value at n0, when such an n0 exists. Per the
// minimum-polynomial characterization, n0 is at most the multiplicity m
// of 0 as root of the minimum polynomial of A_L, and the condition holds
// iff A^m f is a constant vector.
inline std::optional<std::pair<int, Int>> equal_count_bound(const Dfa& d) {
    detail::require_minimal(d, "equal_count_bound");
    IncidenceMatrix A = incidence(d);
    int n = A.size();
    // multiplicity of 0: least m with rank(A^m) = rank(A^{m+1})
    std::vector<std::vector<Int>> id(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    std::vector<std::vector<Int>> power = id;
    int m = 0;
    int prev_rank = n;
    for (;;) {
        auto next_power = detail::mat_mul(power, A.entries);
        int r = detail::matrix_rank(next_power);
        if (r == prev_rank) break;
        prev_rank = r;
        power = std::move(next_power);
        ++m;
        if (m > n) throw Error("equal_count_bound: rank sequence failed to stabilize");
    }
    auto constant_of = [](const std::vector<Int>& x) -> std::optional<Int> {
        for (const Int& e : x)
            if (e != x[0]) return std::nullopt;
        return x[0];
    };
    // A^m f decides the condition; the least valid n0 is then found by a
    // scan over n <= m (the two routes are cross-checked here).
    std::vector<Int> vec = A.final_vector;
    std::optional<int> least;
    Int lambda = 0;
    for (int i = 0; i <= m; ++i) {
        if (auto c = constant_of(vec)) {
            least = i;
            lambda = *c;
            break;
        }
        vec = A.apply(vec);
    }
    if (!least) return std::nullopt;
    if (*least > m) throw Error("equal_count_bound: scan disagrees with multiplicity bound");
    // consequence check: u_{n0+i}(k) = (#Sigma)^i * lambda for i <= 10
    Int expect = lambda;
    std::vector<Int> probe(static_cast<std::size_t>(n), lambda);
    for (int i = 1; i <= 10; ++i) {
        probe = A.apply(probe);
        expect *= d.alphabet().size();
        for (const Int& e : probe)
            if (e != expect) throw Error("equal_count_bound: geometric consequence violated");
    }
    return std::make_pair(*least, lambda);
}

// Least d with u_n(s) <= d for all n, or absent when u_n(s) is unbounded.
// Boundedness holds iff no useful state can reach two distinct cycles of
// the useful subautomaton (a state on two cycles counts).
inline std::optional<Int> slenderness(const Dfa& d) {
    detail::require_minimal(d, "slenderness");
    int n = d.state_count(), p = d.alphabet().size();
    auto [reach, coreach] = trim_info(d);
    std::vector<bool> useful(n);
    for (State s = 0; s < n; ++s) useful[s] = reach[s] && coreach[s];

    // Tarjan SCCs of the useful subgraph.
    std::vector<int> scc(n, -1), low(n), num(n, -1);
    std::vector<State> stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, scc_count = 0;
    std::vector<std::pair<State, int>> dfs;
    for (State s0 = 0; s0 < n; ++s0) {
        if (!useful[s0] || num[s0] >= 0) continue;
        dfs.push_back({s0, 0});
        num[s0] = low[s0] = counter++;
        stack.push_back(s0);
        on_stack[s0] = true;
        while (!dfs.empty()) {
            auto& [s, c] = dfs.back();
            if (c < p) {
                State t = d.next(s, c++);
                if (!useful[t]) continue;
                if (num[t] < 0) {
                    num[t] = low[t] = counter++;
                    stack.push_back(t);
                    on_stack[t] = true;
                    dfs.push_back({t, 0});
                } else if (on_stack[t]) {
                    low[s] = std::min(low[s], num[t]);
                }
            } else {
                if (low[s] == num[s]) {
                    for (;;) {
                        State t = stack.back();
                        stack.pop_back();
                        on_stack[t] = false;
                        scc[t] = scc_count;
                        if (t == s) break;
                    }
                    ++scc_count;
                }
                dfs.pop_back();
                if (!dfs.empty()) low[dfs.back().first] = std::min(low[dfs.back().first], low[s]);
            }
        }
    }

    // cyclic SCC = SCC with an internal edge
    std::vector<bool> cyclic(scc_count, false);
    std::vector<int> internal_out(n, 0);
    for (State s = 0; s < n; ++s) {
        if (!useful[s]) continue;
        for (int c = 0; c < p; ++c) {
            State t = d.next(s, c);
            if (useful[t] && scc[t] == scc[s]) {
                cyclic[scc[s]] = true;
                ++internal_out[s];
            }
        }
    }
    // two cycles through one state
    for (State s = 0; s < n; ++s)
        if (useful[s] && internal_out[s] > 1) return std::nullopt;
    // a cyclic SCC reaching another cyclic SCC
    std::vector<bool> reaches_cycle(n, false);  // strictly ahead of the state
    // propagate over reverse topological order: SCC ids from Tarjan come in
    // reverse topological order, so states can be processed by ascending id.
    std::vector<std::vector<State>> by_scc(scc_count);
    for (State s = 0; s < n; ++s)
        if (useful[s]) by_scc[scc[s]].push_back(s);
    std::vector<bool> scc_reaches(scc_count, false);  // reaches a cyclic SCC downstream
    for (int id = 0; id < scc_count; ++id) {
        bool down = false;
        for (State s : by_scc[id])
            for (int c = 0; c < p; ++c) {
                State t = d.next(s, c);
                if (!useful[t] || scc[t] == id) continue;
                if (cyclic[scc[t]] || scc_reaches[scc[t]]) down = true;
            }
        scc_reaches[id] = down;
        if (cyclic[id] && down) return std::nullopt;
    }

    // Bounded: the vector (u_n(k))_k takes finitely many values, so the
    // orbit cycles; take the maximum over one full pre-period + period.
    CountTable table(d);
    std::map<std::vector<Int>, int> seen;
    Int best = 0;
    for (int l = 0;; ++l) {
        const std::vector<Int>& row = table.count_row(l);
        if (!seen.emplace(row, l).second) break;
        if (row[d.initial()] > best) best = row[d.initial()];
        if (l > 1'000'000) throw ResourceError("slenderness: count orbit failed to cycle");
    }
    return best;
}

// Least (preperiod r, period t) with, for all n >= r,
// u_{n+t}(k) = u_n(k) mod q for every state and v_{n+t}(s) = v_n(s) mod q.
inline std::pair<int, int> mod_periodicity(const Dfa& d, const Int& q) {
    if (q < 1) throw DomainError("mod_periodicity: q must be >= 1");
    int n = d.state_count(), p = d.alphabet().size();
    std::vector<Int> u(n);
    for (State k = 0; k < n; ++k) u[k] = d.is_final(k) ? Int(1) : Int(0), u[k] %= q;
    Int v = u[d.initial()];
    std::map<std::pair<std::vector<Int>, Int>, int> seen;
    int idx = 0;
    for (;;) {
        auto key = std::make_pair(u, v);
        auto it = seen.find(key);
        if (it != seen.end()) return {it->second, idx - it->second};
        seen.emplace(std::move(key), idx);
        std::vector<Int> next(n);
        for (State k = 0; k < n; ++k) {
            for (int c = 0; c < p; ++c) next[k] += u[d.next(k, c)];
            next[k] %= q;
        }
        v = (v + next[d.initial()]) % q;
        u = std::move(next);
        ++idx;
    }
}

}  // namespace ans

#endif
