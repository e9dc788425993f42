#ifndef ANS_AUTOMATON_HPP
#define ANS_AUTOMATON_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "ans/alphabet.hpp"
#include "ans/errors.hpp"

namespace ans {

using State = int;

// Complete deterministic automaton. Values are immutable once built;
// every operation on them returns a new automaton.
class Dfa {
  public:
    Dfa() = default;

    Dfa(Alphabet alphabet, int state_count, State initial, std::vector<bool> finals,
        std::vector<State> delta)
        : alphabet_(std::move(alphabet)),
          states_(state_count),
          initial_(initial),
          final_(std::move(finals)),
          delta_(std::move(delta)) {
        if (states_ <= 0) throw DomainError("DFA needs at least one state");
        if (initial_ < 0 || initial_ >= states_) throw DomainError("bad initial state");
        if (static_cast<int>(final_.size()) != states_ ||
            static_cast<int>(delta_.size()) != states_ * alphabet_.size())
            throw DomainError("inconsistent DFA tables");
        for (State t : delta_)
            if (t < 0 || t >= states_) throw DomainError("transition to invalid state");
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return states_; }
    State initial() const { return initial_; }
    bool is_final(State s) const { return final_[s]; }
    State next(State s, int letter) const { return delta_[s * alphabet_.size() + letter]; }

    State run(State from, const Word& w) const {
        State s = from;
        for (int c : w) s = next(s, c);
        return s;
    }

    bool accepts(const Word& w) const { return final_[run(initial_, w)]; }
    bool accepts(std::string_view s) const { return accepts(word_from_string(alphabet_, s)); }

    std::vector<State> final_states() const {
        std::vector<State> f;
        for (State s = 0; s < states_; ++s)
            if (final_[s]) f.push_back(s);
        return f;
    }

    // States from which no final state is reachable.
    std::vector<bool> dead_states() const {
        std::vector<bool> alive(states_, false);
        std::deque<State> queue;
        for (State s = 0; s < states_; ++s)
            if (final_[s]) {
                alive[s] = true;
                queue.push_back(s);
            }
        // reverse reachability
        std::vector<std::vector<State>> preds(states_);
        for (State s = 0; s < states_; ++s)
            for (int c = 0; c < alphabet_.size(); ++c) preds[next(s, c)].push_back(s);
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            for (State p : preds[s])
                if (!alive[p]) {
                    alive[p] = true;
                    queue.push_back(p);
                }
        }
        std::vector<bool> dead(states_);
        for (State s = 0; s < states_; ++s) dead[s] = !alive[s];
        return dead;
    }

    std::vector<bool> reachable_states() const {
        std::vector<bool> seen(states_, false);
        std::deque<State> queue{initial_};
        seen[initial_] = true;
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            for (int c = 0; c < alphabet_.size(); ++c) {
                State t = next(s, c);
                if (!seen[t]) {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        return seen;
    }

    // Renumber states breadth-first from the initial state, exploring
    // letters in alphabet order; unreachable states are dropped. This is
    // the canonical form used for reproducible serialization.
    Dfa canonicalized() const {
        std::vector<State> order(states_, -1);
        std::vector<State> bfs;
        order[initial_] = 0;
        bfs.push_back(initial_);
        for (std::size_t i = 0; i < bfs.size(); ++i) {
            State s = bfs[i];
            for (int c = 0; c < alphabet_.size(); ++c) {
                State t = next(s, c);
                if (order[t] < 0) {
                    order[t] = static_cast<State>(bfs.size());
                    bfs.push_back(t);
                }
            }
        }
        int n = static_cast<int>(bfs.size());
        std::vector<bool> fin(n);
        std::vector<State> delta(static_cast<std::size_t>(n) * alphabet_.size());
        for (State s = 0; s < states_; ++s) {
            if (order[s] < 0) continue;
            fin[order[s]] = final_[s];
            for (int c = 0; c < alphabet_.size(); ++c)
                delta[order[s] * alphabet_.size() + c] = order[next(s, c)];
        }
        return Dfa(alphabet_, n, 0, std::move(fin), std::move(delta));
    }

  private:
    Alphabet alphabet_;
    int states_ = 1;
    State initial_ = 0;
    std::vector<bool> final_{false};
    std::vector<State> delta_;
};

// Nondeterministic automaton with epsilon moves; the intermediate form
// for regex compilation, reversal and relation constructions.
class Nfa {
  public:
    static constexpr int kEpsilon = -1;

    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return static_cast<int>(trans_.size()); }

    State add_state() {
        trans_.emplace_back();
        return state_count() - 1;
    }

    void add_edge(State from, int letter, State to) {
        if (letter != kEpsilon && (letter < 0 || letter >= alphabet_.size()))
            throw DomainError("NFA edge with invalid letter");
        if (from < 0 || from >= state_count() || to < 0 || to >= state_count())
            throw DomainError("NFA edge with invalid state");
        trans_[from][letter].insert(to);
    }

    void add_initial(State s) { initials_.insert(s); }
    void add_final(State s) { finals_.insert(s); }

    const std::set<State>& initials() const { return initials_; }
    const std::set<State>& finals() const { return finals_; }

    const std::map<int, std::set<State>>& edges(State s) const { return trans_[s]; }

    std::set<State> epsilon_closure(std::set<State> states) const {
        std::deque<State> queue(states.begin(), states.end());
        while (!queue.empty()) {
            State s = queue.front();
            queue.pop_front();
            auto it = trans_[s].find(kEpsilon);
            if (it == trans_[s].end()) continue;
            for (State t : it->second)
                if (states.insert(t).second) queue.push_back(t);
        }
        return states;
    }

  private:
    Alphabet alphabet_;
    std::vector<std::map<int, std::set<State>>> trans_;
    std::set<State> initials_;
    std::set<State> finals_;
};

}  // namespace ans

#endif
