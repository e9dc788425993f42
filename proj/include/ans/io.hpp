#ifndef ANS_IO_HPP
#define ANS_IO_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/ops.hpp"

namespace ans {

// Line-oriented text DFA format, the interchange for every CLI command:
//
//   alphabet: a b c        (declaration order = numeration order <)
//   states: N
//   initial: i
//   finals: i j k
//   trans: src letter dst  (missing entries go to an implicit sink)
//
// Dead states are left implicit on output: transitions into them are
// omitted and re-created as the sink on input.
inline void write_dfa(std::ostream& out, const Dfa& d0) {
    Dfa d = d0.canonicalized();
    auto dead = d.dead_states();
    dead[d.initial()] = false;  // the initial state is always written
    std::vector<int> renum(d.state_count(), -1);
    int live = 0;
    for (State s = 0; s < d.state_count(); ++s)
        if (!dead[s]) renum[s] = live++;
    out << "alphabet:";
    for (const auto& n : d.alphabet().names()) out << ' ' << n;
    out << "\nstates: " << live;
    out << "\ninitial: " << renum[d.initial()];
    out << "\nfinals:";
    for (State s = 0; s < d.state_count(); ++s)
        if (!dead[s] && d.is_final(s)) out << ' ' << renum[s];
    out << '\n';
    for (State s = 0; s < d.state_count(); ++s) {
        if (dead[s]) continue;
        for (int c = 0; c < d.alphabet().size(); ++c) {
            State t = d.next(s, c);
            if (dead[t]) continue;
            out << "trans: " << renum[s] << ' ' << d.alphabet().name(c) << ' ' << renum[t] << '\n';
        }
    }
}

inline std::string dfa_to_string(const Dfa& d) {
    std::ostringstream ss;
    write_dfa(ss, d);
    return ss.str();
}

inline Dfa read_dfa(std::istream& in) {
    std::vector<std::string> letters;
    int states = -1, initial = -1;
    std::vector<int> finals;
    struct Edge {
        int src;
        std::string letter;
        int dst;
    };
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key) || key[0] == '#') continue;
        auto bad = [&](const std::string& what) -> ParseError {
            return ParseError("DFA file line " + std::to_string(lineno) + ": " + what);
        };
        if (key == "alphabet:") {
            std::string tok;
            while (ss >> tok) letters.push_back(tok);
        } else if (key == "states:") {
            if (!(ss >> states) || states <= 0) throw bad("bad state count");
        } else if (key == "initial:") {
            if (!(ss >> initial)) throw bad("bad initial state");
        } else if (key == "finals:") {
            int f;
            while (ss >> f) finals.push_back(f);
        } else if (key == "trans:") {
            Edge e;
            if (!(ss >> e.src >> e.letter >> e.dst)) throw bad("bad transition");
            edges.push_back(e);
        } else {
            throw bad("unknown directive '" + key + "'");
        }
    }
    if (letters.empty()) throw ParseError("DFA file: missing alphabet");
    if (states < 0) throw ParseError("DFA file: missing state count");
    if (initial < 0 || initial >= states) throw ParseError("DFA file: bad initial state");
    Alphabet ab{letters};
    int n = states + 1;  // implicit sink
    State sink = states;
    std::vector<bool> fin(n, false);
    for (int f : finals) {
        if (f < 0 || f >= states) throw ParseError("DFA file: final state out of range");
        fin[f] = true;
    }
    std::vector<State> delta(static_cast<std::size_t>(n) * ab.size(), sink);
    for (const Edge& e : edges) {
        if (e.src < 0 || e.src >= states || e.dst < 0 || e.dst >= states)
            throw ParseError("DFA file: transition state out of range");
        delta[e.src * ab.size() + ab.rank(e.letter)] = e.dst;
    }
    return Dfa(ab, n, initial, std::move(fin), std::move(delta)).canonicalized();
}

inline Dfa read_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_dfa(in);
}

inline void write_dfa_file(const std::string& path, const Dfa& d) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_dfa(out, d);
}

}  // namespace ans

#endif
