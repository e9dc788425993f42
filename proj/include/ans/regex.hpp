#ifndef ANS_REGEX_HPP
#define ANS_REGEX_HPP

#include <string>
#include <string_view>

#include "ans/automaton.hpp"
#include "ans/ops.hpp"

namespace ans {

// Tiny regex dialect: literals, concatenation, '|', '*', '( )',
// '.' (any letter), and '!(... )' for the complement of a group.
// Deliberately no character classes or bounded repetition.
namespace regex_detail {

struct Frag {
    Nfa nfa;
};

inline Frag literal_frag(const Alphabet& ab, int letter) {
    Nfa n(ab);
    State a = n.add_state(), b = n.add_state();
    n.add_initial(a);
    n.add_final(b);
    n.add_edge(a, letter, b);
    return {std::move(n)};
}

inline Frag dot_frag(const Alphabet& ab) {
    Nfa n(ab);
    State a = n.add_state(), b = n.add_state();
    n.add_initial(a);
    n.add_final(b);
    for (int c = 0; c < ab.size(); ++c) n.add_edge(a, c, b);
    return {std::move(n)};
}

inline Frag epsilon_frag(const Alphabet& ab) {
    Nfa n(ab);
    State a = n.add_state();
    n.add_initial(a);
    n.add_final(a);
    return {std::move(n)};
}

// Copy src into dst with renumbered states; returns the offset.
inline int splice(Nfa& dst, const Nfa& src) {
    int off = dst.state_count();
    for (State s = 0; s < src.state_count(); ++s) dst.add_state();
    for (State s = 0; s < src.state_count(); ++s)
        for (const auto& [letter, tos] : src.edges(s))
            for (State t : tos) dst.add_edge(off + s, letter, off + t);
    return off;
}

inline Frag concat(const Frag& f1, const Frag& f2) {
    Nfa n(f1.nfa.alphabet());
    int o1 = splice(n, f1.nfa), o2 = splice(n, f2.nfa);
    for (State s : f1.nfa.initials()) n.add_initial(o1 + s);
    for (State s : f1.nfa.finals())
        for (State t : f2.nfa.initials()) n.add_edge(o1 + s, Nfa::kEpsilon, o2 + t);
    for (State s : f2.nfa.finals()) n.add_final(o2 + s);
    return {std::move(n)};
}

inline Frag alternate(const Frag& f1, const Frag& f2) {
    Nfa n(f1.nfa.alphabet());
    int o1 = splice(n, f1.nfa), o2 = splice(n, f2.nfa);
    for (State s : f1.nfa.initials()) n.add_initial(o1 + s);
    for (State s : f2.nfa.initials()) n.add_initial(o2 + s);
    for (State s : f1.nfa.finals()) n.add_final(o1 + s);
    for (State s : f2.nfa.finals()) n.add_final(o2 + s);
    return {std::move(n)};
}

inline Frag star(const Frag& f) {
    Nfa n(f.nfa.alphabet());
    State hub = n.add_state();
    int off = splice(n, f.nfa);
    n.add_initial(hub);
    n.add_final(hub);
    for (State s : f.nfa.initials()) n.add_edge(hub, Nfa::kEpsilon, off + s);
    for (State s : f.nfa.finals()) n.add_edge(off + s, Nfa::kEpsilon, hub);
    return {std::move(n)};
}

inline Frag complement_frag(const Frag& f) {
    return {nfa_of(minimize(complement(determinize(f.nfa))))};
}

class Parser {
  public:
    Parser(std::string_view pattern, const Alphabet& ab) : pat_(pattern), ab_(ab) {}

    Frag parse() {
        Frag f = parse_alt();
        if (pos_ != pat_.size()) fail("unexpected character");
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("regex syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    bool at_end() const { return pos_ >= pat_.size(); }
    char peek() const { return pat_[pos_]; }

    Frag parse_alt() {
        Frag f = parse_cat();
        while (!at_end() && peek() == '|') {
            ++pos_;
            f = alternate(f, parse_cat());
        }
        return f;
    }

    Frag parse_cat() {
        Frag f = epsilon_frag(ab_);
        while (!at_end() && peek() != '|' && peek() != ')') f = concat(f, parse_postfix());
        return f;
    }

    Frag parse_postfix() {
        Frag f = parse_atom();
        while (!at_end() && peek() == '*') {
            ++pos_;
            f = star(f);
        }
        return f;
    }

    Frag parse_atom() {
        if (at_end()) fail("expected atom");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Frag f = parse_alt();
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        if (c == '!') {
            ++pos_;
            if (at_end() || peek() != '(') fail("'!' must be followed by '('");
            ++pos_;
            Frag f = parse_alt();
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            return complement_frag(f);
        }
        if (c == '.') {
            ++pos_;
            return dot_frag(ab_);
        }
        if (c == '*' || c == ')' || c == '|') fail("misplaced operator");
        int r = ab_.rank_of_char(c);
        if (r < 0) fail(std::string("unknown literal '") + c + "'");
        ++pos_;
        return literal_frag(ab_, r);
    }

    std::string_view pat_;
    const Alphabet& ab_;
    std::size_t pos_ = 0;
};

}  // namespace regex_detail

// Minimal complete DFA of the pattern over the given alphabet.
inline Dfa regex_to_dfa(std::string_view pattern, const Alphabet& alphabet) {
    regex_detail::Parser parser(pattern, alphabet);
    return minimize(determinize(parser.parse().nfa));
}

}  // namespace ans

#endif
