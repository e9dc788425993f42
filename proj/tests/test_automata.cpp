#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "ans/io.hpp"
#include "ans/ops.hpp"
#include "ans/regex.hpp"

using namespace ans;

namespace {

// independent small-word oracle: every word over the alphabet up to a
// length bound, in radix order
std::vector<Word> all_words(const Alphabet& ab, int maxlen) {
    std::vector<Word> out{{}};
    std::vector<Word> prev{{}};
    for (int l = 1; l <= maxlen; ++l) {
        std::vector<Word> next;
        for (const Word& w : prev)
            for (int c = 0; c < ab.size(); ++c) {
                Word e(w);
                e.push_back(c);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return out;
}

bool in_astar_bstar(const Word& w) {
    bool seen_b = false;
    for (int c : w) {
        if (c == 1) seen_b = true;
        if (c == 0 && seen_b) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("regex_to_dfa: a*b* has three minimal states") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa d = regex_to_dfa("a*b*", ab);
    REQUIRE(d.state_count() == 3);  // two accepting plus sink
    for (const Word& w : all_words(ab, 8)) REQUIRE(d.accepts(w) == in_astar_bstar(w));
}

TEST_CASE("regex_to_dfa: complement group gives the 3-state automaton of the running example") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa d = regex_to_dfa("!(a*b*)", ab);
    REQUIRE(d.state_count() == 3);
    for (const Word& w : all_words(ab, 8)) REQUIRE(d.accepts(w) == !in_astar_bstar(w));
}

TEST_CASE("regex_to_dfa: singleton letter") {
    Alphabet a = Alphabet::chars("a");
    Dfa d = regex_to_dfa("a", a);
    REQUIRE(d.state_count() == 3);  // before, after, sink
    REQUIRE(d.accepts("a"));
    REQUIRE(!d.accepts(""));
    REQUIRE(!d.accepts("aa"));
}

TEST_CASE("regex syntax errors carry a position") {
    Alphabet ab = Alphabet::chars("ab");
    REQUIRE_THROWS_AS(regex_to_dfa("a(b", ab), ParseError);
    REQUIRE_THROWS_AS(regex_to_dfa("c", ab), ParseError);
    REQUIRE_THROWS_AS(regex_to_dfa("*a", ab), ParseError);
    REQUIRE_THROWS_AS(regex_to_dfa("!a", ab), ParseError);
    REQUIRE_THROWS_MATCHES(regex_to_dfa("ab)", ab), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("position 2")));
}

TEST_CASE("minimize is idempotent and byte-identical") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa d = regex_to_dfa("(a|b)*ab(a|b)*", ab);
    Dfa m1 = minimize(d);
    Dfa m2 = minimize(m1);
    REQUIRE(dfa_to_string(m1) == dfa_to_string(m2));
}

TEST_CASE("minimize collapses a redundant universal automaton to one state") {
    Alphabet ab = Alphabet::chars("ab");
    // four states, all accepting, arbitrary wiring
    std::vector<State> delta{1, 2, 3, 0, 2, 1, 0, 3};
    Dfa d(ab, 4, 0, {true, true, true, true}, delta);
    REQUIRE(minimize(d).state_count() == 1);
    REQUIRE(equivalent(d, universal_dfa(ab)));
}

TEST_CASE("product constructions agree with boolean membership") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa d1 = regex_to_dfa("a*b*", ab);
    Dfa d2 = regex_to_dfa("b*a*", ab);
    Dfa inter = intersect(d1, d2);
    Dfa uni = union_of(d1, d2);
    for (const Word& w : all_words(ab, 8)) {
        REQUIRE(inter.accepts(w) == (d1.accepts(w) && d2.accepts(w)));
        REQUIRE(uni.accepts(w) == (d1.accepts(w) || d2.accepts(w)));
    }
    // intersect(a*b*, b*a*) = {a^i} u {b^j}
    for (const Word& w : all_words(ab, 6)) {
        bool pure = w.empty() || std::set<int>(w.begin(), w.end()).size() == 1;
        REQUIRE(inter.accepts(w) == pure);
    }
}

TEST_CASE("complement is an involution, determinize(nfa_of) is the identity") {
    Alphabet ab = Alphabet::chars("ab");
    for (const char* pat : {"a*b*", "!(a*b*)", "(b|ab*a)*", "a*b|b*"}) {
        Dfa d = regex_to_dfa(pat, ab);
        REQUIRE(equivalent(complement(complement(d)), d));
        REQUIRE(equivalent(determinize(nfa_of(d)), d));
        REQUIRE(equivalent(minimize(d), d));
    }
}

TEST_CASE("reversal of a two-letter word") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa d = regex_to_dfa("ab", ab);
    Dfa r = determinize(reverse(d));
    REQUIRE(r.accepts("ba"));
    for (const Word& w : all_words(ab, 4))
        REQUIRE(r.accepts(w) == (w == Word{1, 0}));
}

TEST_CASE("is_infinite distinguishes a*b* from a|b") {
    Alphabet ab = Alphabet::chars("ab");
    REQUIRE(is_infinite(regex_to_dfa("a*b*", ab)));
    REQUIRE(!is_infinite(regex_to_dfa("a|b", ab)));
    REQUIRE(!is_infinite(empty_dfa(ab)));
}

TEST_CASE("equivalence: a* | a*bb* equals a*b*") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa lhs = union_of(regex_to_dfa("a*", ab), regex_to_dfa("a*bb*", ab));
    Dfa rhs = regex_to_dfa("a*b*", ab);
    REQUIRE(equivalent(lhs, rhs));
    for (const Word& w : all_words(ab, 8)) REQUIRE(lhs.accepts(w) == rhs.accepts(w));
}

TEST_CASE("text format round-trips through parse") {
    Alphabet abc = Alphabet::chars("abc");
    for (const char* pat : {"a*b|c*", "a*b*|a*c*", "(a|b|c)*", "!(a*)"}) {
        Dfa d = regex_to_dfa(pat, abc);
        std::string text = dfa_to_string(d);
        std::istringstream in(text);
        Dfa back = read_dfa(in);
        REQUIRE(equivalent(d, back));
        // serialization is deterministic
        REQUIRE(dfa_to_string(minimize(back)) == text);
    }
}

TEST_CASE("text format: missing transitions go to the implicit sink") {
    std::istringstream in(
        "alphabet: a b\n"
        "states: 1\n"
        "initial: 0\n"
        "finals: 0\n"
        "trans: 0 a 0\n");
    Dfa d = read_dfa(in);
    REQUIRE(d.accepts("aaa"));
    REQUIRE(!d.accepts("ab"));
    REQUIRE(equivalent(d, regex_to_dfa("a*", Alphabet::chars("ab"))));
}

TEST_CASE("trim_info reports reachable and co-reachable sets") {
    Alphabet ab = Alphabet::chars("ab");
    Dfa d = regex_to_dfa("ab", ab);
    auto [reach, coreach] = trim_info(d);
    int useful = 0;
    for (State s = 0; s < d.state_count(); ++s)
        if (reach[s] && coreach[s]) ++useful;
    REQUIRE(useful == 3);  // start, after-a, accept
}
