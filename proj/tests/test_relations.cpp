#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ans/io.hpp"
#include "ans/regex.hpp"
#include "ans/relations.hpp"

using namespace ans;

namespace {

NumerationSystem make(const char* pat, const char* order) {
    return NumerationSystem(regex_to_dfa(pat, Alphabet::chars(order)));
}

std::vector<Word> members_up_to(const NumerationSystem& s, int maxlen) {
    std::vector<Word> out;
    std::vector<Word> level{{}};
    if (s.member(Word{})) out.push_back({});
    for (int l = 1; l <= maxlen; ++l) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (int c = 0; c < s.alphabet().size(); ++c) {
                Word e(w);
                e.push_back(c);
                next.push_back(std::move(e));
            }
        for (const Word& w : next)
            if (s.member(w)) out.push_back(w);
        level = std::move(next);
    }
    return out;
}

// number of same-length partners y with (x,y) in the relation
long partner_count(const PaddedPairAutomaton& r, const Word& x) {
    int p = r.pa.base.size();
    std::vector<long> cur(r.dfa.state_count(), 0);
    cur[r.dfa.initial()] = 1;
    for (int letter : x) {
        std::vector<long> nxt(r.dfa.state_count(), 0);
        for (State q = 0; q < r.dfa.state_count(); ++q)
            if (cur[q] != 0)
                for (int c = 0; c < p; ++c) nxt[r.dfa.next(q, r.pa.id(letter, c))] += cur[q];
        cur = std::move(nxt);
    }
    long total = 0;
    for (State q = 0; q < r.dfa.state_count(); ++q)
        if (r.dfa.is_final(q)) total += cur[q];
    return total;
}

}  // namespace

TEST_CASE("pair alphabet and convolution") {
    PairAlphabet pa = PairAlphabet::over(Alphabet::chars("ab"));
    REQUIRE(pa.pairs.size() == 8);  // 3*3 - 1
    REQUIRE(pa.pairs.name(pa.id(0, 1)) == "a|b");
    REQUIRE(pa.pairs.name(pa.id(pa.pad, 1)) == "_|b");
    REQUIRE_THROWS_AS(pa.id(pa.pad, pa.pad), DomainError);
    PaddedPairAutomaton id = identity_relation(Alphabet::chars("ab"));
    Word u = {0, 1}, v = {0, 1, 1};
    Word conv = id.convolve(u, v);
    REQUIRE(conv.size() == 3);
    REQUIRE(pa.pairs.name(conv[2]) == "_|b");
}

TEST_CASE("well-padded language accepts only suffix padding") {
    PairAlphabet pa = PairAlphabet::over(Alphabet::chars("ab"));
    Dfa wp = well_padded_dfa(pa);
    REQUIRE(wp.accepts(Word{}));
    REQUIRE(wp.accepts(Word{pa.id(0, 0), pa.id(pa.pad, 1)}));
    REQUIRE(!wp.accepts(Word{pa.id(pa.pad, 1), pa.id(0, 0)}));
    REQUIRE(!wp.accepts(Word{pa.id(0, pa.pad), pa.id(pa.pad, 0)}));
}

TEST_CASE("radix order relation on the Peano system") {
    NumerationSystem s = make("a*b*", "ab");
    PaddedPairAutomaton order = radix_order_relation(s);
    auto w = [&](const char* t) { return word_from_string(s.alphabet(), t); };
    REQUIRE(order.accepts_pair(w("a"), w("b")));
    REQUIRE(order.accepts_pair(w("b"), w("aa")));  // shorter-first rule
    REQUIRE(!order.accepts_pair(w("aa"), w("b")));
    for (const Word& x : members_up_to(s, 5)) REQUIRE(!order.accepts_pair(x, x));
    // exhaustive agreement with values
    auto mem = members_up_to(s, 5);
    for (const Word& x : mem)
        for (const Word& y : mem) REQUIRE(order.accepts_pair(x, y) == (s.val(x) < s.val(y)));
}

TEST_CASE("relation round-trips through the pair-letter text format") {
    NumerationSystem s = make("a*b*", "ab");
    PaddedPairAutomaton order = radix_order_relation(s);
    std::string text = dfa_to_string(order.dfa);
    REQUIRE(text.find("a|b") != std::string::npos);
    std::istringstream in(text);
    Dfa back = read_dfa(in);
    REQUIRE(equivalent(order.dfa, back));
}

TEST_CASE("relation boolean algebra on well-padded pairs") {
    NumerationSystem s = make("a*b*", "ab");
    PaddedPairAutomaton order = radix_order_relation(s);
    auto mem = members_up_to(s, 5);
    PaddedPairAutomaton not_order = relation_complement(order);
    PaddedPairAutomaton both = relation_intersect(order, swap_tracks(order));
    PaddedPairAutomaton either = relation_union(order, swap_tracks(order));
    for (const Word& x : mem)
        for (const Word& y : mem) {
            bool lt = s.val(x) < s.val(y);
            bool gt = s.val(y) < s.val(x);
            REQUIRE(not_order.accepts_pair(x, y) == !lt);
            REQUIRE(both.accepts_pair(x, y) == (lt && gt));
            REQUIRE(either.accepts_pair(x, y) == (lt || gt));
        }
    // complement stays within the well-padded convolutions
    REQUIRE(is_empty(difference(not_order.dfa, well_padded_dfa(order.pa))));
}

TEST_CASE("image and composition basics") {
    Alphabet ab = Alphabet::chars("ab");
    PaddedPairAutomaton id = identity_relation(ab);
    Dfa some = regex_to_dfa("a*b", ab);
    REQUIRE(equivalent(image(id, some), minimize(some)));

    NumerationSystem s = make("a*b*", "ab");
    PaddedPairAutomaton order = radix_order_relation(s);
    PaddedPairAutomaton order_id = compose(order, id);
    REQUIRE(equivalent(order_id.dfa, order.dfa));
    PaddedPairAutomaton id_order = compose(id, order);
    REQUIRE(equivalent(id_order.dfa, order.dfa));

    // domain of the order relation is all of L (L is infinite)
    REQUIRE(equivalent(relation_domain(order), s.dfa()));
    // range misses only the minimum, the empty word
    Dfa expected_range = minimize(difference(s.dfa(), word_dfa(ab, {})));
    REQUIRE(equivalent(relation_range(order), expected_range));
}

TEST_CASE("compose matches squared order on small words") {
    NumerationSystem s = make("!(a*b*)", "ab");
    PaddedPairAutomaton order = radix_order_relation(s);
    PaddedPairAutomaton skip = compose(order, order);
    auto mem = members_up_to(s, 5);
    for (const Word& x : mem)
        for (const Word& y : mem) {
            bool expect = s.val(y) >= s.val(x) + 2;  // someone strictly between
            REQUIRE(skip.accepts_pair(x, y) == expect);
        }
}

TEST_CASE("successor relation is the graph of the successor function") {
    for (const char* pat : {"a*b*", "!(a*b*)", "(b|ab*a)*"}) {
        NumerationSystem s = make(pat, "ab");
        PaddedPairAutomaton succ = successor_relation(s);
        for (long n = 0; n <= 500; ++n) REQUIRE(succ.accepts_pair(s.rep(n), s.rep(n + 1)));
        for (const Word& x : members_up_to(s, 6)) {
            Word want = s.successor(x);
            REQUIRE(succ.accepts_pair(x, want));
            // same-length partners: exactly the successor when it keeps the
            // length, none otherwise
            long expected = want.size() == x.size() ? 1 : 0;
            REQUIRE(partner_count(succ, x) == expected);
        }
    }
}

TEST_CASE("Peano successor relation spec pairs") {
    NumerationSystem s = make("a*b*", "ab");
    PaddedPairAutomaton succ = successor_relation(s);
    auto w = [&](const char* t) { return word_from_string(s.alphabet(), t); };
    REQUIRE(succ.accepts_pair(w(""), w("a")));
    REQUIRE(succ.accepts_pair(w("a"), w("b")));
    REQUIRE(succ.accepts_pair(w("b"), w("aa")));
    REQUIRE(!succ.accepts_pair(w("a"), w("aa")));
}

TEST_CASE("translation by t") {
    NumerationSystem s = make("a*b*", "ab");
    Alphabet ab = s.alphabet();
    SECTION("t = 0 returns the minimized input") {
        Dfa x = regex_to_dfa("a*", ab);
        REQUIRE(equivalent(translate_dfa(s, x, 0), x));
    }
    SECTION("X = {0}, t = 3 gives exactly rep(3) = aa") {
        Dfa x = word_dfa(ab, {});
        Dfa moved = translate_dfa(s, x, 3);
        REQUIRE(equivalent(moved, word_dfa(ab, word_from_string(ab, "aa"))));
    }
    SECTION("random regular X, t <= 5, against the elementwise oracle") {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 6; ++trial) {
            Int p = rng() % 5, q = 1 + rng() % 5;
            Dfa x = ultimately_periodic_dfa(s, {Int(rng() % 20)}, {{p, q}});
            Int t = rng() % 5;
            Dfa moved = translate_dfa(s, x, t);
            for (const Word& w : members_up_to(s, 9)) {
                Int v = s.val(w);
                bool expect = v >= t && x.accepts(s.rep(v - t));
                REQUIRE(moved.accepts(w) == expect);
            }
        }
    }
    SECTION("containment violations are rejected") {
        REQUIRE_THROWS_AS(translate_dfa(s, regex_to_dfa("b*a*", ab), 1), DomainError);
    }
}

TEST_CASE("theta-prime between the two orderings of the full binary language") {
    NumerationSystem u = make("(a|b)*", "ab");
    NumerationSystem v = make("(a|b)*", "ba");
    for (long n = 0; n < (1 << 12); ++n) {
        long l = static_cast<long>(u.rep(n).size());
        REQUIRE(theta_prime(u, v, n) == (Int(3) << l) - n - 3);
    }
    REQUIRE(theta_prime(u, v, 3) == 6);
}

TEST_CASE("theta on the complement language follows the closed form") {
    NumerationSystem s = make("!(a*b*)", "ab");
    NumerationSystem t = make("!(a*b*)", "ba");
    NumerationSystem u = make("(a|b)*", "ab");
    auto to_string_t = [&](const Word& w) { return word_to_string(t.alphabet(), w); };
    // theta(ba b^n) = ab a^{n-l-1} b rep_U(n-1), l = |rep_U(n-1)|
    for (int n = 2; n <= 30; ++n) {
        Word x = word_from_string(s.alphabet(), "ba" + std::string(n, 'b'));
        Word img = theta(s, t, x);
        Word repu = u.rep(n - 1);
        long l = static_cast<long>(repu.size());
        std::string expect =
            "ab" + std::string(n - l - 1, 'a') + "b" + word_to_string(u.alphabet(), repu);
        REQUIRE(to_string_t(img) == expect);
    }
    // the n = 2 instance from the worked example
    Word x2 = word_from_string(s.alphabet(), "babb");
    REQUIRE(to_string_t(theta(s, t, x2)) == "abba");
}

TEST_CASE("theta graph under the equal-counts hypothesis") {
    NumerationSystem s = make("(b|ab*a)*", "ab");
    NumerationSystem t = make("(b|ab*a)*", "ba");
    PaddedPairAutomaton rel = theta_graph_equal_counts(s, t);
    for (const Word& x : members_up_to(s, 10)) {
        Word y = theta(s, t, x);
        Word y_s = translate_ranks(t.alphabet(), s.alphabet(), y);
        REQUIRE(rel.accepts_pair(x, y_s));
        REQUIRE(partner_count(rel, x) == 1);
    }
}

TEST_CASE("theta graph with the identity permutation is the identity on L") {
    NumerationSystem s = make("(b|ab*a)*", "ab");
    PaddedPairAutomaton rel = theta_graph_equal_counts(s, s);
    for (const Word& x : members_up_to(s, 8)) {
        REQUIRE(rel.accepts_pair(x, x));
        REQUIRE(partner_count(rel, x) == 1);
    }
}

TEST_CASE("theta graph transfers recognizable sets") {
    NumerationSystem s = make("(b|ab*a)*", "ab");
    NumerationSystem t = make("(b|ab*a)*", "ba");
    PaddedPairAutomaton rel = theta_graph_equal_counts(s, t);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Int p = rng() % 4, q = 1 + rng() % 5;
        Dfa xs = ultimately_periodic_dfa(s, {}, {{p, q}});
        Dfa xt = ultimately_periodic_dfa(t, {}, {{p, q}});
        Dfa img = image(rel, xs);
        REQUIRE(equivalent(img, detail::rerank_dfa(xt, s.alphabet())));
    }
}

TEST_CASE("equal-counts hypothesis violations are reported") {
    NumerationSystem s = make("a*b*", "ab");
    NumerationSystem t = make("a*b*", "ba");
    REQUIRE_THROWS_AS(theta_graph_equal_counts(s, t), DomainError);
    NumerationSystem other = make("(a|b)*", "ab");
    REQUIRE_THROWS_AS(theta_graph_equal_counts(s, other), DomainError);
}

TEST_CASE("theta graph for slender languages") {
    SECTION("a* maps to itself under any reordering") {
        NumerationSystem s = make("a*", "ab");
        NumerationSystem t = make("a*", "ba");
        PaddedPairAutomaton rel = theta_graph_slender(s, t);
        for (int n = 0; n <= 10; ++n) {
            Word x(n, s.alphabet().rank("a"));
            REQUIRE(rel.accepts_pair(x, x));
            REQUIRE(partner_count(rel, x) == 1);
        }
    }
    SECTION("a*b u c* with reversed order agrees with the theta oracle") {
        NumerationSystem s = make("a*b|c*", "abc");
        NumerationSystem t = make("a*b|c*", "cba");
        PaddedPairAutomaton rel = theta_graph_slender(s, t);
        for (const Word& x : members_up_to(s, 10)) {
            Word y = theta(s, t, x);
            Word y_s = translate_ranks(t.alphabet(), s.alphabet(), y);
            REQUIRE(rel.accepts_pair(x, y_s));
            REQUIRE(partner_count(rel, x) == 1);
        }
    }
    SECTION("layers are disjoint and cover the language") {
        NumerationSystem s = make("a*b|c*", "abc");
        Dfa rest = s.dfa();
        Dfa layer1 = first_per_length(rest);
        Dfa rest2 = minimize(difference(rest, layer1));
        Dfa layer2 = first_per_length(rest2);
        REQUIRE(is_empty(intersect(layer1, layer2)));
        REQUIRE(equivalent(union_of(layer1, layer2), s.dfa()));
        for (const Word& w : members_up_to(s, 12))
            REQUIRE((layer1.accepts(w) || layer2.accepts(w)));
    }
    SECTION("non-slender languages are rejected") {
        NumerationSystem s = make("a*b*", "ab");
        NumerationSystem t = make("a*b*", "ba");
        REQUIRE_THROWS_AS(theta_graph_slender(s, t), DomainError);
    }
}

TEST_CASE("counterexample evidence: quotient behaviors of the image of ba b^2 b*") {
    NumerationSystem s = make("!(a*b*)", "ab");
    NumerationSystem t = make("!(a*b*)", "ba");
    // sample the image set {theta(ba b^n) : n >= 2}
    std::vector<Word> image_words;
    for (int n = 2; n <= 40; ++n) {
        Word x = word_from_string(s.alphabet(), "ba" + std::string(n, 'b'));
        image_words.push_back(theta(s, t, x));
    }
    // residuals of prefixes ab a^j: collect suffix sets and count distinct
    std::set<std::set<std::string>> behaviors;
    for (int j = 0; j < 25; ++j) {
        std::string prefix = "ab" + std::string(j, 'a');
        std::set<std::string> residual;
        for (const Word& w : image_words) {
            std::string ws = word_to_string(t.alphabet(), w);
            if (ws.rfind(prefix, 0) == 0) residual.insert(ws.substr(prefix.size()));
        }
        behaviors.insert(residual);
    }
    REQUIRE(behaviors.size() >= 20);
}
