// ans: command-line front-end for abstract numeration systems
// S = (L, Sigma, <) over regular languages.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ans/io.hpp"
#include "ans/peano.hpp"
#include "ans/pell.hpp"
#include "ans/periodic.hpp"
#include "ans/regex.hpp"
#include "ans/relations.hpp"

namespace {

using namespace ans;

std::vector<std::string> split_order(const std::string& order) {
    std::vector<std::string> letters;
    std::string cur;
    for (char c : order) {
        if (c == ',') {
            if (!cur.empty()) letters.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) letters.push_back(cur);
    return letters;
}

// -s SOURCE is either a DFA file (its alphabet line fixes the order) or a
// regex, which needs --order. An explicit --order on a file must be a
// permutation of the file's alphabet.
Dfa load_system_dfa(const std::string& source, const std::string& order) {
    if (std::filesystem::exists(source)) {
        Dfa d = read_dfa_file(source);
        if (order.empty()) return d;
        Alphabet target(split_order(order));
        return detail::rerank_dfa(d, target);
    }
    if (order.empty()) throw DomainError("a regex system needs --order (e.g. --order a,b)");
    std::vector<std::string> letters = split_order(order);
    std::string chars;
    for (const auto& l : letters) {
        if (l.size() != 1) throw DomainError("regex letters must be single characters");
        chars += l;
    }
    return regex_to_dfa(source, Alphabet::chars(chars));
}

NumerationSystem load_system(const std::string& source, const std::string& order) {
    return NumerationSystem(load_system_dfa(source, order));
}

// the empty word prints as epsilon and may be entered as '' or -e
std::string show_word(const Alphabet& ab, const Word& w) {
    return w.empty() ? "ε" : word_to_string(ab, w);
}

Word parse_word(const Alphabet& ab, const std::string& s) {
    if (s.empty() || s == "-e" || s == "ε") return {};
    return word_from_string(ab, s);
}

void emit(const Dfa& d, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        write_dfa(std::cout, d);
    else
        write_dfa_file(out_path, d);
}

int run(int argc, char** argv) {
    CLI::App app{"abstract numeration systems on regular languages"};
    app.require_subcommand(1);

    std::string source, order, order2, out_path, word_arg, json_path;
    std::string from_str = "0", to_str = "0", n_str, p_str, q_str = "1", t_str = "0";
    std::string alpha_str, count_str = "8", bound_str = "2000";
    long length = 0;
    int state = -1;
    bool cumulative = false;

    auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("-s,--system", source, "DFA file or regex")->required();
        cmd->add_option("--order", order, "letter order, comma separated (a,b)");
    };

    auto* rep_cmd = app.add_subcommand("rep", "word of a value");
    add_system(rep_cmd);
    rep_cmd->add_option("value", n_str)->required();

    auto* val_cmd = app.add_subcommand("val", "value of a word");
    add_system(val_cmd);
    val_cmd->add_option("word", word_arg)->required();

    auto* succ_cmd = app.add_subcommand("succ", "next word of the language");
    add_system(succ_cmd);
    succ_cmd->add_option("word", word_arg)->required();

    auto* enum_cmd = app.add_subcommand("enum", "list rep(from..to)");
    add_system(enum_cmd);
    enum_cmd->add_option("--from", from_str);
    enum_cmd->add_option("--to", to_str)->required();

    auto* member_cmd = app.add_subcommand("member", "does the automaton accept the word");
    member_cmd->add_option("dfa", source, "DFA file")->required();
    member_cmd->add_option("word", word_arg)->required();

    auto* count_cmd = app.add_subcommand("count", "u_l(k) or v_l(k)");
    add_system(count_cmd);
    count_cmd->add_option("-l,--length", length)->required();
    count_cmd->add_option("-k,--state", state);
    count_cmd->add_flag("--cumulative", cumulative);

    auto* matrix_cmd = app.add_subcommand("matrix", "incidence matrix and final vector");
    add_system(matrix_cmd);

    auto* slender_cmd = app.add_subcommand("slender", "least slenderness bound");
    add_system(slender_cmd);

    auto* order_check_cmd =
        app.add_subcommand("order-check", "order-invariance class of the language");
    add_system(order_check_cmd);

    auto* minlex_cmd = app.add_subcommand("minlex", "first word of each length");
    add_system(minlex_cmd);
    minlex_cmd->add_option("-o,--out", out_path);

    auto* maxlex_cmd = app.add_subcommand("maxlex", "last word of each length");
    add_system(maxlex_cmd);
    maxlex_cmd->add_option("-o,--out", out_path);

    auto* prog_cmd = app.add_subcommand("progression", "recognizer of p + N q");
    add_system(prog_cmd);
    prog_cmd->add_option("-p", p_str)->required();
    prog_cmd->add_option("-q", q_str)->required();
    prog_cmd->add_option("-o,--out", out_path);

    auto* trans_cmd = app.add_subcommand("translate", "recognizer of X + t");
    add_system(trans_cmd);
    trans_cmd->add_option("-t", t_str)->required();
    trans_cmd->add_option("set", word_arg, "DFA file of rep(X)")->required();
    trans_cmd->add_option("-o,--out", out_path);

    auto* reorder_cmd = app.add_subcommand("reorder", "graph of the change-of-order map");
    add_system(reorder_cmd);
    reorder_cmd->add_option("--order2", order2, "target letter order")->required();
    reorder_cmd->add_option("-o,--out", out_path);
    std::string via = "auto";
    reorder_cmd->add_option("--via", via)->check(CLI::IsMember({"auto", "counts", "slender"}));

    auto* theta_cmd = app.add_subcommand("theta", "apply the change-of-order map");
    add_system(theta_cmd);
    theta_cmd->add_option("--order2", order2)->required();
    theta_cmd->add_option("-n", n_str, "value form: print val_T(rep_S(n))");
    theta_cmd->add_option("word", word_arg, "word form: print rep_T(val_S(w))");

    auto* succrel_cmd = app.add_subcommand("succ-rel", "successor relation automaton");
    add_system(succrel_cmd);
    succrel_cmd->add_option("-o,--out", out_path);

    auto* peano_cmd = app.add_subcommand("peano", "the a*b* system");
    peano_cmd->require_subcommand(1);
    auto* mul_cmd = peano_cmd->add_subcommand("mul", "multiply a recognizable set by alpha");
    mul_cmd->add_option("--alpha", alpha_str)->required();
    mul_cmd->add_option("set", word_arg, "DFA file of rep(X)")->required();
    mul_cmd->add_option("-o,--out", out_path);
    auto* ev_cmd = peano_cmd->add_subcommand("evidence", "non-square length-set evidence");
    ev_cmd->add_option("--alpha", alpha_str)->required();
    ev_cmd->add_option("--bound", bound_str);
    ev_cmd->add_option("--json", json_path);

    auto* pell_cmd = app.add_subcommand("pell", "solution classes of X^2 - alpha Y^2 = N");
    pell_cmd->add_option("--alpha", alpha_str)->required();
    pell_cmd->add_option("--n", n_str)->required();
    pell_cmd->add_option("--count", count_str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*rep_cmd) {
        NumerationSystem s = load_system(source, order);
        std::cout << show_word(s.alphabet(), s.rep(Int(n_str))) << "\n";
    } else if (*val_cmd) {
        NumerationSystem s = load_system(source, order);
        std::cout << s.val(parse_word(s.alphabet(), word_arg)) << "\n";
    } else if (*succ_cmd) {
        NumerationSystem s = load_system(source, order);
        std::cout << show_word(s.alphabet(), s.successor(parse_word(s.alphabet(), word_arg)))
                  << "\n";
    } else if (*enum_cmd) {
        NumerationSystem s = load_system(source, order);
        for (Int n(from_str); n <= Int(to_str); ++n)
            std::cout << show_word(s.alphabet(), s.rep(n)) << "\n";
    } else if (*member_cmd) {
        Dfa d = read_dfa_file(source);
        std::cout << (d.accepts(parse_word(d.alphabet(), word_arg)) ? "yes" : "no") << "\n";
    } else if (*count_cmd) {
        NumerationSystem s = load_system(source, order);
        State k = state < 0 ? s.dfa().initial() : state;
        if (k >= s.dfa().state_count()) throw DomainError("state out of range");
        std::cout << (cumulative ? s.cumulative(k, static_cast<int>(length))
                                 : s.count(k, static_cast<int>(length)))
                  << "\n";
    } else if (*matrix_cmd) {
        Dfa d = minimize(load_system_dfa(source, order));
        IncidenceMatrix m = incidence(d);
        for (const auto& row : m.entries) {
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
            std::cout << "\n";
        }
        for (std::size_t j = 0; j < m.final_vector.size(); ++j)
            std::cout << (j ? " " : "") << m.final_vector[j];
        std::cout << "\n";
    } else if (*slender_cmd) {
        auto r = slenderness(minimize(load_system_dfa(source, order)));
        if (r)
            std::cout << *r << "\n";
        else
            std::cout << "unbounded\n";
    } else if (*order_check_cmd) {
        Dfa d = minimize(load_system_dfa(source, order));
        auto ec = equal_count_bound(d);
        auto sl = slenderness(d);
        if (ec)
            std::cout << "equal-counts: n0 " << ec->first << ", common value " << ec->second
                      << "\n";
        else
            std::cout << "equal-counts: no\n";
        if (sl)
            std::cout << "slender: " << *sl << "\n";
        else
            std::cout << "slender: no\n";
        std::cout << (ec || sl ? "order-independent: yes\n" : "order-independent: unknown\n");
    } else if (*minlex_cmd || *maxlex_cmd) {
        Dfa d = minimize(load_system_dfa(source, order));
        emit(*minlex_cmd ? first_per_length(d) : last_per_length(d), out_path);
    } else if (*prog_cmd) {
        NumerationSystem s = load_system(source, order);
        emit(progression_dfa(s, Int(p_str), Int(q_str)), out_path);
    } else if (*trans_cmd) {
        NumerationSystem s = load_system(source, order);
        Dfa x = read_dfa_file(word_arg);
        emit(translate_dfa(s, x, Int(t_str)), out_path);
    } else if (*reorder_cmd) {
        NumerationSystem s = load_system(source, order);
        NumerationSystem t(detail::rerank_dfa(s.dfa(), Alphabet(split_order(order2))));
        PaddedPairAutomaton rel = [&] {
            if (via == "counts") return theta_graph_equal_counts(s, t);
            if (via == "slender") return theta_graph_slender(s, t);
            if (equal_count_bound(s.dfa())) return theta_graph_equal_counts(s, t);
            return theta_graph_slender(s, t);
        }();
        emit(rel.dfa, out_path);
    } else if (*theta_cmd) {
        NumerationSystem s = load_system(source, order);
        NumerationSystem t(detail::rerank_dfa(s.dfa(), Alphabet(split_order(order2))));
        if (!n_str.empty())
            std::cout << theta_prime(s, t, Int(n_str)) << "\n";
        else
            std::cout << show_word(t.alphabet(), theta(s, t, parse_word(s.alphabet(), word_arg)))
                      << "\n";
    } else if (*succrel_cmd) {
        NumerationSystem s = load_system(source, order);
        emit(successor_relation(s).dfa, out_path);
    } else if (*mul_cmd) {
        Int alpha(alpha_str);
        if (!is_perfect_square(alpha))
            throw DomainError("alpha = " + alpha.str() +
                              " is not a perfect square; multiplication does not preserve "
                              "recognizability (see `ans peano evidence`)");
        Dfa x = read_dfa_file(word_arg);
        emit(multiply_square_set(isqrt(alpha), x), out_path);
    } else if (*ev_cmd) {
        NonsquareEvidence ev = nonsquare_evidence(Int(alpha_str), std::stol(bound_str));
        nlohmann::json j;
        j["alpha"] = ev.alpha.str();
        j["r"] = ev.r.str();
        j["n"] = ev.n.str();
        j["fundamental"] = {{"u", ev.fund_u.str()}, {"v", ev.fund_v.str()}};
        auto lens = [](const std::vector<Int>& v) {
            std::vector<std::string> out;
            for (const Int& x : v) out.push_back(x.str());
            return out;
        };
        j["lengths_bruteforce"] = lens(ev.lengths_bruteforce);
        j["lengths_pell"] = lens(ev.lengths_pell);
        j["lengths_agree"] = ev.lengths_agree;
        j["longest_ap"] = lens(ev.longest_ap);
        j["tail_ratio"] = {{"num", ev.tail_ratio_num.str()}, {"den", ev.tail_ratio_den.str()}};
        std::string text = j.dump(2) + "\n";
        if (json_path.empty())
            std::cout << text;
        else {
            std::ofstream out(json_path);
            out << text;
        }
        if (!ev.lengths_agree) throw Error("evidence routes disagreed");
    } else if (*pell_cmd) {
        PellSolutionSet set = pell_solutions(Int(alpha_str), Int(n_str), std::stoi(count_str));
        std::cout << "fundamental: " << set.u << " " << set.v << "\n";
        for (const auto& cls : set.classes) {
            std::cout << "class " << cls.x0 << " " << cls.y0 << ":";
            for (const auto& [x, y] : cls.terms) std::cout << " (" << x << "," << y << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;  // CLI11_PARSE already printed its message
    } catch (const ans::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
