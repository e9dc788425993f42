#ifndef ANS_ALPHABET_HPP
#define ANS_ALPHABET_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ans/errors.hpp"

namespace ans {

// A totally ordered alphabet. Declaration order is the order <, so the
// same letters in a different order make a different alphabet. Base
// alphabets use single printable characters; pair alphabets (relations)
// use composite names like "a|b".
class Alphabet {
  public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw DomainError("alphabet must have at least one letter");
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (names_[i].empty()) throw DomainError("empty letter name");
            if (!index_.emplace(names_[i], i).second)
                throw DomainError("duplicate letter '" + names_[i] + "'");
        }
    }

    // "abc" -> a < b < c, one letter per character.
    static Alphabet chars(std::string_view letters) {
        std::vector<std::string> names;
        for (char c : letters) names.emplace_back(1, c);
        return Alphabet(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(int rank) const { return names_.at(rank); }

    bool contains(std::string_view s) const { return index_.find(std::string(s)) != index_.end(); }

    int rank(std::string_view s) const {
        auto it = index_.find(std::string(s));
        if (it == index_.end()) throw DomainError("unknown letter '" + std::string(s) + "'");
        return it->second;
    }

    // Rank of a single-character letter, -1 if absent.
    int rank_of_char(char c) const {
        auto it = index_.find(std::string(1, c));
        return it == index_.end() ? -1 : it->second;
    }

    bool single_chars() const {
        for (const auto& n : names_)
            if (n.size() != 1) return false;
        return true;
    }

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

// A word as a sequence of letter ranks.
using Word = std::vector<int>;

inline Word word_from_string(const Alphabet& a, std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        int r = a.rank_of_char(c);
        if (r < 0) throw DomainError("letter '" + std::string(1, c) + "' not in alphabet");
        w.push_back(r);
    }
    return w;
}

inline std::string word_to_string(const Alphabet& a, const Word& w) {
    std::string s;
    for (int r : w) s += a.name(r);
    return s;
}

}  // namespace ans

#endif
