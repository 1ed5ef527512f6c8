#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <string>

namespace cuntz {

/// 1-based generator index.
using Letter = std::uint32_t;

/// Multi-index J = (j_1, ..., j_m) standing for s_J = s_{j_1} ... s_{j_m}.
using Word = boost::container::small_vector<Letter, 8>;

inline Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline bool is_prefix(const Word& prefix, const Word& word) {
  return prefix.size() <= word.size() && std::equal(prefix.begin(), prefix.end(), word.begin());
}

inline Word repeat(Letter letter, std::size_t count) { return Word(count, letter); }

/// Compact digit string, e.g. {2,1,1} -> "211"; indices >= 10 are bracketed.
inline std::string word_to_string(const Word& w) {
  if (w.empty())
    return "e";
  std::string out;
  for (Letter l : w) {
    if (l < 10)
      out += static_cast<char>('0' + l);
    else
      out += "[" + std::to_string(l) + "]";
  }
  return out;
}

/// Parses the compact digit form used in tests and reports ("211", "e" = empty).
inline Word word_from_string(const std::string& text) {
  Word w;
  if (text == "e" || text.empty())
    return w;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] == '[') {
      auto close = text.find(']', pos);
      w.push_back(static_cast<Letter>(std::stoul(text.substr(pos + 1, close - pos - 1))));
      pos = close;
    } else {
      w.push_back(static_cast<Letter>(text[pos] - '0'));
    }
  }
  return w;
}

/// s_J s_K^*.
struct Monomial {
  Word left;
  Word right;

  Monomial() = default;
  Monomial(Word j, Word k) : left(std::move(j)), right(std::move(k)) {}

  bool is_unit() const { return left.empty() && right.empty(); }
  long grade() const { return static_cast<long>(left.size()) - static_cast<long>(right.size()); }
  std::size_t length() const { return left.size() + right.size(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.left == b.left && a.right == b.right; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.left != b.left)
      return a.left < b.left;
    return a.right < b.right;
  }
};

} // namespace cuntz
