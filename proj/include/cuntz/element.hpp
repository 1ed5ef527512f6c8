#pragma once

#include "cuntz/coefficient.hpp"
#include "cuntz/error.hpp"
#include "cuntz/word.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuntz {

/// Ambient algebra: O_N with N >= 2 generators, or O_inf.
class AlgebraTag {
public:
  static AlgebraTag finite(std::uint32_t generators) {
    if (generators < 2)
      throw Error("O_N requires N >= 2, got " + std::to_string(generators));
    return AlgebraTag(generators);
  }
  static AlgebraTag infinite() { return AlgebraTag(0); }
  /// R_n = O_{n+1}.
  static AlgebraTag r(std::uint32_t n) { return finite(n + 1); }

  /// Accepts "O3", "O_3", "Oinf", "O_inf".
  static AlgebraTag parse(std::string_view text) {
    if (!text.empty() && (text.front() == 'O' || text.front() == 'o'))
      text.remove_prefix(1);
    if (!text.empty() && text.front() == '_')
      text.remove_prefix(1);
    if (text == "inf" || text == "infty" || text == "oo")
      return infinite();
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error("bad algebra tag '" + std::string(text) + "' (expected O<k> or Oinf)");
    return finite(static_cast<std::uint32_t>(std::stoul(std::string(text))));
  }

  bool is_finite() const noexcept { return generators_ != 0; }
  bool is_infinite() const noexcept { return generators_ == 0; }
  /// Generator count for O_N; 0 for O_inf.
  std::uint32_t generators() const noexcept { return generators_; }

  bool admits(Letter letter) const noexcept { return letter >= 1 && (is_infinite() || letter <= generators_); }

  std::string name() const { return is_finite() ? "O" + std::to_string(generators_) : "Oinf"; }

  friend bool operator==(const AlgebraTag& a, const AlgebraTag& b) { return a.generators_ == b.generators_; }
  friend bool operator!=(const AlgebraTag& a, const AlgebraTag& b) { return !(a == b); }

private:
  explicit AlgebraTag(std::uint32_t generators) : generators_(generators) {}
  std::uint32_t generators_;
};

using Terms = std::map<Monomial, Coefficient>;

inline void accumulate(Terms& terms, const Monomial& m, const Coefficient& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

/// Finite linear combination of monomials s_J s_K^* over a fixed algebra.
/// Stored coefficients are never zero. Elements returned by the arithmetic
/// operations are in canonical (collapsed) form; `from_terms` only combines
/// like terms.
class Element {
public:
  explicit Element(AlgebraTag tag) : tag_(tag) {}

  static Element zero(AlgebraTag tag) { return Element(tag); }
  static Element unit(AlgebraTag tag) { return monomial(tag, Monomial{}); }
  static Element monomial(AlgebraTag tag, Monomial m, Coefficient c = 1) {
    Terms t;
    accumulate(t, m, c);
    return from_terms(tag, std::move(t));
  }
  /// The isometry s_w.
  static Element word(AlgebraTag tag, Word w) { return monomial(tag, Monomial(std::move(w), {})); }
  static Element generator(AlgebraTag tag, Letter k) { return word(tag, Word{k}); }

  /// Takes ownership of a term table; drops zeros and validates indices.
  static Element from_terms(AlgebraTag tag, Terms terms) {
    for (auto it = terms.begin(); it != terms.end();) {
      for (const Word* w : {&it->first.left, &it->first.right})
        for (Letter l : *w)
          if (!tag.admits(l))
            throw Error("generator index " + std::to_string(l) + " out of range for " + tag.name());
      if (it->second.is_zero())
        it = terms.erase(it);
      else
        ++it;
    }
    Element e(tag);
    e.terms_ = std::move(terms);
    return e;
  }

  const AlgebraTag& tag() const noexcept { return tag_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coefficient coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  /// Structural equality of term tables. Use cuntz::equals for algebra equality.
  friend bool operator==(const Element& a, const Element& b) { return a.tag_ == b.tag_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
  AlgebraTag tag_;
  Terms terms_;
};

inline void require_same_tag(const Element& a, const Element& b) {
  if (a.tag() != b.tag())
    throw Error("algebra mismatch: " + a.tag().name() + " vs " + b.tag().name());
}

namespace detail {

/// Parent of (J i, K i) is (J, K); roots have no common trailing letter.
inline std::optional<Monomial> parent_of(const Monomial& m) {
  if (m.left.empty() || m.right.empty() || m.left.back() != m.right.back())
    return std::nullopt;
  Monomial p = m;
  p.left.pop_back();
  p.right.pop_back();
  return p;
}

inline Monomial child_of(const Monomial& parent, Letter i) {
  Monomial c = parent;
  c.left.push_back(i);
  c.right.push_back(i);
  return c;
}

/// Largest common summand of the sibling set {(J i, K i) : i = 1..N}, taken
/// componentwise on real and imaginary parts. Absent siblings count as 0.
inline Coefficient sibling_floor(const Terms& terms, const Monomial& parent, std::uint32_t n) {
  Rational re_min;
  Rational im_min;
  for (Letter i = 1; i <= n; ++i) {
    auto it = terms.find(child_of(parent, i));
    Rational re = it == terms.end() ? Rational(0) : it->second.real();
    Rational im = it == terms.end() ? Rational(0) : it->second.imag();
    if (i == 1 || re < re_min)
      re_min = re;
    if (i == 1 || im < im_min)
      im_min = im;
  }
  return Coefficient(re_min, im_min);
}

/// One collapse step: moves the common summand c of the siblings of `parent`
/// onto `parent` using sum_i s_{J i} s_{K i}^* = s_J s_K^*.
inline bool collapse_at(Terms& terms, const Monomial& parent, std::uint32_t n) {
  Coefficient c = sibling_floor(terms, parent, n);
  if (c.is_zero())
    return false;
  for (Letter i = 1; i <= n; ++i)
    accumulate(terms, child_of(parent, i), -c);
  accumulate(terms, parent, c);
  return true;
}

/// Parents whose sibling set currently admits a nonzero collapse step.
inline std::vector<Monomial> collapsible_parents(const Terms& terms, std::uint32_t n) {
  std::set<Monomial> parents;
  for (const auto& [m, c] : terms)
    if (auto p = parent_of(m))
      parents.insert(*p);
  std::vector<Monomial> out;
  for (const auto& p : parents)
    if (!sibling_floor(terms, p, n).is_zero())
      out.push_back(p);
  return out;
}

} // namespace detail

/// Canonical form. For O_N: like terms combined, then every sibling set is
/// collapsed deepest-first until each has common summand 0. The fixpoint is
/// independent of the order of collapse steps. For O_inf only like terms combine.
inline Element normalize(const Element& e) {
  if (e.tag().is_infinite() || e.is_zero())
    return e;
  const std::uint32_t n = e.tag().generators();
  Terms terms = e.terms();
  std::size_t max_level = 0;
  for (const auto& [m, c] : terms)
    max_level = std::max(max_level, m.length());
  // A parent sits two levels above its children, so one sweep from the deepest
  // level reaches the fixpoint.
  for (std::size_t level = max_level; level >= 2; --level) {
    std::set<Monomial> parents;
    for (const auto& [m, c] : terms)
      if (m.length() == level)
        if (auto p = detail::parent_of(m))
          parents.insert(*p);
    for (const auto& p : parents)
      detail::collapse_at(terms, p, n);
  }
  return Element::from_terms(e.tag(), std::move(terms));
}

inline Element add(const Element& a, const Element& b) {
  require_same_tag(a, b);
  Terms t = a.terms();
  for (const auto& [m, c] : b.terms())
    accumulate(t, m, c);
  return normalize(Element::from_terms(a.tag(), std::move(t)));
}

inline Element scale(const Coefficient& c, const Element& e) {
  Terms t;
  if (!c.is_zero())
    for (const auto& [m, x] : e.terms())
      t.emplace(m, c * x);
  return normalize(Element::from_terms(e.tag(), std::move(t)));
}

inline Element subtract(const Element& a, const Element& b) { return add(a, scale(-1, b)); }

/// (s_J s_K^*)(s_L s_M^*): s_{J L'} s_M^* if L = K L', s_J s_{M K'}^* if K = L K', else 0.
inline std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
  if (is_prefix(a.right, b.left)) {
    Monomial out(a.left, b.right);
    out.left.insert(out.left.end(), b.left.begin() + static_cast<std::ptrdiff_t>(a.right.size()), b.left.end());
    return out;
  }
  if (is_prefix(b.left, a.right)) {
    Monomial out(a.left, b.right);
    out.right.insert(out.right.end(), a.right.begin() + static_cast<std::ptrdiff_t>(b.left.size()), a.right.end());
    return out;
  }
  return std::nullopt;
}

/// Product without the final collapse; used where many products are summed.
inline Terms multiply_terms(const Element& a, const Element& b) {
  require_same_tag(a, b);
  Terms t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto m = multiply(ma, mb))
        accumulate(t, *m, ca * cb);
  return t;
}

inline Element multiply(const Element& a, const Element& b) {
  return normalize(Element::from_terms(a.tag(), multiply_terms(a, b)));
}

inline Element adjoint(const Element& e) {
  Terms t;
  for (const auto& [m, c] : e.terms())
    t.emplace(Monomial(m.right, m.left), c.conj());
  return Element::from_terms(e.tag(), std::move(t));
}

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return subtract(a, b); }
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
inline Element operator*(const Coefficient& c, const Element& e) { return scale(c, e); }

/// Splits terms by gauge degree |J| - |K|.
inline std::map<long, Element> grade_components(const Element& e) {
  std::map<long, Terms> parts;
  for (const auto& [m, c] : e.terms())
    parts[m.grade()].emplace(m, c);
  std::map<long, Element> out;
  for (auto& [g, t] : parts)
    out.emplace(g, Element::from_terms(e.tag(), std::move(t)));
  return out;
}

namespace detail {

struct TreeEntry {
  Word path; // common suffix stripped from both words, in reading order
  Coefficient coefficient;
};

/// Decides whether a combination of nodes of one sibling tree vanishes. A node
/// carrying value `acc` with no deeper entries below a child stands for acc
/// times that child's whole subtree, so expanding only where entries exist is
/// the same as expanding every monomial to the deepest level.
inline bool tree_vanishes(std::span<const TreeEntry> entries, std::size_t depth, Coefficient acc, std::uint32_t n) {
  std::size_t lo = 0;
  if (lo < entries.size() && entries[lo].path.size() == depth) {
    acc += entries[lo].coefficient;
    ++lo;
  }
  if (lo == entries.size())
    return acc.is_zero();
  Letter next = 1;
  while (lo < entries.size()) {
    Letter i = entries[lo].path[depth];
    std::size_t hi = lo;
    while (hi < entries.size() && entries[hi].path[depth] == i)
      ++hi;
    if (i > next && !acc.is_zero())
      return false; // a skipped child carries the bare value acc
    if (!tree_vanishes(entries.subspan(lo, hi - lo), depth + 1, acc, n))
      return false;
    next = i + 1;
    lo = hi;
  }
  return next > n || acc.is_zero();
}

} // namespace detail

/// Equality oracle by leveled expansion. Terms are grouped by grade and, within
/// a grade, by sibling tree (the monomial left after stripping all common
/// trailing letters); each tree is compared after expanding s_J s_K^* =
/// sum_{|L|=d} s_{J L} s_{K L}^* down to its deepest node. Trees are independent,
/// so a - b = 0 iff every tree vanishes. O_inf has no completeness relation and
/// compares combined tables directly.
inline bool equals(const Element& a, const Element& b) {
  require_same_tag(a, b);
  Terms diff = a.terms();
  for (const auto& [m, c] : b.terms())
    accumulate(diff, m, -c);
  if (a.tag().is_infinite() || diff.empty())
    return diff.empty();

  std::map<long, std::map<Monomial, std::vector<detail::TreeEntry>>> grades;
  for (const auto& [m, c] : diff) {
    std::size_t k = 0;
    while (k < m.left.size() && k < m.right.size() && m.left[m.left.size() - 1 - k] == m.right[m.right.size() - 1 - k])
      ++k;
    Monomial root(Word(m.left.begin(), m.left.end() - static_cast<std::ptrdiff_t>(k)),
                  Word(m.right.begin(), m.right.end() - static_cast<std::ptrdiff_t>(k)));
    Word path(m.left.end() - static_cast<std::ptrdiff_t>(k), m.left.end());
    grades[m.grade()][root].push_back({std::move(path), c});
  }
  for (auto& [g, trees] : grades) {
    for (auto& [root, entries] : trees) {
      std::sort(entries.begin(), entries.end(),
                [](const detail::TreeEntry& x, const detail::TreeEntry& y) { return x.path < y.path; });
      if (!detail::tree_vanishes(entries, 0, Coefficient(), a.tag().generators()))
        return false;
    }
  }
  return true;
}

/// s_J s_K^* as sum_{|L|=d} s_{J L} s_{K L}^* (O_N only), without collapsing.
inline Element expand_to_depth(const Element& e, std::size_t depth) {
  if (e.tag().is_infinite())
    throw Error("expansion needs a finite Cuntz algebra");
  Terms current = e.terms();
  for (std::size_t d = 0; d < depth; ++d) {
    Terms next;
    for (const auto& [m, c] : current)
      for (Letter i = 1; i <= e.tag().generators(); ++i)
        accumulate(next, detail::child_of(m, i), c);
    current = std::move(next);
  }
  return Element::from_terms(e.tag(), std::move(current));
}

inline std::string to_string(const Monomial& m) {
  if (m.is_unit())
    return "I";
  std::string out;
  for (Letter l : m.left) {
    if (!out.empty())
      out += ' ';
    out += "s" + std::to_string(l);
  }
  for (auto it = m.right.rbegin(); it != m.right.rend(); ++it) {
    if (!out.empty())
      out += ' ';
    out += "s" + std::to_string(*it) + "'";
  }
  return out;
}

/// Renders in the expression syntax accepted by cuntz::parse.
inline std::string to_string(const Element& e) {
  if (e.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Coefficient shown = c;
    bool negative = c.is_real() && c.real() < 0;
    if (negative)
      shown = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (shown.is_one()) {
      out += to_string(m);
    } else {
      out += shown.to_string();
      if (!m.is_unit())
        out += " " + to_string(m);
    }
  }
  return out;
}

} // namespace cuntz
