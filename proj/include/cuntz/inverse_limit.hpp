#pragma once

#include "cuntz/hom.hpp"
#include "cuntz/poset.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cuntz {

// ---------------------------------------------------------------------------
// Truncated inverse limits over divisibility chains
// ---------------------------------------------------------------------------

/// A truncation (x_{n_1}, ..., x_{n_k}) of an element of lim R_n; entry j lives
/// in R_{n_j} = O_{n_j + 1}.
struct CoherentFamily {
  Chain chain;
  std::vector<Element> entries;
};

/// First pair (j, l), j < l (0-based), with f_{n_j,n_l}(x_{n_l}) != x_{n_j}.
inline std::optional<std::pair<std::size_t, std::size_t>> find_incoherence(const CoherentFamily& fam) {
  if (fam.entries.size() != fam.chain.size())
    throw Error("family has " + std::to_string(fam.entries.size()) + " entries for a chain of length " +
                std::to_string(fam.chain.size()));
  for (std::size_t j = 0; j < fam.entries.size(); ++j) {
    const auto expected = AlgebraTag::r(static_cast<std::uint32_t>(fam.chain[j]));
    if (fam.entries[j].tag() != expected)
      throw Error("algebra mismatch: entry " + std::to_string(j) + " lies in " + fam.entries[j].tag().name() +
                  ", expected " + expected.name());
  }
  // Consecutive pairs would suffice since f_{n,m} o f_{m,l} = f_{n,l}; all
  // pairs are checked anyway.
  for (std::size_t l = 1; l < fam.entries.size(); ++l) {
    for (std::size_t j = 0; j < l; ++j) {
      auto h = f(static_cast<std::uint32_t>(fam.chain[j]), static_cast<std::uint32_t>(fam.chain[l]));
      if (!equals(apply(h, fam.entries[l]), fam.entries[j]))
        return std::make_pair(j, l);
    }
  }
  return std::nullopt;
}

inline bool check_coherent(const CoherentFamily& fam) { return !find_incoherence(fam).has_value(); }

/// psi_Lambda(x) = (f_{n_1,inf}(x), ..., f_{n_k,inf}(x)).
inline CoherentFamily psi(const Chain& chain, const Element& x) {
  if (x.tag().is_finite())
    throw Error("psi takes an element of Oinf, got " + x.tag().name());
  CoherentFamily fam{chain, {}};
  for (Natural n : chain.elements())
    fam.entries.push_back(apply(f_inf(static_cast<std::uint32_t>(n)), x));
  return fam;
}

// ---------------------------------------------------------------------------
// Free subsemigroups of O_2 = <t_1, t_2>
// ---------------------------------------------------------------------------

namespace detail {

inline bool binary_word(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](Letter l) { return l == 1 || l == 2; });
}

inline std::size_t trailing_twos(const Word& w) {
  std::size_t run = 0;
  while (run < w.size() && w[w.size() - 1 - run] == 2)
    ++run;
  return run;
}

} // namespace detail

/// K_n = {t_2^{kn} : k >= 1}.
inline bool in_K(std::uint32_t n, const Word& w) {
  if (n == 0)
    throw Error("K_n needs n >= 1");
  return !w.empty() && detail::trailing_twos(w) == w.size() && w.size() % n == 0;
}

/// L_inf = L_1 t_1: nonempty binary words ending in 1.
inline bool in_L_inf(const Word& w) { return !w.empty() && detail::binary_word(w) && w.back() == 1; }

/// L_n = S({t_1, t_2 t_1, ..., t_2^{n-1} t_1, t_2^n}). Every 2-run followed by a
/// 1 splits into blocks 2^n ... 2^n 2^s 1 with s < n, so a binary word is in
/// L_n iff its trailing 2-run has length divisible by n.
inline bool in_L(std::uint32_t n, const Word& w) {
  if (n == 0)
    throw Error("L_n needs n >= 1");
  return !w.empty() && detail::binary_word(w) && detail::trailing_twos(w) % n == 0;
}

enum class WordClass { l_inf, y_n };

struct WordSplit {
  WordClass kind;
  Word x; // L_inf part or empty
  Word u; // K_n part, empty for l_inf
};

/// L_n = L_inf disjoint-union Y_n, Y_n = {u, x u : x in L_inf, u in K_n}.
inline WordSplit decompose_word(std::uint32_t n, const Word& w) {
  if (!in_L(n, w))
    throw Error("word " + word_to_string(w) + " is not in L_" + std::to_string(n));
  if (w.back() == 1)
    return {WordClass::l_inf, w, {}};
  const std::size_t run = detail::trailing_twos(w);
  return {WordClass::y_n, Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(run)), repeat(2, run)};
}

// ---------------------------------------------------------------------------
// Q_n = Q_inf + V_n + V_n^*
// ---------------------------------------------------------------------------

enum class Component { q_inf, v, v_star };

/// Both words in L_inf or empty.
inline bool is_q_inf_shape(const Monomial& m) {
  return (m.left.empty() || in_L_inf(m.left)) && (m.right.empty() || in_L_inf(m.right));
}

/// x u y^* with x, y in L_inf or empty and u in K_n.
inline bool is_v_shape(std::uint32_t n, const Monomial& m) {
  if (m.left.empty() || !detail::binary_word(m.left) || (!m.right.empty() && !in_L_inf(m.right)))
    return false;
  const std::size_t run = detail::trailing_twos(m.left);
  return run > 0 && run % n == 0;
}

inline bool is_v_star_shape(std::uint32_t n, const Monomial& m) { return is_v_shape(n, Monomial(m.right, m.left)); }

struct Decomposition {
  Element q_inf;
  Element v;
  Element v_star;
};

namespace detail {

/// J = x t_2^{a n} with x in L_inf or empty; returns (x, a).
inline std::pair<Word, std::size_t> split_power(std::uint32_t n, const Word& w) {
  if (!w.empty() && !in_L(n, w))
    throw Error("word " + word_to_string(w) + " is not in L_" + std::to_string(n) + " or empty");
  const std::size_t run = trailing_twos(w);
  return {Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(run)), run / n};
}

/// Adds c * x t_2^{p} ( I - sum_{j<d} t_2^j t_1 t_1^* t_2^{*j} ) t_2^{*q} y^*
/// to the matching parts, where exactly one of p, q is nonzero or both are 0.
inline void add_projection_form(Terms& lead_part, Terms& q_part, const Word& x, std::size_t p, const Word& y,
                                std::size_t q, std::size_t d, const Coefficient& c) {
  accumulate(lead_part, Monomial(concat(x, repeat(2, p)), concat(y, repeat(2, q))), c);
  for (std::size_t j = 0; j < d; ++j) {
    Word tail = repeat(2, j);
    tail.push_back(1);
    accumulate(q_part, Monomial(concat(concat(x, repeat(2, p)), tail), concat(concat(y, repeat(2, q)), tail)), -c);
  }
}

} // namespace detail

/// Splits x u v^* y^* (u = t_2^{an}, v = t_2^{bn}) into its Q_inf, V_n and
/// V_n^* parts. When a, b > 0 the factor u v^* is rewritten with
/// t_2^m t_2^{*m} = I - sum_{j<m} t_2^j t_1 t_1^* t_2^{*j}. Parts are returned
/// with like terms combined but not collapsed, so their monomial shapes stay
/// visible.
inline Decomposition classify_monomial(std::uint32_t n, const Monomial& mono, const Coefficient& c = 1) {
  if (n == 0)
    throw Error("decomposition needs n >= 1");
  const AlgebraTag o2 = AlgebraTag::finite(2);
  auto [x, a] = detail::split_power(n, mono.left);
  auto [y, b] = detail::split_power(n, mono.right);
  Terms q_part, v_part, v_star_part;
  if (a == 0 && b == 0) {
    accumulate(q_part, mono, c);
  } else if (b == 0) {
    accumulate(v_part, mono, c);
  } else if (a == 0) {
    accumulate(v_star_part, mono, c);
  } else if (a == b) {
    detail::add_projection_form(q_part, q_part, x, 0, y, 0, a * n, c);
  } else if (a > b) {
    detail::add_projection_form(v_part, q_part, x, (a - b) * n, y, 0, b * n, c);
  } else {
    detail::add_projection_form(v_star_part, q_part, x, 0, y, (b - a) * n, a * n, c);
  }
  return {Element::from_terms(o2, std::move(q_part)), Element::from_terms(o2, std::move(v_part)),
          Element::from_terms(o2, std::move(v_star_part))};
}

/// Linear extension of classify_monomial over an element of O_2 spanned by
/// monomials with words in L_n or empty.
inline Decomposition decompose_element(std::uint32_t n, const Element& e) {
  if (e.tag() != AlgebraTag::finite(2))
    throw Error("decomposition works in O2, got " + e.tag().name());
  Terms q_part, v_part, v_star_part;
  for (const auto& [m, c] : e.terms()) {
    Decomposition d = classify_monomial(n, m, c);
    for (const auto& [mm, cc] : d.q_inf.terms())
      accumulate(q_part, mm, cc);
    for (const auto& [mm, cc] : d.v.terms())
      accumulate(v_part, mm, cc);
    for (const auto& [mm, cc] : d.v_star.terms())
      accumulate(v_star_part, mm, cc);
  }
  const AlgebraTag o2 = e.tag();
  return {Element::from_terms(o2, std::move(q_part)), Element::from_terms(o2, std::move(v_part)),
          Element::from_terms(o2, std::move(v_star_part))};
}

// ---------------------------------------------------------------------------
// The state omega_n on R_n with omega_n(s_1) = 1
// ---------------------------------------------------------------------------

namespace detail {

inline bool only_ones(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](Letter l) { return l == 1; });
}

} // namespace detail

/// omega(s_J s_K^*) = 1 if J and K consist of 1's only (either may be empty),
/// else 0. Forced by omega(s_1) = 1: s_1 is then a fixed vector in the GNS
/// space, so omega(s_J s_K^*) = <s_K^* Omega, s_J^* Omega>.
inline bool omega_indicator(const Word& left, const Word& right) {
  return detail::only_ones(left) && detail::only_ones(right);
}

inline Coefficient state_omega(std::uint32_t n, const Element& e) {
  if (e.tag() != AlgebraTag::r(n))
    throw Error("omega_" + std::to_string(n) + " is a state on " + AlgebraTag::r(n).name() + ", got " + e.tag().name());
  Coefficient value;
  for (const auto& [m, c] : e.terms())
    if (omega_indicator(m.left, m.right))
      value += c;
  return value;
}

} // namespace cuntz
