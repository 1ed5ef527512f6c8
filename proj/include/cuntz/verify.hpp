#pragma once

#include "cuntz/check.hpp"
#include "cuntz/gauge.hpp"
#include "cuntz/inverse_limit.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/poset.hpp"

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace cuntz {

/// `mutate` swaps the images of the first and last generator of every family
/// hom the suites build. The result is still a unital *-homomorphism, just
/// not the one the suites expect, so each suite must refute it.
struct FamilyOptions {
  bool mutate = false;
};

namespace detail {

inline std::vector<Word> swapped_ends(std::vector<Word> words) {
  std::swap(words.front(), words.back());
  return words;
}

} // namespace detail

inline GenHom family_f(std::uint32_t n, std::uint32_t m, const FamilyOptions& opt = {}) {
  if (!opt.mutate)
    return f(n, m);
  return make_word_hom(AlgebraTag::r(m), AlgebraTag::r(n), detail::swapped_ends(f_words(n, m)));
}

/// Mutation swaps s_1 and s_{n+1}.
inline GenHom family_f_inf(std::uint32_t n, const FamilyOptions& opt = {}, std::size_t bound = kDefaultInfiniteBound) {
  if (!opt.mutate)
    return f_inf(n, bound);
  const AlgebraTag target = AlgebraTag::r(n);
  return make_hom(
      AlgebraTag::infinite(), target,
      [n, target](Letter k) {
        const Letter swapped = k == 1 ? n + 1 : k == n + 1 ? 1 : k;
        return Element::word(target, f_inf_word(n, swapped));
      },
      std::max<std::size_t>(bound, n + 1));
}

inline GenHom family_q(std::uint32_t r, std::uint32_t n, const FamilyOptions& opt = {}) {
  if (!opt.mutate)
    return q(r, n);
  const GenHom base = q(r, n);
  std::vector<Word> words;
  for (Letter k = 1; k <= base.domain().generators(); ++k)
    words.push_back(*base.word_image(k));
  const auto rn = static_cast<std::uint32_t>(uhf_rank(r, n)), rn1 = static_cast<std::uint32_t>(uhf_rank(r, n + 1));
  return make_word_hom(AlgebraTag::finite(rn1), AlgebraTag::finite(rn), detail::swapped_ends(std::move(words)));
}

/// Divisors of m in increasing order.
inline std::vector<std::uint32_t> divisors(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= m; ++d)
    if (m % d == 0)
      out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------
// f_{n,m} o f_{m,l} = f_{n,l}
// ---------------------------------------------------------------------------

inline SuiteReport verify_inverse_system(std::uint32_t max, const FamilyOptions& opt = {}) {
  SuiteReport rep{"inverse system n | m | l <= " + std::to_string(max), {}};
  std::size_t triples = 0;
  bool ok = true;
  std::string bad;
  for (std::uint32_t l = 1; l <= max && ok; ++l)
    for (std::uint32_t m : divisors(l)) {
      for (std::uint32_t n : divisors(m)) {
        ++triples;
        GenHom lhs = compose(family_f(n, m, opt), family_f(m, l, opt));
        if (auto k = find_image_mismatch(lhs, family_f(n, l, opt))) {
          ok = false;
          bad = "f(" + std::to_string(n) + "," + std::to_string(m) + ") o f(" + std::to_string(m) + "," +
                std::to_string(l) + ") sends s" + std::to_string(*k) + " to " + to_string(lhs.image(*k)) +
                ", f(" + std::to_string(n) + "," + std::to_string(l) + ") to " +
                to_string(family_f(n, l, opt).image(*k));
          break;
        }
      }
      if (!ok)
        break;
    }
  rep.add("compose(f(n,m), f(m,l)) = f(n,l)", ok, ok ? std::to_string(triples) + " chains" : bad);
  return rep;
}

/// f_{n,m} o f_{m,inf} = f_{n,inf} on s_1..s_indices.
inline SuiteReport verify_infinite_compatibility(std::uint32_t max, Letter indices = 30, const FamilyOptions& opt = {}) {
  SuiteReport rep{"Oinf compatibility n | m <= " + std::to_string(max), {}};
  std::size_t pairs = 0;
  std::string bad;
  for (std::uint32_t m = 1; m <= max && bad.empty(); ++m)
    for (std::uint32_t n : divisors(m)) {
      ++pairs;
      GenHom outer = family_f(n, m, opt);
      GenHom lhs_inner = family_f_inf(m, opt, indices);
      GenHom rhs = family_f_inf(n, opt, indices);
      for (Letter k = 1; k <= indices; ++k) {
        Element lhs = apply(outer, lhs_inner.image(k));
        if (!equals(lhs, rhs.image(k))) {
          bad = "f(" + std::to_string(n) + "," + std::to_string(m) + ") o f_inf(" + std::to_string(m) + ") sends s" +
                std::to_string(k) + " to " + to_string(lhs) + ", f_inf(" + std::to_string(n) + ") to " +
                to_string(rhs.image(k));
          break;
        }
      }
      if (!bad.empty())
        break;
    }
  rep.add("f(n,m) o f_inf(m) = f_inf(n)", bad.empty(),
          bad.empty() ? std::to_string(pairs) + " pairs, s1..s" + std::to_string(indices) : bad);
  return rep;
}

/// Kraft sum 1 and prefix-freeness of every f(n,m), m <= max_m, and q(r,n).
inline SuiteReport verify_prefix_codes(std::uint32_t max_m, std::uint32_t max_r, std::uint32_t max_n) {
  SuiteReport rep{"prefix-code certificates", {}};
  std::size_t count = 0;
  std::string bad;
  for (std::uint32_t m = 1; m <= max_m && bad.empty(); ++m)
    for (std::uint32_t n : divisors(m)) {
      auto words = f_words(n, m);
      auto c = validate_prefix_code(words, n + 1);
      ++count;
      if (!c.maximal) {
        bad = "f(" + std::to_string(n) + "," + std::to_string(m) + ") Kraft sum " + c.kraft_sum.str();
        break;
      }
    }
  rep.add("f(n,m) image codes maximal", bad.empty(), bad.empty() ? std::to_string(count) + " homs" : bad);
  bad.clear();
  count = 0;
  for (std::uint32_t r = 2; r <= max_r && bad.empty(); ++r)
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      GenHom h = q(r, n);
      std::vector<Word> words;
      for (Letter k = 1; k <= h.domain().generators(); ++k)
        words.push_back(*h.word_image(k));
      auto c = validate_prefix_code(words, h.codomain().generators());
      ++count;
      if (!c.maximal) {
        bad = "q(" + std::to_string(r) + "," + std::to_string(n) + ") Kraft sum " + c.kraft_sum.str();
        break;
      }
    }
  rep.add("q(r,n) image codes maximal", bad.empty(), bad.empty() ? std::to_string(count) + " homs" : bad);
  return rep;
}

// ---------------------------------------------------------------------------
// psi coherence
// ---------------------------------------------------------------------------

inline SuiteReport verify_psi(const Chain& chain, const Element& x, const FamilyOptions& opt = {},
                              std::size_t bound = kDefaultInfiniteBound) {
  if (x.tag().is_finite())
    throw Error("psi takes an element of Oinf, got " + x.tag().name());
  SuiteReport rep{"psi coherence", {}};
  CoherentFamily fam{chain, {}};
  for (Natural n : chain.elements())
    fam.entries.push_back(apply(family_f_inf(static_cast<std::uint32_t>(n), opt, bound), x));
  auto bad = find_incoherence(fam);
  std::string detail;
  if (bad) {
    const auto n = chain[bad->first], m = chain[bad->second];
    detail = "f(" + std::to_string(n) + "," + std::to_string(m) + ")(" + to_string(fam.entries[bad->second]) +
             ") = " +
             to_string(apply(f(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)), fam.entries[bad->second])) +
             " but x_" + std::to_string(n) + " = " + to_string(fam.entries[bad->first]);
  } else {
    for (std::size_t k = 0; k < chain.size(); ++k)
      detail += (k ? "; x_" : "x_") + std::to_string(chain[k]) + " = " + to_string(fam.entries[k]);
  }
  rep.add("f(n,m)(x_m) = x_n along the chain", !bad, detail);
  return rep;
}

// ---------------------------------------------------------------------------
// Semigroup and Q_n decomposition
// ---------------------------------------------------------------------------

/// t_2^n t_2^{*n} = I - sum_{k<n} t_2^k t_1 t_1^* t_2^{*k}, checked by equals.
inline bool projection_identity_holds(std::uint32_t n) {
  const AlgebraTag o2 = AlgebraTag::finite(2);
  Element lhs = Element::monomial(o2, Monomial(repeat(2, n), repeat(2, n)));
  Terms rhs;
  accumulate(rhs, Monomial{}, 1);
  for (std::uint32_t k = 0; k < n; ++k) {
    Word w = repeat(2, k);
    w.push_back(1);
    accumulate(rhs, Monomial(w, w), -1);
  }
  return equals(lhs, Element::from_terms(o2, std::move(rhs)));
}

/// Nonempty words of S(generators) up to max_len, by concatenation.
inline std::set<Word> generate_semigroup(const std::vector<Word>& generators, std::size_t max_len) {
  std::set<Word> seen;
  std::vector<Word> frontier;
  for (const auto& g : generators)
    if (!g.empty() && g.size() <= max_len && seen.insert(g).second)
      frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& g : generators) {
        if (w.size() + g.size() > max_len)
          continue;
        Word c = concat(w, g);
        if (seen.insert(c).second)
          next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Binary words of length 1..max_len.
inline std::vector<Word> binary_words(std::size_t max_len) {
  std::vector<Word> out;
  detail::for_each_word(2, max_len, [&](const Word& w) {
    if (!w.empty())
      out.push_back(w);
    return true;
  });
  return out;
}

inline SuiteReport verify_decomposition(std::uint32_t n, std::size_t max_len, std::size_t split_len = 10,
                                        const FamilyOptions& opt = {}) {
  if (n == 0)
    throw Error("decomposition needs n >= 1");
  SuiteReport rep{"decomposition n=" + std::to_string(n) + " max-len=" + std::to_string(max_len), {}};
  const AlgebraTag o2 = AlgebraTag::finite(2);

  // L_n is the image semigroup of f(1,n): t_2^l t_1 (l < n) and t_2^n.
  {
    GenHom h = family_f(1, n, opt);
    std::string bad;
    for (Letter k = 1; k <= n + 1 && bad.empty(); ++k) {
      auto w = h.word_image(k);
      const bool ok = w && (k <= n ? in_L_inf(*w) : in_K(n, *w));
      if (!ok)
        bad = "f(1," + std::to_string(n) + ")(s" + std::to_string(k) + ") = " + to_string(h.image(k)) +
              (k <= n ? " not in L_inf" : " not in K_n");
    }
    rep.add("f(1,n) generator images in L_inf and K_n", bad.empty(), bad);
  }

  {
    std::vector<Word> gens;
    GenHom h = family_f(1, n, opt);
    for (Letter k = 1; k <= n + 1; ++k)
      gens.push_back(*h.word_image(k));
    const auto semigroup = generate_semigroup(gens, split_len);
    std::string bad;
    std::size_t checked = 0;
    for (const auto& w : binary_words(split_len)) {
      ++checked;
      const bool member = semigroup.count(w) > 0;
      if (member != in_L(n, w)) {
        bad = word_to_string(w) + (member ? " generated but rejected" : " accepted but not generated");
        break;
      }
      if (!member)
        continue;
      const WordSplit s = decompose_word(n, w);
      const bool in_inf = in_L_inf(w);
      const bool in_y = s.kind == WordClass::y_n && in_K(n, s.u) && (s.x.empty() || in_L_inf(s.x)) &&
                        concat(s.x, s.u) == w;
      if (in_inf == in_y || (s.kind == WordClass::l_inf) != in_inf) {
        bad = word_to_string(w) + " does not split as L_inf or Y_n";
        break;
      }
    }
    rep.add("L_n = L_inf + Y_n, disjoint", bad.empty(),
            bad.empty() ? std::to_string(checked) + " words up to length " + std::to_string(split_len) : bad);
  }

  {
    std::string bad;
    for (std::uint32_t k = 1; k <= std::max<std::uint32_t>(n, 1) && bad.empty(); ++k)
      if (!projection_identity_holds(k))
        bad = "fails for n = " + std::to_string(k);
    rep.add("t2^n t2*^n = I - sum t2^k t1 t1* t2*^k", bad.empty(), bad);
  }

  {
    std::vector<Word> words{Word{}};
    for (const auto& w : binary_words(max_len))
      if (in_L(n, w))
        words.push_back(w);
    std::size_t checked = 0;
    std::string bad;
    for (const auto& j : words) {
      for (const auto& k : words) {
        ++checked;
        Monomial m(j, k);
        Decomposition d = classify_monomial(n, m);
        Element sum = add(add(d.q_inf, d.v), d.v_star);
        if (!equals(sum, Element::monomial(o2, m))) {
          bad = to_string(m) + " decomposes to " + to_string(sum);
          break;
        }
        auto exclusive = [n](const Monomial& t, int want) {
          const int q = is_q_inf_shape(t), v = is_v_shape(n, t), vs = is_v_star_shape(n, t);
          return q + v + vs == 1 && ((want == 0 && q) || (want == 1 && v) || (want == 2 && vs));
        };
        const Element* parts[] = {&d.q_inf, &d.v, &d.v_star};
        for (int p = 0; p < 3 && bad.empty(); ++p)
          for (const auto& [t, c] : parts[p]->terms())
            if (!exclusive(t, p)) {
              bad = to_string(m) + " has part term " + to_string(t) + " outside its component";
              break;
            }
        if (!bad.empty())
          break;
      }
      if (!bad.empty())
        break;
    }
    rep.add("Q_n = Q_inf + V_n + V_n*", bad.empty(),
            bad.empty() ? std::to_string(checked) + " monomials with |J|, |K| <= " + std::to_string(max_len) : bad);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// UHF
// ---------------------------------------------------------------------------

/// Base-r digits of k-1, most significant first, as letters 1..r.
inline Word base_digits(std::uint64_t value, std::uint32_t r, std::size_t length) {
  Word w(length, 1);
  for (std::size_t t = length; t-- > 0;) {
    w[t] = static_cast<Letter>(value % r) + 1;
    value /= r;
  }
  return w;
}

inline SuiteReport verify_uhf(std::uint32_t r, std::uint32_t depth, const FamilyOptions& opt = {}) {
  UhfChainReport chain = uhf_chain_check(r, depth);
  SuiteReport rep = chain.suite;
  std::string bad;
  for (std::uint32_t n = 1; n < depth && bad.empty(); ++n) {
    GenHom acc = family_q(r, n, opt);
    for (std::uint32_t k = n - 1; k >= 1; --k)
      acc = compose(family_q(r, k, opt), acc);
    const std::size_t len = std::size_t{1} << n;
    for (Letter k = 1; k <= acc.domain().generators(); ++k) {
      auto w = acc.word_image(k);
      if (!w || *w != base_digits(k - 1, r, len)) {
        bad = "A_{r," + std::to_string(n + 1) + "} generator s" + std::to_string(k) + " -> " + to_string(acc.image(k)) +
              ", expected digit block " + word_to_string(base_digits(k - 1, r, len));
        break;
      }
    }
  }
  rep.add("pushed generators are base-r digit blocks", bad.empty(), bad);
  std::string grades;
  for (auto [a, b] : chain.grade_map)
    grades += (grades.empty() ? "" : ", ") + std::to_string(a) + "->" + std::to_string(b);
  rep.add("observed grade map", true, grades);
  return rep;
}

// ---------------------------------------------------------------------------
// omega_n o f_{n,m} = omega_m
// ---------------------------------------------------------------------------

/// Random element of `tag` with up to `terms` monomials, words up to
/// `max_word`, letters up to `max_letter`, small Gaussian integer coefficients.
template <typename Rng>
Element random_element(Rng& rng, AlgebraTag tag, std::size_t terms, std::size_t max_word, std::uint32_t max_letter) {
  const std::uint32_t letters = tag.is_finite() ? std::min(tag.generators(), max_letter) : max_letter;
  std::uniform_int_distribution<std::size_t> len(0, max_word), count(1, terms);
  std::uniform_int_distribution<Letter> letter(1, letters);
  std::uniform_int_distribution<int> coef(-3, 3);
  Terms out;
  const std::size_t k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    Word j, kk;
    for (std::size_t a = len(rng); a > 0; --a)
      j.push_back(letter(rng));
    for (std::size_t a = len(rng); a > 0; --a)
      kk.push_back(letter(rng));
    accumulate(out, Monomial(j, kk), Coefficient(Rational(coef(rng)), Rational(coef(rng) / 2)));
  }
  return Element::from_terms(tag, std::move(out));
}

inline SuiteReport verify_state(std::uint32_t max, std::size_t word_len = 6, std::size_t positivity_samples = 100,
                                const FamilyOptions& opt = {}) {
  SuiteReport rep{"state omega_n o f(n,m) = omega_m, n | m <= " + std::to_string(max), {}};
  std::string bad;
  std::uint64_t covered = 0;
  std::size_t pairs = 0;
  for (std::uint32_t m = 1; m <= max && bad.empty(); ++m)
    for (std::uint32_t n : divisors(m)) {
      ++pairs;
      GenHom h = family_f(n, m, opt);
      const std::uint32_t alphabet = m + 1;
      // omega(s_J s_K^*) factors as a product over J and K, and so does its
      // pullback under a word hom; comparing the factors on every J decides
      // every pair (J, K). A subtree where both J and its image already left
      // 1* agrees everywhere and is counted without being walked.
      std::uint64_t words_up_to = 0, power = 1;
      for (std::size_t t = 0; t <= word_len; ++t, power *= alphabet)
        words_up_to += power;
      covered += words_up_to * words_up_to;
      std::function<void(Word&, Word&)> walk = [&](Word& j, Word& w) {
        if (!bad.empty())
          return;
        const bool dom = omega_indicator(j, {}), img = omega_indicator(w, {});
        if (dom != img) {
          bad = "f(" + std::to_string(n) + "," + std::to_string(m) + "): omega_m(" +
                to_string(Monomial(j, {})) + ") = " + (dom ? "1" : "0") + ", omega_n of image " +
                to_string(Monomial(w, {})) + " = " + (img ? "1" : "0");
          return;
        }
        if (!dom && !img)
          return;
        if (j.size() == word_len)
          return;
        for (Letter a = 1; a <= alphabet; ++a) {
          const Word img_a = *h.word_image(a);
          j.push_back(a);
          w.insert(w.end(), img_a.begin(), img_a.end());
          walk(j, w);
          w.resize(w.size() - img_a.size());
          j.pop_back();
        }
      };
      Word j, w;
      walk(j, w);
      if (!bad.empty())
        break;
      // symbolic cross-check through apply on a few mixed monomials
      std::mt19937_64 rng(m * 131 + n);
      for (int t = 0; t < 20 && bad.empty(); ++t) {
        Element e = random_element(rng, AlgebraTag::r(m), 3, 3, std::min<std::uint32_t>(alphabet, 3));
        const Coefficient lhs = state_omega(n, apply(h, e)), rhs = state_omega(m, e);
        if (lhs != rhs)
          bad = "f(" + std::to_string(n) + "," + std::to_string(m) + "): omega on " + to_string(e) + " gives " +
                rhs.to_string() + ", pulled back " + lhs.to_string();
      }
    }
  rep.add("omega_n o f(n,m) = omega_m", bad.empty(),
          bad.empty() ? std::to_string(pairs) + " homs, " + std::to_string(covered) + " monomials" : bad);

  std::string neg;
  std::mt19937_64 rng(20261016);
  for (std::size_t t = 0; t < positivity_samples && neg.empty(); ++t) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(t % std::max<std::uint32_t>(max, 1));
    Element e = random_element(rng, AlgebraTag::r(n), 4, 3, 3);
    const Coefficient v = state_omega(n, adjoint(e) * e);
    if (v.real() < 0 || v.imag() != 0)
      neg = "omega(e* e) = " + v.to_string() + " for e = " + to_string(e);
  }
  rep.add("omega(e* e) >= 0", neg.empty(), neg.empty() ? std::to_string(positivity_samples) + " samples" : neg);
  return rep;
}

// ---------------------------------------------------------------------------
// Interval picture of a chain of embeddings
// ---------------------------------------------------------------------------

/// Each generator of R_{n_j} is drawn as the subinterval of [0,1) cut out by
/// its image word under f(n_1, n_j), read in base n_1 + 1. Rows go from the
/// coarsest algebra down; every row refines the one above it.
inline std::string render_partition(const Chain& chain, std::size_t width = 64) {
  const auto base = static_cast<std::uint32_t>(chain[0]) + 1;
  std::string out;
  std::vector<std::size_t> label_width;
  std::size_t name_width = 0;
  for (Natural n : chain.elements())
    name_width = std::max(name_width, ("R" + std::to_string(n) + "=O" + std::to_string(n + 1)).size());
  for (Natural n : chain.elements()) {
    const auto nn = static_cast<std::uint32_t>(n);
    GenHom h = f(static_cast<std::uint32_t>(chain[0]), nn);
    std::string row(width + 1, ' ');
    std::vector<std::pair<std::size_t, std::string>> labels;
    for (Letter k = 1; k <= nn + 1; ++k) {
      const Word w = *h.word_image(k);
      Rational start = 0, scale = 1;
      for (Letter a : w) {
        scale /= base;
        start += scale * (a - 1);
      }
      const Rational x = start * width;
      const auto col = Integer(numerator(x) / denominator(x)).convert_to<std::size_t>();
      row[col] = '|';
      labels.emplace_back(col + 1, "s" + std::to_string(k));
    }
    row[width] = '|';
    // a label is drawn only when the whole of it fits inside its cell
    for (const auto& [col, text] : labels) {
      const std::size_t end = row.find('|', col);
      if (end - col >= text.size())
        row.replace(col, text.size(), text);
    }
    std::string name = "R" + std::to_string(n) + "=O" + std::to_string(n + 1);
    name.resize(name_width, ' ');
    out += name + " " + row + "\n";
  }
  return out;
}

} // namespace cuntz
