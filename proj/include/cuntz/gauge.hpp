#pragma once

#include "cuntz/check.hpp"
#include "cuntz/hom.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cuntz {

/// Fixed by the U(1) gauge action: every monomial has |J| = |K|.
inline bool is_gauge_invariant(const Element& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.grade() == 0; });
}

/// Fixed by the torus action: every monomial has J = K.
inline bool is_diagonal(const Element& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.left == t.first.right; });
}

namespace detail {

/// Calls visit(w) for every word over {1..alphabet} of length 0..max_len, in
/// length-then-lex order.
inline void for_each_word(std::uint32_t alphabet, std::size_t max_len, const std::function<bool(const Word&)>& visit) {
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      if (!visit(w))
        return;
      if (len < max_len)
        for (Letter a = 1; a <= alphabet; ++a) {
          Word c = w;
          c.push_back(a);
          next.push_back(std::move(c));
        }
    }
    layer = std::move(next);
  }
}

} // namespace detail

struct FixedPointReport {
  std::size_t diagonal_checked = 0;
  bool diagonal_preserved = true;
  std::optional<Monomial> diagonal_counterexample;
  std::size_t gauge_checked = 0;
  /// Gauge-invariant monomial whose image is not gauge invariant.
  std::optional<Monomial> witness;
  std::optional<Element> witness_image;
};

/// (a) images of s_J s_J^* with |J| <= sample_len are diagonal; (b) the first
/// s_J s_K^*, |J| = |K| <= witness_len, whose image leaves the gauge-fixed part.
/// Word-image homs are evaluated by extending the image word letter by letter.
inline FixedPointReport fixed_point_report(const GenHom& h, std::size_t sample_len, std::size_t witness_len = 2) {
  if (!h.domain().is_finite() || !h.codomain().is_finite())
    throw Error("fixed point report needs finite Cuntz algebras");
  const std::uint32_t n = h.domain().generators();
  std::vector<std::optional<Word>> words;
  bool all_words = true;
  for (Letter k = 1; k <= n; ++k) {
    words.push_back(h.word_image(k));
    all_words = all_words && words.back().has_value();
  }
  FixedPointReport rep;

  if (all_words) {
    // s_J s_J^* -> s_w s_w^*, diagonal by construction; walk the tree anyway
    // so the check counts what it covers.
    std::function<void(Word&, Word&, std::size_t)> walk = [&](Word& j, Word& w, std::size_t depth) {
      ++rep.diagonal_checked;
      if (!is_diagonal(Element::monomial(h.codomain(), Monomial(w, w))) && !rep.diagonal_counterexample) {
        rep.diagonal_preserved = false;
        rep.diagonal_counterexample = Monomial(j, j);
      }
      if (depth == sample_len)
        return;
      for (Letter a = 1; a <= n; ++a) {
        const Word& img = *words[a - 1];
        j.push_back(a);
        w.insert(w.end(), img.begin(), img.end());
        walk(j, w, depth + 1);
        w.resize(w.size() - img.size());
        j.pop_back();
      }
    };
    Word j, w;
    walk(j, w, 0);
  } else {
    detail::for_each_word(n, sample_len, [&](const Word& j) {
      ++rep.diagonal_checked;
      if (!is_diagonal(apply(h, Element::monomial(h.domain(), Monomial(j, j))))) {
        rep.diagonal_preserved = false;
        rep.diagonal_counterexample = Monomial(j, j);
        return false;
      }
      return true;
    });
  }

  for (std::size_t len = 1; len <= witness_len && !rep.witness; ++len) {
    std::vector<Word> level;
    detail::for_each_word(n, len, [&](const Word& w) {
      if (w.size() == len)
        level.push_back(w);
      return true;
    });
    for (const auto& j : level) {
      for (const auto& k : level) {
        ++rep.gauge_checked;
        Element img = apply(h, Element::monomial(h.domain(), Monomial(j, k)));
        if (!is_gauge_invariant(img)) {
          rep.witness = Monomial(j, k);
          rep.witness_image = std::move(img);
          break;
        }
      }
      if (rep.witness)
        break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// UHF example: A_{r,n} as block words inside A_{r,1} = O_r
// ---------------------------------------------------------------------------

/// 2^{n-1}.
inline std::size_t uhf_block(std::uint32_t n) {
  if (n == 0 || n > 63)
    throw Error("block level n must be in 1..63");
  return std::size_t{1} << (n - 1);
}

/// s_J s_K^* over O_r lies in A_{r,n} iff both lengths are multiples of 2^{n-1}.
inline bool uhf_member(std::uint32_t r, std::uint32_t n, const Monomial& mono) {
  if (r < 2)
    throw Error("UHF example needs r >= 2");
  const std::size_t b = uhf_block(n);
  auto in_alphabet = [r](const Word& w) {
    return std::all_of(w.begin(), w.end(), [r](Letter a) { return a >= 1 && a <= r; });
  };
  return in_alphabet(mono.left) && in_alphabet(mono.right) && mono.left.size() % b == 0 && mono.right.size() % b == 0;
}

/// Whether A_{r,n} has no monomial of grade l with both word lengths <= max_len.
/// Membership depends on the lengths only, so one representative word pair
/// per length pair decides it.
inline bool uhf_graded_vanishing(std::uint32_t r, std::uint32_t n, long l, std::size_t max_len) {
  for (std::size_t a = 0; a <= max_len; ++a)
    for (std::size_t b = 0; b <= max_len; ++b) {
      if (static_cast<long>(a) - static_cast<long>(b) != l)
        continue;
      if (uhf_member(r, n, Monomial(repeat(1, a), repeat(r, b))))
        return false;
    }
  return true;
}

/// q_1 o ... o q_n : A_{r,n+1} -> A_{r,1} = O_r.
inline GenHom uhf_push_down(std::uint32_t r, std::uint32_t n) {
  GenHom acc = q(r, n);
  for (std::uint32_t k = n - 1; k >= 1; --k)
    acc = compose(q(r, k), acc);
  return acc;
}

struct UhfChainReport {
  SuiteReport suite;
  /// Observed (domain grade, image grade) pairs under q_n.
  std::set<std::pair<long, long>> grade_map;
  /// (n, l) with graded vanishing verified.
  std::vector<std::pair<std::uint32_t, long>> vanishing;
};

inline UhfChainReport uhf_chain_check(std::uint32_t r, std::uint32_t depth, std::size_t max_len = 12,
                                      long max_grade = 6) {
  if (r < 2 || depth < 2)
    throw Error("uhf chain check needs r >= 2 and depth >= 2");
  UhfChainReport rep;
  rep.suite.title = "UHF chain r=" + std::to_string(r) + " depth=" + std::to_string(depth);
  for (std::uint32_t n = 1; n < depth; ++n) {
    const std::string tag = "q(" + std::to_string(r) + "," + std::to_string(n) + ")";
    const auto rn = uhf_rank(r, n), rn1 = uhf_rank(r, n + 1);
    GenHom h = q(r, n); // validated on construction
    const auto& code = h.code();
    const bool well_defined = code && code->maximal && h.domain().generators() == rn1 && h.codomain().generators() == rn;
    rep.suite.add(tag + " maximal prefix code", well_defined,
                  std::to_string(rn1) + " words of length 2 over " + std::to_string(rn) + " letters");

    GenHom down = uhf_push_down(r, n);
    bool blocks = true;
    std::string bad;
    std::vector<Word> pushed;
    for (Letter k = 1; k <= down.domain().generators(); ++k) {
      auto w = down.word_image(k);
      if (!w || w->size() != (std::size_t{1} << n) || !uhf_member(r, n + 1, Monomial(*w, {}))) {
        blocks = false;
        bad = "generator " + std::to_string(k) + " -> " + to_string(down.image(k));
        break;
      }
      pushed.push_back(*w);
    }
    if (blocks) {
      auto c = validate_prefix_code(pushed, r);
      blocks = c.maximal;
      if (!blocks)
        bad = "pushed words are not a maximal prefix code";
    }
    rep.suite.add(tag + " pushed into A_{r,1} block words", blocks,
                  blocks ? "length " + std::to_string(std::size_t{1} << n) : bad);

    bool graded = true;
    std::string grade_bad;
    const std::uint32_t dom = h.domain().generators();
    const std::uint32_t sample = std::min<std::uint32_t>(dom, 4);
    std::vector<Word> words;
    detail::for_each_word(sample, 2, [&](const Word& w) {
      words.push_back(w);
      return true;
    });
    for (const auto& j : words)
      for (const auto& k : words) {
        Monomial m(j, k);
        Element img = apply(h, Element::monomial(h.domain(), m));
        for (const auto& [mm, c] : img.terms()) {
          rep.grade_map.insert({m.grade(), mm.grade()});
          if (mm.grade() != 2 * m.grade() && graded) {
            graded = false;
            grade_bad = to_string(m) + " -> " + to_string(img);
          }
        }
      }
    rep.suite.add(tag + " grade l -> 2l", graded, graded ? "on words of length <= 2" : grade_bad);
  }

  bool vanish = true;
  std::string vanish_bad;
  for (std::uint32_t n = 1; n <= depth; ++n) {
    const long b = static_cast<long>(uhf_block(n));
    for (long l = -max_grade; l <= max_grade; ++l) {
      if (l % b == 0)
        continue;
      if (uhf_graded_vanishing(r, n, l, max_len))
        rep.vanishing.emplace_back(n, l);
      else if (vanish) {
        vanish = false;
        vanish_bad = "A_{r," + std::to_string(n) + "}^(" + std::to_string(l) + ") nonzero";
      }
    }
  }
  rep.suite.add("graded vanishing", vanish,
                vanish ? std::to_string(rep.vanishing.size()) + " (n, l) pairs up to length " + std::to_string(max_len)
                       : vanish_bad);
  return rep;
}

} // namespace cuntz
