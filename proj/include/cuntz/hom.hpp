#pragma once

#include "cuntz/element.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cuntz {

/// Combinatorial certificate for a family of isometry words.
struct CodeReport {
  bool prefix_free = false;
  Rational kraft_sum{0};
  bool maximal = false;
  /// 1-based indices of a pair violating prefix-freeness, if any.
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

/// Prefix-freeness and the exact Kraft sum sum_w N^{-|w|}. `alphabet_size` 0
/// stands for an unbounded alphabet, for which only prefix-freeness is decided.
inline CodeReport validate_prefix_code(std::span<const Word> words, std::uint64_t alphabet_size) {
  if (words.empty())
    throw Error("prefix code check needs a nonempty word set");
  CodeReport report;
  std::vector<std::size_t> order(words.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return words[a] < words[b] || (words[a] == words[b] && a < b);
  });
  // In lexicographic order a word that prefixes anything prefixes its successor.
  report.prefix_free = true;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (is_prefix(words[order[k]], words[order[k + 1]])) {
      report.prefix_free = false;
      auto [a, b] = std::minmax(order[k], order[k + 1]);
      report.conflict = std::make_pair(a + 1, b + 1);
      break;
    }
  }
  if (alphabet_size != 0) {
    std::map<std::size_t, std::uint64_t> by_length;
    for (const auto& w : words)
      ++by_length[w.size()];
    for (auto [len, count] : by_length) {
      Integer denom = boost::multiprecision::pow(Integer(alphabet_size), static_cast<unsigned>(len));
      report.kraft_sum += Rational(Integer(count), denom);
    }
  }
  report.maximal = report.prefix_free && report.kraft_sum == 1;
  return report;
}

/// Unital *-homomorphism determined by generator images. Finite domains store
/// the image table; O_inf domains store a rule k -> f(s_k) that is validated
/// on the first `validation_bound` generators.
class GenHom {
public:
  using Rule = std::function<Element(Letter)>;

  const AlgebraTag& domain() const noexcept { return domain_; }
  const AlgebraTag& codomain() const noexcept { return codomain_; }
  std::size_t validation_bound() const noexcept { return bound_; }

  /// Number of generators whose images are stored or validated.
  std::size_t checked_generators() const noexcept { return domain_.is_finite() ? domain_.generators() : bound_; }

  Element image(Letter k) const {
    if (!domain_.admits(k))
      throw Error("generator index " + std::to_string(k) + " out of range for " + domain_.name());
    if (domain_.is_finite())
      return images_[k - 1];
    return rule_(k);
  }

  /// f(s_k) as a word w when the image is the bare isometry s_w.
  std::optional<Word> word_image(Letter k) const {
    if (domain_.is_finite() && k >= 1 && k <= words_.size())
      return words_[k - 1];
    return as_word(image(k));
  }

  /// Prefix-code certificate of the image words, when all images are words.
  const std::optional<CodeReport>& code() const noexcept { return code_; }

  static std::optional<Word> as_word(const Element& e) {
    if (e.size() != 1)
      return std::nullopt;
    const auto& [m, c] = *e.terms().begin();
    if (!c.is_one() || !m.right.empty())
      return std::nullopt;
    return m.left;
  }

private:
  GenHom(AlgebraTag domain, AlgebraTag codomain) : domain_(domain), codomain_(codomain) {}

  friend GenHom make_hom(AlgebraTag, AlgebraTag, std::vector<Element>, std::size_t);
  friend GenHom make_hom(AlgebraTag, AlgebraTag, Rule, std::size_t, std::size_t);
  friend void validate_hom(GenHom&, std::size_t);

  AlgebraTag domain_;
  AlgebraTag codomain_;
  std::vector<Element> images_;
  std::vector<std::optional<Word>> words_;
  Rule rule_;
  std::size_t bound_ = 0;
  std::optional<CodeReport> code_;
};

/// Domains up to this many generators are validated pair by pair in the algebra
/// in addition to the prefix-code certificate.
inline constexpr std::size_t kSymbolicValidationLimit = 64;
inline constexpr std::size_t kDefaultInfiniteBound = 32;

/// Checks f(s_i)^* f(s_j) = delta_ij I for all checked pairs, and
/// sum_i f(s_i) f(s_i)^* = I for finite domains.
inline void validate_hom(GenHom& h, std::size_t symbolic_limit = kSymbolicValidationLimit) {
  const std::size_t count = h.checked_generators();
  std::vector<Element> images;
  images.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    images.push_back(h.domain_.is_finite() ? h.images_[k - 1] : h.rule_(static_cast<Letter>(k)));
    if (images.back().tag() != h.codomain_)
      throw Error("algebra mismatch: image of s" + std::to_string(k) + " lies in " + images.back().tag().name() +
                  ", expected " + h.codomain_.name());
  }

  std::vector<Word> words;
  for (const auto& img : images) {
    auto w = GenHom::as_word(img);
    if (!w)
      break;
    words.push_back(*w);
  }
  if (words.size() == count) {
    h.code_ = validate_prefix_code(words, h.codomain_.generators());
    if (h.code_->conflict)
      throw RelationViolation(h.code_->conflict->first, h.code_->conflict->second);
    if (h.domain_.is_finite())
      h.words_.assign(words.begin(), words.end());
  }

  if (count <= symbolic_limit) {
    const Element one = Element::unit(h.codomain_);
    const Element zero = Element::zero(h.codomain_);
    for (std::size_t i = 0; i < count; ++i) {
      const Element adj = adjoint(images[i]);
      for (std::size_t j = 0; j < count; ++j) {
        Element product = multiply(adj, images[j]);
        if (!equals(product, i == j ? one : zero))
          throw RelationViolation(std::min(i, j) + 1, std::max(i, j) + 1);
      }
    }
  } else if (!h.code_) {
    throw Error("domain with " + std::to_string(count) + " generators is too large for symbolic validation");
  }

  if (h.domain_.is_finite()) {
    Terms residual;
    accumulate(residual, Monomial{}, 1);
    for (const auto& img : images)
      for (const auto& [m, c] : multiply_terms(img, adjoint(img)))
        accumulate(residual, m, -c);
    Element r = Element::from_terms(h.codomain_, std::move(residual));
    if (!equals(r, Element::zero(h.codomain_)))
      throw CompletenessViolation(to_string(normalize(r)));
  }
}

/// Builds and validates a hom with finite domain from its generator images.
inline GenHom make_hom(AlgebraTag domain, AlgebraTag codomain, std::vector<Element> images,
                       std::size_t symbolic_limit = kSymbolicValidationLimit) {
  if (domain.is_infinite())
    throw Error("O_inf domains need an index rule");
  if (images.size() != domain.generators())
    throw Error("expected " + std::to_string(domain.generators()) + " generator images, got " +
                std::to_string(images.size()));
  GenHom h(domain, codomain);
  h.images_ = std::move(images);
  h.bound_ = domain.generators();
  validate_hom(h, symbolic_limit);
  return h;
}

/// Builds and validates a hom out of O_inf from an index rule. Only
/// orthogonality is checked; O_inf has no completeness relation.
inline GenHom make_hom(AlgebraTag domain, AlgebraTag codomain, GenHom::Rule rule,
                       std::size_t bound = kDefaultInfiniteBound,
                       std::size_t symbolic_limit = kSymbolicValidationLimit) {
  if (domain.is_finite())
    throw Error("index rules are only used for O_inf domains");
  if (bound == 0)
    throw Error("validation bound must be positive");
  GenHom h(domain, codomain);
  h.rule_ = std::move(rule);
  h.bound_ = bound;
  validate_hom(h, symbolic_limit);
  return h;
}

inline GenHom make_word_hom(AlgebraTag domain, AlgebraTag codomain, const std::vector<Word>& words) {
  std::vector<Element> images;
  images.reserve(words.size());
  for (const auto& w : words)
    images.push_back(Element::word(codomain, w));
  return make_hom(domain, codomain, std::move(images));
}

namespace detail {

inline bool append_word_image(const GenHom& h, const Word& w, Word& out) {
  for (Letter k : w) {
    auto img = h.word_image(k);
    if (!img)
      return false;
    out.insert(out.end(), img->begin(), img->end());
  }
  return true;
}

inline Element product_of_images(const GenHom& h, const Word& w) {
  Element acc = Element::unit(h.codomain());
  for (Letter k : w)
    acc = multiply(acc, h.image(k));
  return acc;
}

} // namespace detail

/// Extends h multiplicatively, *-preservingly and linearly:
/// s_J s_K^* -> f(s_J) f(s_K)^*.
inline Element apply(const GenHom& h, const Element& e) {
  if (e.tag() != h.domain())
    throw Error("algebra mismatch: hom domain " + h.domain().name() + ", element in " + e.tag().name());
  Terms out;
  for (const auto& [m, c] : e.terms()) {
    Monomial image;
    if (detail::append_word_image(h, m.left, image.left) && detail::append_word_image(h, m.right, image.right)) {
      accumulate(out, image, c);
      continue;
    }
    Element left = detail::product_of_images(h, m.left);
    Element right = detail::product_of_images(h, m.right);
    for (const auto& [mm, cc] : multiply_terms(left, adjoint(right)))
      accumulate(out, mm, c * cc);
  }
  return normalize(Element::from_terms(h.codomain(), std::move(out)));
}

/// outer o inner, re-validated.
inline GenHom compose(const GenHom& outer, const GenHom& inner) {
  if (inner.codomain() != outer.domain())
    throw Error("algebra mismatch: cannot compose " + outer.domain().name() + "->" + outer.codomain().name() +
                " after " + inner.domain().name() + "->" + inner.codomain().name());
  if (inner.domain().is_finite()) {
    std::vector<Element> images;
    for (Letter k = 1; k <= inner.domain().generators(); ++k)
      images.push_back(apply(outer, inner.image(k)));
    return make_hom(inner.domain(), outer.codomain(), std::move(images));
  }
  return make_hom(
      inner.domain(), outer.codomain(), [outer, inner](Letter k) { return apply(outer, inner.image(k)); },
      inner.validation_bound());
}

/// First generator (1-based) on which two homs disagree under `equals`,
/// scanning the checked range of `a`.
inline std::optional<Letter> find_image_mismatch(const GenHom& a, const GenHom& b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain())
    throw Error("algebra mismatch: homs have different signatures");
  for (Letter k = 1; k <= a.checked_generators(); ++k)
    if (!equals(a.image(k), b.image(k)))
      return k;
  return std::nullopt;
}

inline GenHom identity_hom(AlgebraTag tag, std::size_t bound = kDefaultInfiniteBound) {
  if (tag.is_infinite())
    return make_hom(tag, tag, [tag](Letter k) { return Element::generator(tag, k); }, bound);
  std::vector<Element> images;
  for (Letter k = 1; k <= tag.generators(); ++k)
    images.push_back(Element::generator(tag, k));
  return make_hom(tag, tag, std::move(images));
}

/// Image words of f_{n,m}: s_{nl+i} -> s_{n+1}^l s_i, s_{m+1} -> s_{n+1}^{m/n}.
inline std::vector<Word> f_words(std::uint32_t n, std::uint32_t m) {
  if (n == 0 || m == 0)
    throw Error("f(n,m) needs positive n and m");
  if (m % n != 0)
    throw Error(std::to_string(n) + " does not divide " + std::to_string(m));
  std::vector<Word> words;
  words.reserve(m + 1);
  for (std::uint32_t l = 0; l < m / n; ++l)
    for (Letter i = 1; i <= n; ++i) {
      Word w = repeat(n + 1, l);
      w.push_back(i);
      words.push_back(std::move(w));
    }
  words.push_back(repeat(n + 1, m / n));
  return words;
}

/// f_{n,m} : R_m = O_{m+1} -> R_n = O_{n+1}, for n | m.
inline GenHom f(std::uint32_t n, std::uint32_t m) {
  auto words = f_words(n, m);
  return make_word_hom(AlgebraTag::r(m), AlgebraTag::r(n), words);
}

/// Image word of s_k under f_{n,inf}: k = l n + i -> s_{n+1}^l s_i.
inline Word f_inf_word(std::uint32_t n, Letter k) {
  if (n == 0 || k == 0)
    throw Error("f_inf needs positive n and generator index");
  Word w = repeat(n + 1, (k - 1) / n);
  w.push_back((k - 1) % n + 1);
  return w;
}

/// f_{n,inf} : O_inf -> R_n.
inline GenHom f_inf(std::uint32_t n, std::size_t bound = kDefaultInfiniteBound) {
  if (n == 0)
    throw Error("f_inf needs n >= 1");
  const AlgebraTag target = AlgebraTag::r(n);
  return make_hom(
      AlgebraTag::infinite(), target, [n, target](Letter k) { return Element::word(target, f_inf_word(n, k)); },
      bound);
}

/// r_n = r^{2^{n-1}}.
inline std::uint64_t uhf_rank(std::uint32_t r, std::uint32_t n) {
  if (r < 2 || n == 0)
    throw Error("r_n needs r >= 2 and n >= 1");
  std::uint64_t value = r;
  for (std::uint32_t k = 1; k < n; ++k) {
    if (value > std::numeric_limits<std::uint32_t>::max())
      throw Error("r_n overflows the generator index range");
    value *= value;
  }
  if (value > std::numeric_limits<std::uint32_t>::max())
    throw Error("r_n overflows the generator index range");
  return value;
}

/// q_n : A_{r,n+1} = O_{r_{n+1}} -> A_{r,n} = O_{r_n}, s_{r_n(i-1)+j} -> s_i s_j.
inline GenHom q(std::uint32_t r, std::uint32_t n) {
  const auto rn = static_cast<std::uint32_t>(uhf_rank(r, n));
  const auto rn1 = static_cast<std::uint32_t>(uhf_rank(r, n + 1));
  std::vector<Word> words;
  words.reserve(rn1);
  for (Letter i = 1; i <= rn; ++i)
    for (Letter j = 1; j <= rn; ++j)
      words.push_back(Word{i, j});
  return make_word_hom(AlgebraTag::finite(rn1), AlgebraTag::finite(rn), words);
}

/// Whether a unital *-homomorphism from `from` into `to` exists:
/// O_m -> O_n iff (n-1) | (m-1); nothing finite maps into O_inf; O_inf maps
/// into everything.
inline bool hom_exists(const AlgebraTag& from, const AlgebraTag& to) {
  if (from.is_infinite())
    return true;
  if (to.is_infinite())
    return false;
  return (from.generators() - 1) % (to.generators() - 1) == 0;
}

} // namespace cuntz
