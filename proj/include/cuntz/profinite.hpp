#pragma once

#include "cuntz/hom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cuntz {

// ---------------------------------------------------------------------------
// Truncated profinite integers, factorial base
// ---------------------------------------------------------------------------

inline Integer factorial(std::size_t n) {
  Integer acc = 1;
  for (std::size_t k = 2; k <= n; ++k)
    acc *= k;
  return acc;
}

/// Least nonnegative residue of z mod m, m > 0.
inline Integer mod_floor(const Integer& z, const Integer& m) {
  Integer r = z % m;
  if (r < 0)
    r += m;
  return r;
}

/// x = sum_k c_k k! with 0 <= c_k <= k, read modulo (d+1)!. Every n dividing
/// (d+1)! has a well-defined residue x mod n.
class ProfiniteInt {
public:
  /// Digits c_1..c_d.
  static ProfiniteInt from_digits(std::vector<Integer> digits) {
    for (std::size_t k = 0; k < digits.size(); ++k)
      if (digits[k] < 0 || digits[k] > Integer(k + 1))
        throw Error("factorial digit c_" + std::to_string(k + 1) + " out of range");
    ProfiniteInt x(digits.size());
    Integer place = 1;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      place *= (k + 1);
      x.value_ += digits[k] * place;
    }
    return x;
  }

  static ProfiniteInt from_residue(std::size_t depth, const Integer& residue) {
    ProfiniteInt x(depth);
    x.value_ = mod_floor(residue, x.modulus_);
    return x;
  }

  std::size_t depth() const noexcept { return depth_; }
  const Integer& modulus() const noexcept { return modulus_; }
  /// Representative in [0, (d+1)!).
  const Integer& value() const noexcept { return value_; }

  std::vector<Integer> digits() const {
    std::vector<Integer> out;
    Integer rest = value_;
    for (std::size_t k = 1; k <= depth_; ++k) {
      // rest = c_k + (k+1) * (higher digits), after dividing by k!
      out.push_back(rest % (k + 1));
      rest /= (k + 1);
    }
    return out;
  }

  Integer residue(const Integer& n) const {
    if (n <= 0 || modulus_ % n != 0)
      throw Error("modulus " + n.str() + " does not divide " + modulus_.str());
    return value_ % n;
  }

  friend bool operator==(const ProfiniteInt&, const ProfiniteInt&) = default;

private:
  explicit ProfiniteInt(std::size_t depth) : depth_(depth), modulus_(factorial(depth + 1)) {}

  std::size_t depth_;
  Integer modulus_;
  Integer value_ = 0;
};

inline ProfiniteInt from_integer(const Integer& z, std::size_t depth) { return ProfiniteInt::from_residue(depth, z); }

/// c_k = 1 for k = 1..d.
inline ProfiniteInt all_ones(std::size_t depth) { return ProfiniteInt::from_digits(std::vector<Integer>(depth, 1)); }

namespace detail {

inline void require_same_depth(const ProfiniteInt& a, const ProfiniteInt& b) {
  if (a.depth() != b.depth())
    throw Error("depth mismatch: " + std::to_string(a.depth()) + " vs " + std::to_string(b.depth()));
}

} // namespace detail

inline ProfiniteInt add(const ProfiniteInt& a, const ProfiniteInt& b) {
  detail::require_same_depth(a, b);
  return ProfiniteInt::from_residue(a.depth(), a.value() + b.value());
}

inline ProfiniteInt mul(const ProfiniteInt& a, const ProfiniteInt& b) {
  detail::require_same_depth(a, b);
  return ProfiniteInt::from_residue(a.depth(), a.value() * b.value());
}

inline ProfiniteInt neg(const ProfiniteInt& a) { return ProfiniteInt::from_residue(a.depth(), -a.value()); }

inline Integer project(const ProfiniteInt& x, const Integer& n) { return x.residue(n); }

/// Z/mZ -> Z/nZ, reduction mod n, for n | m.
struct NaturalSurjection {
  Integer from;
  Integer to;

  Integer operator()(const Integer& residue) const { return mod_floor(residue, to); }
};

inline NaturalSurjection natural_surjection(const Integer& m, const Integer& n) {
  if (m <= 0 || n <= 0)
    throw Error("natural surjection needs positive moduli");
  if (m % n != 0)
    throw Error(n.str() + " does not divide " + m.str());
  return {m, n};
}

/// (m -> n) o (l -> m) = (l -> n).
inline NaturalSurjection compose(const NaturalSurjection& outer, const NaturalSurjection& inner) {
  if (inner.to != outer.from)
    throw Error("surjections do not compose: Z/" + inner.to.str() + " vs Z/" + outer.from.str());
  return {inner.from, outer.to};
}

/// First d (1..x.depth) such that no integer z with |z| <= bound is congruent
/// to x mod (d+1)!.
inline std::optional<std::size_t> nonintegrality_witness(const ProfiniteInt& x, const Integer& bound) {
  if (bound < 0)
    throw Error("bound must be nonnegative");
  for (std::size_t d = 1; d <= x.depth(); ++d) {
    const Integer m = factorial(d + 1);
    const Integer r = x.residue(m);
    // least representative >= -bound
    const Integer z0 = mod_floor(r + bound, m) - bound;
    if (z0 > bound)
      return d;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Truncated p-adic integers
// ---------------------------------------------------------------------------

class PAdicInt {
public:
  static PAdicInt from_digits(std::uint32_t p, std::vector<std::uint32_t> digits) {
    check_prime(p);
    for (auto a : digits)
      if (a >= p)
        throw Error("p-adic digit " + std::to_string(a) + " out of range for p = " + std::to_string(p));
    PAdicInt x(p, digits.size());
    x.digits_ = std::move(digits);
    return x;
  }

  static PAdicInt from_residue(std::uint32_t p, std::size_t precision, const Integer& z) {
    check_prime(p);
    PAdicInt x(p, precision);
    Integer rest = mod_floor(z, boost::multiprecision::pow(Integer(p), static_cast<unsigned>(precision)));
    for (std::size_t k = 0; k < precision; ++k) {
      x.digits_.push_back(static_cast<std::uint32_t>(rest % p));
      rest /= p;
    }
    return x;
  }

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }

  /// sum a_k p^k in [0, p^N).
  Integer value() const {
    Integer acc = 0;
    for (std::size_t k = digits_.size(); k-- > 0;)
      acc = acc * p_ + digits_[k];
    return acc;
  }

  friend bool operator==(const PAdicInt&, const PAdicInt&) = default;

private:
  PAdicInt(std::uint32_t p, std::size_t precision) : p_(p) { digits_.reserve(precision); }

  static void check_prime(std::uint32_t p) {
    if (p < 2)
      throw Error("p must be prime");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw Error(std::to_string(p) + " is not prime");
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> digits_;
};

inline PAdicInt from_integer_p(const Integer& z, std::uint32_t p, std::size_t precision) {
  return PAdicInt::from_residue(p, precision, z);
}

namespace detail {

inline void require_same_precision(const PAdicInt& a, const PAdicInt& b) {
  if (a.prime() != b.prime())
    throw Error("prime mismatch: " + std::to_string(a.prime()) + " vs " + std::to_string(b.prime()));
  if (a.precision() != b.precision())
    throw Error("precision mismatch: " + std::to_string(a.precision()) + " vs " + std::to_string(b.precision()));
}

} // namespace detail

/// Digitwise with carries, dropping the carry out of p^{N-1}.
inline PAdicInt add(const PAdicInt& a, const PAdicInt& b) {
  detail::require_same_precision(a, b);
  const std::uint64_t p = a.prime();
  std::vector<std::uint32_t> out(a.precision());
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::uint64_t s = std::uint64_t{a.digits()[k]} + b.digits()[k] + carry;
    out[k] = static_cast<std::uint32_t>(s % p);
    carry = s / p;
  }
  return PAdicInt::from_digits(a.prime(), std::move(out));
}

/// Schoolbook product truncated to N digits.
inline PAdicInt mul(const PAdicInt& a, const PAdicInt& b) {
  detail::require_same_precision(a, b);
  const std::size_t n = a.precision();
  const Integer p = a.prime();
  std::vector<Integer> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      acc[i + j] += Integer(a.digits()[i]) * b.digits()[j];
  std::vector<std::uint32_t> out(n);
  Integer carry = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer s = acc[k] + carry;
    out[k] = static_cast<std::uint32_t>(s % p);
    carry = s / p;
  }
  return PAdicInt::from_digits(a.prime(), std::move(out));
}

/// Complement digits plus one.
inline PAdicInt neg(const PAdicInt& a) {
  std::vector<std::uint32_t> flipped;
  for (auto d : a.digits())
    flipped.push_back(a.prime() - 1 - d);
  return add(PAdicInt::from_digits(a.prime(), std::move(flipped)), from_integer_p(1, a.prime(), a.precision()));
}

/// x mod p^k, k <= N.
inline Integer project_pk(const PAdicInt& x, std::size_t k) {
  if (k > x.precision())
    throw Error("projection mod p^" + std::to_string(k) + " exceeds precision " + std::to_string(x.precision()));
  Integer acc = 0;
  for (std::size_t j = k; j-- > 0;)
    acc = acc * x.prime() + x.digits()[j];
  return acc;
}

/// Largest k with p^k | n.
inline std::size_t valuation(Integer n, std::uint32_t p) {
  if (n == 0)
    throw Error("valuation of zero");
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// K_0 bookkeeping
// ---------------------------------------------------------------------------

enum class K0Kind { cyclic, free_rank_one, denominator };

/// Z/nZ, Z, or Z[1/r].
struct K0Descriptor {
  K0Kind kind = K0Kind::free_rank_one;
  std::uint64_t parameter = 0; // n for cyclic, r for denominator

  static K0Descriptor cyclic(std::uint64_t n) {
    if (n < 1)
      throw Error("Z/nZ needs n >= 1");
    return {K0Kind::cyclic, n};
  }
  static K0Descriptor free_rank_one() { return {K0Kind::free_rank_one, 0}; }
  static K0Descriptor denominator(std::uint64_t r) {
    if (r < 2)
      throw Error("Z[1/r] needs r >= 2");
    return {K0Kind::denominator, r};
  }

  friend bool operator==(const K0Descriptor&, const K0Descriptor&) = default;
};

inline std::string to_string(const K0Descriptor& k) {
  switch (k.kind) {
  case K0Kind::cyclic:
    return "Z/" + std::to_string(k.parameter) + "Z";
  case K0Kind::free_rank_one:
    return "Z";
  case K0Kind::denominator:
    return "Z[1/" + std::to_string(k.parameter) + "]";
  }
  return "?";
}

/// K_0(O_N) = Z/(N-1)Z, K_0(O_inf) = Z.
inline K0Descriptor k0(const AlgebraTag& tag) {
  if (tag.is_infinite())
    return K0Descriptor::free_rank_one();
  return K0Descriptor::cyclic(tag.generators() - 1);
}

/// K_0(UHF_r) = Z_(r^inf).
inline K0Descriptor k0_uhf(std::uint64_t r) { return K0Descriptor::denominator(r); }

/// Group map fixed by [1] -> [1]; every such map between these targets is
/// onto, as the unit class generates.
struct K0Map {
  K0Descriptor source;
  K0Descriptor target;
  Integer unit_image = 1;
  bool surjective = true;

  /// Image of the class k[1].
  Integer operator()(const Integer& k) const {
    return target.kind == K0Kind::cyclic ? mod_floor(k * unit_image, Integer(target.parameter)) : k * unit_image;
  }

  friend bool operator==(const K0Map&, const K0Map&) = default;
};

inline K0Map induced_k0_map(const GenHom& h) {
  const K0Descriptor src = k0(h.domain());
  const K0Descriptor dst = k0(h.codomain());
  if (dst.kind != K0Kind::cyclic)
    throw Error("no unital map " + h.domain().name() + " -> " + h.codomain().name() + " on K_0 with these targets");
  if (src.kind == K0Kind::cyclic && src.parameter % dst.parameter != 0)
    throw Error("unit class of " + h.domain().name() + " cannot map onto a generator of " + to_string(dst));
  // the unit class is reduced so that Z/1Z maps compare equal after composing
  return {src, dst, mod_floor(Integer(1), Integer(dst.parameter)), true};
}

inline K0Map compose(const K0Map& outer, const K0Map& inner) {
  if (!(inner.target == outer.source))
    throw Error("K_0 maps do not compose: " + to_string(inner.target) + " vs " + to_string(outer.source));
  return {inner.source, outer.target, outer(inner.unit_image), inner.surjective && outer.surjective};
}

// ---------------------------------------------------------------------------
// Discontinuity report
// ---------------------------------------------------------------------------

struct DiscontinuityReport {
  std::size_t depth = 0;
  Integer bound = 0;
  K0Descriptor limit_k0;                  // K_0 of the limit algebra
  Integer truncation_modulus;             // (d+1)!
  bool injective = false;                 // Z -> Z/(d+1)! injective on [-B, B]
  bool injectivity_enumerated = false;    // checked by listing every residue
  std::optional<std::size_t> witness;     // nonintegrality depth of the all-ones element
  Integer witness_residue;                // all-ones residue at the witness depth (or at d)

  // p-adic variant
  std::uint32_t prime = 0;
  std::size_t precision = 0;
  K0Descriptor padic_limit_k0;
  Integer padic_modulus;                  // p^N
  std::size_t compatible_precision = 0;   // min(N, v_p((d+1)!))
  bool padic_compatible = false;          // projections agree with digit arithmetic
  std::optional<std::size_t> padic_witness; // first k where sum_{j<k} p^j is not in [-B, B] mod p^k
};

namespace detail {

/// Listing up to this many residues is cheap enough to do directly.
inline constexpr std::uint64_t kInjectivityEnumerationLimit = 50'000'000;

inline bool enumerate_injectivity(const Integer& modulus, const Integer& bound, bool& enumerated) {
  enumerated = false;
  if (modulus <= 2 * bound)
    return false;
  if (modulus > Integer(kInjectivityEnumerationLimit))
    return true;
  const auto m = static_cast<std::uint64_t>(modulus);
  const auto b = static_cast<std::int64_t>(bound);
  std::vector<bool> seen(m, false);
  for (std::int64_t z = -b; z <= b; ++z) {
    const auto r = static_cast<std::uint64_t>(((z % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
                                              static_cast<std::int64_t>(m));
    if (seen[r])
      return false;
    seen[r] = true;
  }
  enumerated = true;
  return true;
}

inline bool padic_projection_agrees(std::size_t depth, std::uint32_t p, std::size_t precision, std::size_t k) {
  // samples: small integers and the all-ones factorial element
  std::vector<Integer> samples;
  for (int z = -20; z <= 20; ++z)
    samples.push_back(z);
  samples.push_back(all_ones(depth).value());
  const Integer pk = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(k));
  for (const auto& a : samples)
    for (const auto& b : {Integer(-7), Integer(3), all_ones(depth).value()}) {
      const ProfiniteInt xa = from_integer(a, depth), xb = from_integer(b, depth);
      const PAdicInt pa = from_integer_p(a, p, precision), pb = from_integer_p(b, p, precision);
      if (project(xa, pk) != project_pk(pa, k))
        return false;
      if (project(add(xa, xb), pk) != project_pk(add(pa, pb), k))
        return false;
      if (project(mul(xa, xb), pk) != project_pk(mul(pa, pb), k))
        return false;
      if (project(neg(xa), pk) != project_pk(neg(pa), k))
        return false;
    }
  return true;
}

} // namespace detail

inline DiscontinuityReport discontinuity_report(std::size_t depth, const Integer& bound, std::uint32_t prime = 2,
                                                std::size_t precision = 8) {
  if (depth < 1)
    throw Error("depth must be >= 1");
  DiscontinuityReport rep;
  rep.depth = depth;
  rep.bound = bound;
  // lim O_n over the divisibility poset is O_inf, whose K_0 is Z.
  rep.limit_k0 = k0(AlgebraTag::infinite());
  rep.truncation_modulus = factorial(depth + 1);
  rep.injective = detail::enumerate_injectivity(rep.truncation_modulus, bound, rep.injectivity_enumerated);
  const ProfiniteInt ones = all_ones(depth);
  rep.witness = nonintegrality_witness(ones, bound);
  rep.witness_residue = ones.residue(factorial((rep.witness ? *rep.witness : depth) + 1));

  rep.prime = prime;
  rep.precision = precision;
  rep.padic_limit_k0 = k0(AlgebraTag::infinite());
  rep.padic_modulus = boost::multiprecision::pow(Integer(prime), static_cast<unsigned>(precision));
  rep.compatible_precision = std::min(precision, valuation(rep.truncation_modulus, prime));
  rep.padic_compatible = detail::padic_projection_agrees(depth, prime, precision, rep.compatible_precision);
  const PAdicInt padic_ones = PAdicInt::from_digits(prime, std::vector<std::uint32_t>(precision, 1));
  for (std::size_t k = 1; k <= precision; ++k) {
    const Integer m = boost::multiprecision::pow(Integer(prime), static_cast<unsigned>(k));
    if (mod_floor(project_pk(padic_ones, k) + bound, m) - bound > bound) {
      rep.padic_witness = k;
      break;
    }
  }
  return rep;
}

inline std::string render_text(const DiscontinuityReport& r) {
  std::string out;
  out += "K0 discontinuity at depth " + std::to_string(r.depth) + ", bound " + r.bound.str() + "\n";
  out += "  (a) K0(lim O_n) = " + to_string(r.limit_k0) + "\n";
  out += "  (b) lim K0 truncated to Z/" + r.truncation_modulus.str() + " (residues mod n | " +
         std::to_string(r.depth + 1) + "!)\n";
  out += "  (c) Z -> Zhat injective on [-" + r.bound.str() + ", " + r.bound.str() + "]: " +
         (r.injective ? "yes" : "no") + (r.injectivity_enumerated ? " (enumerated)" : "") + "\n";
  if (r.witness)
    out += "  (d) all-ones element is not an integer in [-B, B]: witness depth " + std::to_string(*r.witness) +
           ", residue " + r.witness_residue.str() + " mod " + factorial(*r.witness + 1).str() + "\n";
  else
    out += "  (d) all-ones element: inconclusive up to depth " + std::to_string(r.depth) + " (residue " +
           r.witness_residue.str() + " mod " + r.truncation_modulus.str() + ")\n";
  out += "  (e) p = " + std::to_string(r.prime) + ": K0(lim O_{p^n+1}) = " + to_string(r.padic_limit_k0) +
         ", truncated Z_p = Z/" + r.padic_modulus.str() + "; projections agree mod p^" +
         std::to_string(r.compatible_precision) + ": " + (r.padic_compatible ? "yes" : "no") + "; witness " +
         (r.padic_witness ? "k = " + std::to_string(*r.padic_witness) : std::string("inconclusive")) + "\n";
  return out;
}

/// One key=value per line.
inline std::string render_key_value(const DiscontinuityReport& r) {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string out;
  out += "depth=" + std::to_string(r.depth) + "\n";
  out += "bound=" + r.bound.str() + "\n";
  out += "limit_k0=" + to_string(r.limit_k0) + "\n";
  out += "truncation_modulus=" + r.truncation_modulus.str() + "\n";
  out += "injective=" + flag(r.injective) + "\n";
  out += "injectivity_enumerated=" + flag(r.injectivity_enumerated) + "\n";
  out += "witness_found=" + flag(r.witness.has_value()) + "\n";
  out += "witness_depth=" + (r.witness ? std::to_string(*r.witness) : std::string("none")) + "\n";
  out += "witness_residue=" + r.witness_residue.str() + "\n";
  out += "prime=" + std::to_string(r.prime) + "\n";
  out += "precision=" + std::to_string(r.precision) + "\n";
  out += "padic_limit_k0=" + to_string(r.padic_limit_k0) + "\n";
  out += "padic_modulus=" + r.padic_modulus.str() + "\n";
  out += "compatible_precision=" + std::to_string(r.compatible_precision) + "\n";
  out += "padic_compatible=" + flag(r.padic_compatible) + "\n";
  out += "padic_witness=" + (r.padic_witness ? std::to_string(*r.padic_witness) : std::string("none")) + "\n";
  return out;
}

} // namespace cuntz
