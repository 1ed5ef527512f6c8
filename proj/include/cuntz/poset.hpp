#pragma once

#include "cuntz/error.hpp"
#include "cuntz/hom.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cuntz {

using Natural = std::uint64_t;

/// n precedes m iff n divides m.
inline bool leq(Natural n, Natural m) {
  if (n == 0 || m == 0)
    throw Error("divisibility order is defined on positive integers");
  return m % n == 0;
}

/// lcm, the least upper bound under divisibility.
inline Natural join(Natural n, Natural m) {
  if (n == 0 || m == 0)
    throw Error("divisibility order is defined on positive integers");
  return std::lcm(n, m);
}

/// Positive integers with a formal top element.
struct ExtendedNatural {
  Natural value = 1;
  bool infinite = false;

  static ExtendedNatural top() { return {0, true}; }
  friend bool operator==(const ExtendedNatural&, const ExtendedNatural&) = default;
};

inline bool leq(ExtendedNatural n, ExtendedNatural m) {
  if (m.infinite)
    return true;
  if (n.infinite)
    return false;
  return leq(n.value, m.value);
}

/// n_1 | n_2 | ... (repeats allowed).
class Chain {
public:
  explicit Chain(std::vector<Natural> elements) : elements_(std::move(elements)) {
    if (elements_.empty())
      throw Error("a chain needs at least one element");
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (elements_[k] == 0)
        throw Error("chain elements must be positive");
      if (k > 0 && !leq(elements_[k - 1], elements_[k]))
        throw Error("not a divisibility chain: " + std::to_string(elements_[k - 1]) + " does not divide " +
                    std::to_string(elements_[k]));
    }
  }

  const std::vector<Natural>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Natural operator[](std::size_t k) const { return elements_[k]; }
  Natural top() const { return elements_.back(); }

  friend bool operator==(const Chain&, const Chain&) = default;

private:
  std::vector<Natural> elements_;
};

/// Totally ordered cofinal subsequence: y_1 = x_1, y_k = lcm(y_{k-1}, x_k).
inline Chain cofinal_chain(std::span<const Natural> enumeration, std::size_t length) {
  if (enumeration.empty())
    throw Error("cofinal chain needs a nonempty enumeration");
  length = std::min(length, enumeration.size());
  std::vector<Natural> ys;
  ys.reserve(length);
  for (std::size_t k = 0; k < length; ++k)
    ys.push_back(k == 0 ? enumeration[0] : join(ys.back(), enumeration[k]));
  return Chain(std::move(ys));
}

/// First sampled pair with d <= e but rank(d) not dividing rank(e).
template <typename D, typename Rank, typename Order>
std::optional<std::pair<D, D>> find_order_violation(std::span<const D> sample, Rank rank, Order order) {
  for (const D& d : sample)
    for (const D& e : sample)
      if (order(d, e) && !leq(rank(d), rank(e)))
        return std::make_pair(d, e);
  return std::nullopt;
}

/// d <= e implies rank(d) | rank(e) on every sampled pair.
template <typename D, typename Rank, typename Order>
bool check_order_hom(std::span<const D> sample, Rank rank, Order order) {
  return !find_order_violation(sample, rank, order).has_value();
}

struct Digraph {
  std::vector<Natural> vertices;
  std::vector<std::pair<Natural, Natural>> edges; // sorted

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

namespace detail {

template <typename Rel>
Digraph relation_graph(Natural lo, Natural hi, Rel rel, bool covering) {
  Digraph g;
  for (Natural v = lo; v <= hi; ++v)
    g.vertices.push_back(v);
  for (Natural a = lo; a <= hi; ++a)
    for (Natural b = lo; b <= hi; ++b) {
      if (a == b || !rel(a, b))
        continue;
      bool covered = true;
      if (covering)
        for (Natural c = lo; c <= hi && covered; ++c)
          if (c != a && c != b && rel(a, c) && rel(c, b))
            covered = false;
      if (covered)
        g.edges.emplace_back(a, b);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

} // namespace detail

/// Vertices O_2..O_N; an edge m -> n when O_m embeds unitally in O_n. With
/// `covering` only the covering pairs are kept (no intermediate O_k).
inline Digraph embeddability_graph(std::uint32_t max_generators, bool covering = true) {
  if (max_generators < 2)
    throw Error("embeddability graph needs N >= 2");
  return detail::relation_graph(
      2, max_generators,
      [](Natural m, Natural n) {
        return hom_exists(AlgebraTag::finite(static_cast<std::uint32_t>(m)),
                          AlgebraTag::finite(static_cast<std::uint32_t>(n)));
      },
      covering);
}

/// Vertices 1..max; an edge a -> b when a | b.
inline Digraph divisibility_graph(Natural max, bool covering = true) {
  if (max < 1)
    throw Error("divisibility graph needs max >= 1");
  return detail::relation_graph(1, max, [](Natural a, Natural b) { return leq(a, b); }, covering);
}

/// Reverses every edge and shifts each label by `shift` (O_k -> k-1 uses -1).
inline Digraph relabel_reverse(const Digraph& g, long shift) {
  Digraph out;
  for (Natural v : g.vertices)
    out.vertices.push_back(static_cast<Natural>(static_cast<long>(v) + shift));
  for (auto [a, b] : g.edges)
    out.edges.emplace_back(static_cast<Natural>(static_cast<long>(b) + shift),
                           static_cast<Natural>(static_cast<long>(a) + shift));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

/// Graphviz DOT text: header line, one node line per vertex, one edge per line.
inline std::string to_dot(const Digraph& g, std::string_view name, std::string_view vertex_prefix) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (Natural v : g.vertices)
    out += "  \"" + std::string(vertex_prefix) + std::to_string(v) + "\";\n";
  for (auto [a, b] : g.edges)
    out += "  \"" + std::string(vertex_prefix) + std::to_string(a) + "\" -> \"" + std::string(vertex_prefix) +
           std::to_string(b) + "\";\n";
  out += "}\n";
  return out;
}

} // namespace cuntz
