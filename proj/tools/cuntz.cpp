// Command-line front end: exit 0 verified, 1 refuted, 2 usage error.

#include "cuntz/cuntz.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cuntz;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
      throw UsageError("expected a comma-separated list of positive integers, got '" + text + "'");
    out.push_back(std::stoull(item));
  }
  if (out.empty())
    throw UsageError("empty list");
  return out;
}

std::size_t infinite_bound() {
  if (const char* env = std::getenv("CUNTZ_INF_BOUND")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0)
        return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("CUNTZ_INF_BOUND must be a positive integer, got '") + env + "'");
  }
  return kDefaultInfiniteBound;
}

int report(const SuiteReport& r) {
  std::cout << render(r);
  return r.passed() ? kOk : kRefuted;
}

GenHom family_hom(const std::string& family, const std::vector<std::uint64_t>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw UsageError("family " + family + " takes " + std::to_string(k) + " argument(s)");
  };
  if (family == "f") {
    need(2);
    if (args[1] % args[0] != 0)
      throw UsageError(std::to_string(args[0]) + " does not divide " + std::to_string(args[1]));
    return f(static_cast<std::uint32_t>(args[0]), static_cast<std::uint32_t>(args[1]));
  }
  if (family == "finf") {
    need(1);
    return f_inf(static_cast<std::uint32_t>(args[0]), infinite_bound());
  }
  if (family == "q") {
    need(2);
    return q(static_cast<std::uint32_t>(args[0]), static_cast<std::uint32_t>(args[1]));
  }
  throw UsageError("unknown family '" + family + "' (f, finf, q)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic calculus for Cuntz algebras and their inverse system"};
  app.require_subcommand(1);
  int status = kOk;

  std::string algebra, expr, expr2;
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the canonical form of an expression");
  normalize_cmd->add_option("--algebra", algebra, "O<k> or Oinf")->required();
  normalize_cmd->add_option("expr", expr)->required();

  auto* equals_cmd = app.add_subcommand("equals", "Decide equality of two expressions");
  equals_cmd->add_option("--algebra", algebra, "O<k> or Oinf")->required();
  equals_cmd->add_option("lhs", expr)->required();
  equals_cmd->add_option("rhs", expr2)->required();

  std::string family, args_text;
  auto* hom_cmd = app.add_subcommand("hom", "Homomorphisms between Cuntz algebras");
  hom_cmd->require_subcommand(1);
  auto* apply_cmd = hom_cmd->add_subcommand("apply", "Apply f(n,m), f_inf(n) or q(r,n)");
  apply_cmd->add_option("--family", family, "f | finf | q")->required();
  apply_cmd->add_option("--args", args_text, "n,m | n | r,n")->required();
  apply_cmd->add_option("--algebra", algebra, "domain check (optional)");
  apply_cmd->add_option("expr", expr)->required();

  bool mutate = false;
  std::uint32_t max = 24, n = 2, r = 2, depth = 3, indices = 30;
  std::size_t max_len = 8, split_len = 10, word_len = 6;
  std::string chain_text;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->require_subcommand(1);
  auto add_mutate = [&](CLI::App* c) {
    c->add_flag("--mutate", mutate, "corrupt the family homs (the suite must then fail)");
  };
  auto* v_inverse = verify_cmd->add_subcommand("inverse-system", "f(n,m) o f(m,l) = f(n,l) and Oinf compatibility");
  v_inverse->add_option("--max", max)->required()->check(CLI::Range(1u, 200u));
  v_inverse->add_option("--indices", indices, "Oinf generator indices checked")->check(CLI::Range(1u, 10000u));
  add_mutate(v_inverse);
  auto* v_psi = verify_cmd->add_subcommand("psi", "Coherence of psi(x) along a chain");
  v_psi->add_option("--chain", chain_text)->required();
  v_psi->add_option("--expr", expr)->required();
  add_mutate(v_psi);
  auto* v_decomp = verify_cmd->add_subcommand("decomposition", "L_n and Q_n decompositions in O2");
  v_decomp->add_option("--n", n)->required()->check(CLI::Range(1u, 64u));
  v_decomp->add_option("--max-len", max_len)->required()->check(CLI::Range(0, 16));
  v_decomp->add_option("--split-len", split_len)->check(CLI::Range(1, 20));
  add_mutate(v_decomp);
  auto* v_uhf = verify_cmd->add_subcommand("uhf", "UHF block chain, gradings and graded vanishing");
  v_uhf->add_option("--r", r)->required()->check(CLI::Range(2u, 16u));
  v_uhf->add_option("--depth", depth)->required()->check(CLI::Range(2u, 5u));
  add_mutate(v_uhf);
  auto* v_state = verify_cmd->add_subcommand("state", "omega_n o f(n,m) = omega_m");
  v_state->add_option("--max", max)->required()->check(CLI::Range(1u, 64u));
  v_state->add_option("--word-len", word_len)->check(CLI::Range(0, 10));
  add_mutate(v_state);

  std::string out_path;
  bool full = false, reverse = false;
  auto* poset_cmd = app.add_subcommand("poset", "Divisibility poset");
  poset_cmd->require_subcommand(1);
  auto* graph_cmd = poset_cmd->add_subcommand("graph", "Embeddability graph of O_2..O_max in DOT");
  graph_cmd->add_option("--max", max)->required()->check(CLI::Range(2u, 500u));
  graph_cmd->add_option("--out", out_path, "write the graph here instead of stdout");
  graph_cmd->add_flag("--full", full, "every embeddable pair, not just covering pairs");
  graph_cmd->add_flag("--reverse", reverse, "also emit the reversed graph relabelled O_k -> k-1");

  std::string format = "text";
  std::string bound_text = "1000000";
  std::uint32_t prime = 2;
  std::size_t precision = 8, pdepth = 9;
  auto* prof_cmd = app.add_subcommand("profinite", "Profinite K0 bookkeeping");
  prof_cmd->require_subcommand(1);
  auto* report_cmd = prof_cmd->add_subcommand("report", "K0 discontinuity report");
  report_cmd->add_option("--depth", pdepth)->required()->check(CLI::Range(1, 60));
  report_cmd->add_option("--bound", bound_text)->required();
  report_cmd->add_option("--prime", prime);
  report_cmd->add_option("--precision", precision)->check(CLI::Range(1, 200));
  report_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "kv"}));

  std::size_t width = 64;
  auto* partition_cmd = app.add_subcommand("partition", "Interval picture of a chain of embeddings");
  partition_cmd->add_option("--chain", chain_text)->required();
  partition_cmd->add_option("--width", width)->check(CLI::Range(8, 512));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const FamilyOptions opt{mutate};
    if (*normalize_cmd) {
      std::cout << to_string(normalize(parse(AlgebraTag::parse(algebra), expr))) << "\n";
    } else if (*equals_cmd) {
      const AlgebraTag tag = AlgebraTag::parse(algebra);
      const Element a = parse(tag, expr), b = parse(tag, expr2);
      if (equals(a, b)) {
        std::cout << "equal\n";
      } else {
        std::cout << "not equal: difference " << to_string(subtract(a, b)) << "\n";
        status = kRefuted;
      }
    } else if (*apply_cmd) {
      GenHom h = family_hom(family, parse_list(args_text));
      if (!algebra.empty() && AlgebraTag::parse(algebra) != h.domain())
        throw UsageError("family " + family + "(" + args_text + ") acts on " + h.domain().name() + ", not " + algebra);
      std::cout << to_string(apply(h, parse(h.domain(), expr))) << "\n";
    } else if (*v_inverse) {
      SuiteReport rep = verify_inverse_system(max, opt);
      for (auto& c : verify_infinite_compatibility(std::min<std::uint32_t>(max, 24), indices, opt).checks)
        rep.checks.push_back(c);
      for (auto& c : verify_prefix_codes(max, 0, 0).checks)
        if (c.name.rfind("f(", 0) == 0)
          rep.checks.push_back(c);
      status = report(rep);
    } else if (*v_psi) {
      auto list = parse_list(chain_text);
      Chain chain(std::vector<Natural>(list.begin(), list.end()));
      status = report(verify_psi(chain, parse(AlgebraTag::infinite(), expr), opt, infinite_bound()));
    } else if (*v_decomp) {
      status = report(verify_decomposition(n, max_len, split_len, opt));
    } else if (*v_uhf) {
      status = report(verify_uhf(r, depth, opt));
    } else if (*v_state) {
      status = report(verify_state(max, word_len, 100, opt));
    } else if (*graph_cmd) {
      const Digraph g = embeddability_graph(max, !full);
      std::string dot = to_dot(g, "embeddability", "O");
      const Digraph rev = relabel_reverse(g, -1);
      const bool matches = rev == divisibility_graph(max - 1, !full);
      if (reverse)
        dot += to_dot(rev, "divisibility", "");
      if (out_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(out_path);
        if (!out)
          throw UsageError("cannot write " + out_path);
        out << dot;
        std::cout << "wrote " << g.vertices.size() << " vertices, " << g.edges.size() << " edges to " << out_path
                  << "\n";
      }
      std::cerr << "reversed graph " << (matches ? "matches" : "does not match") << " divisibility on 1.."
                << (max - 1) << "\n";
      status = matches ? kOk : kRefuted;
    } else if (*report_cmd) {
      Integer bound;
      try {
        bound = Integer(bound_text);
      } catch (const std::exception&) {
        throw UsageError("bad --bound '" + bound_text + "'");
      }
      if (bound < 0)
        throw UsageError("--bound must be nonnegative");
      const DiscontinuityReport rep = discontinuity_report(pdepth, bound, prime, precision);
      std::cout << (format == "kv" ? render_key_value(rep) : render_text(rep));
      const bool ok = rep.limit_k0 == K0Descriptor::free_rank_one() && rep.injective && rep.witness.has_value() &&
                      rep.padic_compatible;
      status = ok ? kOk : kRefuted;
    } else if (*partition_cmd) {
      auto list = parse_list(chain_text);
      std::cout << render_partition(Chain(std::vector<Natural>(list.begin(), list.end())), width);
    }
  } catch (const RelationViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefuted;
  } catch (const CompletenessViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefuted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
