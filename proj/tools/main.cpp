// Batch front end: parse a session file (posets, ideals, commands), run the
// commands, render text or JSON.  Exit codes: 0 success, 1 mathematical
// precondition failure, 2 parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qborel/session.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A quick randomized self-check: closures stay Borel with respect to their
// poset, principal membership matches the expansion, and the Theorem-style
// round trip product -> intersection -> product recovers exponents.
int selftest(unsigned long seed, int rounds) {
  using namespace qborel;
  std::mt19937_64 rng(seed);
  for (int round = 0; round < rounds; ++round) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) rel.emplace_back(i, j);
    Poset q = Poset::build(n, rel);
    std::vector<Exponent> e(n, 0);
    for (int i = 0; i < n; ++i) e[i] = rng() % 3;
    Monomial m{e};
    if (m.is_unit()) m = Monomial::var(n, static_cast<int>(rng() % n));
    MonomialIdeal closure = q_closure(q, {m});
    if (!is_q_borel(q, closure)) {
      std::cerr << "selftest: closure not stable (round " << round << ")\n";
      return 1;
    }
    for (Exponent d = 0; d <= m.degree() + 1; ++d) {
      bool ok = true;
      for_each_monomial_of_degree(n, d, [&](const Monomial& cand) {
        if (principal_membership(q, m, cand) != closure.contains(cand))
          ok = false;
      });
      if (!ok) {
        std::cerr << "selftest: membership mismatch (round " << round << ")\n";
        return 1;
      }
    }
    PrimeFactorization f = principal_factorization(q, m);
    PrimePowerIntersection d = product_to_primary(n, f);
    if (intersection_ideal(n, d) != closure) {
      std::cerr << "selftest: decomposition mismatch (round " << round
                << ")\n";
      return 1;
    }
  }
  std::cout << "selftest passed (" << rounds << " rounds)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset-Borel monomial ideal toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  long degree_bound = -1;
  std::size_t limit_nodes = qborel::kDefaultClosureLimit;
  unsigned long seed = 1;
  int rounds = 25;

  CLI::App* run = app.add_subcommand("run", "execute a session file");
  run->add_option("file", input, "session file ('-' for stdin)")->required();
  run->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--degree-bound", degree_bound,
                  "global truncation/verification bound");
  run->add_option("--limit-nodes", limit_nodes, "closure node safety limit");

  CLI::App* st = app.add_subcommand("selftest", "randomized property checks");
  st->add_option("--seed", seed, "random seed");
  st->add_option("--rounds", rounds, "number of rounds");

  CLI11_PARSE(app, argc, argv);

  if (st->parsed()) return selftest(seed, rounds);

  try {
    std::string text = read_input(input);
    qborel::Session session = qborel::parse_session(text);
    qborel::ExecOptions opts;
    opts.degree_bound = degree_bound;
    opts.node_limit = limit_nodes;
    auto results = qborel::execute(session, opts);
    std::cout << qborel::render(results, format == "json"
                                             ? qborel::RenderFormat::Json
                                             : qborel::RenderFormat::Text);
    return 0;
  } catch (const qborel::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qborel::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
