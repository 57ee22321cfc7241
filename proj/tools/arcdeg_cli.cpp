// arcdeg: command-line front end for the arc-order / degeneration library.
//
// Exit codes: 0 success, 1 property failure (verify), 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "arcdeg/arcdeg.hpp"
#include "arcdeg/io.hpp"

namespace {

using namespace arcdeg;

constexpr int kPropertyFailure = 1;
constexpr int kBadInput = 2;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_enumerate(const std::string& beta_text, const std::string& gamma_text, bool as_json) {
  const Partition beta = parse_partition(beta_text);
  const Partition gamma = parse_partition(gamma_text);
  const auto objects = enumerate_objects(beta, gamma);
  if (as_json) {
    json rows = json::array();
    for (const auto& o : objects) {
      const auto d = diagram_of_object(o);
      rows.push_back({{"object", to_string(o)},
                      {"diagram", to_json(d)},
                      {"alpha", alpha_of(o).parts()},
                      {"crossings", crossings(d)},
                      {"dimension", stratum_dim(o)}});
    }
    print_json(rows);
    return 0;
  }
  for (const auto& o : objects) {
    const auto d = diagram_of_object(o);
    std::cout << to_string(o) << "\t" << to_string(d) << "\talpha=(" << to_string(alpha_of(o))
              << ")\tx=" << crossings(d) << "\tdim=" << stratum_dim(o) << '\n';
  }
  return 0;
}

int run_hasse(const std::string& beta_text, const std::string& gamma_text,
              const std::string& path) {
  const ArcPoset poset(parse_partition(beta_text), parse_partition(gamma_text));
  if (path == "-") {
    write_dot(std::cout, poset);
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return kBadInput;
  }
  write_dot(out, poset);
  std::cout << poset.size() << " nodes, " << poset.covers().size() << " edges -> " << path
            << '\n';
  return 0;
}

int run_order(const std::string& y_text, const std::string& z_text) {
  const S2Object y = parse_object(y_text);
  const S2Object z = parse_object(z_text);
  const bool by_arc = arc_leq(y, z);
  const bool by_hom = hom_leq(y, z);
  print_json({{"arc_leq", by_arc}, {"hom_leq", by_hom}, {"agree", by_arc == by_hom}});
  return 0;
}

int run_reduce(const std::string& y_text, const std::string& z_text, bool walk) {
  const S2Object y = parse_object(y_text);
  const S2Object z = parse_object(z_text);
  const auto [beta, gamma] = object_type(z);
  const auto chain =
      reduction_chain(y, z, walk ? DescentStrategy::walk : DescentStrategy::canonical);
  json steps = json::array();
  S2Object current = z;
  for (const auto& mv : chain) {
    const S2Object next =
        object_of_diagram(apply_down(diagram_of_object(current), mv), beta, gamma);
    json step = to_json(mv);
    step["before"] = to_string(current);
    step["after"] = to_string(next);
    steps.push_back(std::move(step));
    current = next;
  }
  print_json(steps);
  return 0;
}

int run_dim(const std::string& text) {
  const S2Object o = parse_object(text);
  const auto [beta, gamma] = object_type(o);
  const Partition alpha = alpha_of(o);
  print_json({{"stratum_dim", stratum_dim(o)},
              {"hall_degree", hall_degree(alpha, beta, gamma)},
              {"aut_degree", aut_degree(alpha)},
              {"subspace_orbit_dim", subspace_orbit_dim(o)}});
  return 0;
}

// [X, Y] plus, for same-type objects, δH(X, Y) over the test set.
int run_hom(const std::string& x_text, const std::string& y_text) {
  const S2Object x = parse_object(x_text);
  const S2Object y = parse_object(y_text);
  json out{{"x", to_string(x)}, {"y", to_string(y)}, {"hom", hom_obj(x, y)}};
  if (object_type(x) == object_type(y)) {
    json delta = json::object();
    for (const auto& t : test_set(object_type(y).beta)) delta[to_string(t)] = delta_hom(x, y, t);
    out["delta_hom"] = std::move(delta);
  }
  print_json(out);
  return 0;
}

int run_oracle(const std::string& x_text, const std::string& y_text, std::uint32_t p) {
  if (!is_prime(p)) {
    std::cerr << "--prime must be a prime, got " << p << '\n';
    return kBadInput;
  }
  const S2Object x = parse_object(x_text);
  const S2Object y = parse_object(y_text);
  const auto oracle = oracle_hom_dim(x, y, p);
  const auto table = hom_obj(x, y);
  print_json({{"prime", p}, {"oracle", oracle}, {"table", table}, {"agree", oracle == table}});
  return 0;
}

int run_verify(int beta_max) {
  const auto report = verify_all(beta_max);
  for (const auto& c : report.checks) {
    if (c.ok()) {
      std::cout << "PASS " << c.name << " (" << c.cases << " cases)\n";
    } else {
      std::cout << "FAIL " << c.name << " (" << c.failures << "/" << c.cases
                << " cases), first: " << c.first_failure << '\n';
    }
  }
  return report.ok() ? 0 : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc diagrams, hom order and degenerations of invariant subspaces"};
  app.require_subcommand(1);

  std::string beta, gamma, y, z, x, object, alpha, dot_path;
  bool as_json = false;
  bool walk = false;
  std::uint32_t prime = 101;
  int beta_max = 6;

  auto* enumerate = app.add_subcommand("enumerate", "List the strata of a type");
  enumerate->add_option("--beta", beta, "Ambient partition, e.g. 4,3,3,2,1")->required();
  enumerate->add_option("--gamma", gamma, "Cokernel partition")->required();
  enumerate->add_flag("--json", as_json, "JSON output");

  auto* hasse_cmd = app.add_subcommand("hasse", "Write the Hasse diagram as DOT");
  hasse_cmd->add_option("--beta", beta)->required();
  hasse_cmd->add_option("--gamma", gamma)->required();
  hasse_cmd->add_option("--dot", dot_path, "Output path, '-' for stdout")->required();

  auto* order = app.add_subcommand("order", "Compare two objects in both orders");
  order->add_option("--y", y)->required();
  order->add_option("--z", z)->required();

  auto* reduce = app.add_subcommand("reduce", "Chain of moves from Z down to Y");
  reduce->add_option("--y", y)->required();
  reduce->add_option("--z", z)->required();
  reduce->add_flag("--walk", walk, "Use the corner walk instead of canonical search");

  auto* dim = app.add_subcommand("dim", "Dimension data of a stratum");
  dim->add_option("--object", object)->required();

  auto* hom = app.add_subcommand("hom", "dim Hom(X, Y) from the table");
  hom->add_option("--x", x)->required();
  hom->add_option("--y", y)->required();

  auto* oracle = app.add_subcommand("oracle", "dim Hom(X, Y) by linear algebra over F_p");
  oracle->add_option("--x", x)->required();
  oracle->add_option("--y", y)->required();
  oracle->add_option("--prime", prime)->required();

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^beta_{alpha,gamma}");
  lr->add_option("--alpha", alpha)->required();
  lr->add_option("--gamma", gamma)->required();
  lr->add_option("--beta", beta)->required();

  auto* verify = app.add_subcommand("verify", "Run the property sweep");
  verify->add_option("--beta-max", beta_max, "Largest |beta|")->required()->check(
      CLI::Range(1, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*enumerate) return run_enumerate(beta, gamma, as_json);
    if (*hasse_cmd) return run_hasse(beta, gamma, dot_path);
    if (*order) return run_order(y, z);
    if (*reduce) return run_reduce(y, z, walk);
    if (*dim) return run_dim(object);
    if (*hom) return run_hom(x, y);
    if (*oracle) return run_oracle(x, y, prime);
    if (*lr) {
      std::cout << lr_coefficient(parse_partition(alpha), parse_partition(gamma),
                                  parse_partition(beta))
                << '\n';
      return 0;
    }
    if (*verify) return run_verify(beta_max);
  } catch (const arcdeg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return 0;
}
