// Command-line front end: analyze graphs, classify and factor ideals, run oracles, export DOT.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "lpa/error.hpp"
#include "lpa/io.hpp"

namespace {

using lpa::io::json;

enum Exit { kOk = 0, kInput = 1, kAbsent = 2, kVerification = 3 };

struct Options {
  std::string field = "Q";
  unsigned qdeg = 12;
  std::size_t max_cycles = 100000;
  std::uint64_t seed = 0x4c50415eedULL;
  bool json = false;
};

lpa::Config make_config(const Options& o) {
  lpa::Config cfg;
  cfg.limits.max_cycles = o.max_cycles;
  cfg.factor.q_degree_bound = o.qdeg;
  cfg.factor.seed = o.seed;
  return cfg;
}

lpa::GraphPtr load_graph(const std::string& path) {
  return std::make_shared<const lpa::Graph>(lpa::io::graph_from_json(lpa::io::read_json_file(path)));
}

lpa::Ideal load_ideal(const std::string& path, const lpa::GraphPtr& g, const Options& o) {
  return lpa::io::ideal_from_json(lpa::io::read_json_file(path), g, lpa::Field::parse(o.field));
}

std::string set_text(const json& names) {
  std::string out = "{";
  for (const auto& n : names) out += (out.size() > 1 ? "," : "") + n.get<std::string>();
  return out + "}";
}

std::string cycle_text(const json& c) {
  if (c.is_null()) return "-";
  std::string out;
  for (const auto& t : c) out += (out.empty() ? "" : " ") + t.get<std::string>();
  return out;
}

void print_analysis(const json& r) {
  auto list = [](const json& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : " ") + n.get<std::string>();
    return out.empty() ? std::string("-") : out;
  };
  std::cout << "vertices: " << list(r["vertices"]) << "\n";
  std::cout << "sinks: " << list(r["sinks"]) << "\n";
  std::cout << "regular: " << list(r["regular"]) << "\n";
  std::cout << "infinite emitters: " << list(r["infinite_emitters"]) << "\n";
  std::cout << "condition (K): " << r["condition_K"]["holds"];
  if (!r["condition_K"]["holds"].get<bool>()) std::cout << " (cycle without (K): " << cycle_text(r["condition_K"]["witness"]) << ")";
  std::cout << "\ncondition (L): " << r["condition_L"] << "\n";
  std::cout << "maximal tails:";
  for (const auto& t : r["maximal_tails"]) std::cout << " " << set_text(t);
  std::cout << "\nhereditary saturated sets: " << r["hereditary_saturated_count"] << "\n";
  std::cout << "admissible pairs: " << r["admissible_pairs"]["count"]
            << (r["admissible_pairs"]["chain"].get<bool>() ? " (chain)" : " (not a chain)") << "\n";
  std::cout << "every ideal prime: " << r["every_ideal_prime"]["holds"] << "\n";
  std::cout << "every ideal semiprime: " << r["every_ideal_semiprime"]["holds"] << "\n";
  std::cout << "every ideal a product of primes: " << r["every_ideal_product_of_primes"]["holds"] << "\n";
  std::cout << "every ideal a product of semiprimes: " << r["every_ideal_product_of_semiprimes"]["holds"] << "\n";
}

void print_certificate(const lpa::FactorizationCert& cert) {
  std::cout << "target: " << lpa::describe(cert.target) << "\n";
  std::cout << (cert.kind == lpa::FactorKind::kPrime ? "prime" : "semiprime") << " factors: " << cert.factors.size()
            << "\n";
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    std::cout << "  [" << i + 1 << "] " << lpa::describe(cert.factors[i]) << "\n";
  }
  std::cout << "verified: " << (cert.verified ? "true" : "false") << "\n";
}

int cmd_analyze(const std::string& graph, const Options& o) {
  const auto g = load_graph(graph);
  const json r = lpa::io::analysis_report(*g, make_config(o));
  if (o.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    print_analysis(r);
  }
  return kOk;
}

int cmd_ideal(const std::string& graph, const std::string& ideal, const std::string& query, const Options& o) {
  const auto g = load_graph(graph);
  const lpa::Ideal I = load_ideal(ideal, g, o);
  const lpa::Config cfg = make_config(o);
  if (query == "classify") {
    if (I.is_whole()) throw lpa::InputError("classification needs a proper ideal");
    const auto prime = lpa::is_prime(I, cfg);
    const bool semiprime = lpa::is_semiprime(I);
    const auto primary = lpa::primary_report(I, cfg);
    if (o.json) {
      json out{{"ideal", lpa::io::ideal_to_json(I)},
               {"prime", lpa::io::prime_report_to_json(*g, prime)},
               {"semiprime", semiprime},
               {"prime_power", lpa::io::primary_report_to_json(primary)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "ideal: " << lpa::describe(I) << "\n";
      std::cout << "prime: " << (prime.prime ? "true" : "false") << "\n";
      std::cout << "semiprime: " << (semiprime ? "true" : "false") << "\n";
      std::cout << "prime-power: " << (primary.primary ? "true" : "false");
      if (primary.primary) std::cout << " (P=" << lpa::describe(*primary.P) << ", n=" << primary.n << ")";
      std::cout << "\n";
    }
    return kOk;
  }
  if (query == "radical") {
    const lpa::Ideal R = lpa::radical(I);
    std::cout << (o.json ? lpa::io::ideal_to_json(R).dump(2) : lpa::describe(R)) << "\n";
    return kOk;
  }
  if (query == "factor-prime" || query == "factor-semiprime") {
    const auto cert = query == "factor-prime" ? lpa::prime_factorization(I, cfg) : lpa::semiprime_factorization(I, cfg);
    if (!cert) {
      if (o.json) {
        std::cout << json{{"target", lpa::io::ideal_to_json(I)}, {"certificate", nullptr}}.dump(2) << "\n";
      } else {
        std::cout << "no factorization: the criterion fails for " << lpa::describe(I) << "\n";
      }
      return kAbsent;
    }
    if (o.json) {
      std::cout << lpa::io::certificate_to_json(*cert).dump(2) << "\n";
    } else {
      print_certificate(*cert);
    }
    return cert->verified ? kOk : kVerification;
  }
  throw lpa::InputError("unknown query '" + query + "'");
}

int cmd_binop(const std::string& graph, const std::string& a, const std::string& b, const std::string& op,
              const Options& o) {
  const auto g = load_graph(graph);
  const lpa::Ideal A = load_ideal(a, g, o), B = load_ideal(b, g, o);
  if (op == "contains") {
    const bool r = lpa::contains(A, B);
    std::cout << (o.json ? json{{"contains", r}}.dump(2) : std::string(r ? "true" : "false")) << "\n";
    return kOk;
  }
  lpa::Ideal R = op == "product"     ? lpa::product(A, B)
                 : op == "intersect" ? lpa::intersect(A, B)
                 : op == "sum"       ? lpa::sum(A, B)
                                     : throw lpa::InputError("unknown operation '" + op + "'");
  std::cout << (o.json ? lpa::io::ideal_to_json(R).dump(2) : lpa::describe(R)) << "\n";
  return kOk;
}

int cmd_oracle(const std::string& graph, std::size_t trials, const Options& o) {
  const auto g = load_graph(graph);
  const auto rep = lpa::cross_check(g, lpa::Field::parse(o.field), trials, o.seed);
  if (o.json) {
    std::cout << lpa::io::cross_check_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.oracle << " oracle: " << rep.trials << " trials, " << rep.mismatches.size() << " mismatches\n";
    for (const auto& m : rep.mismatches) {
      std::cout << "  " << m.op << "(" << m.lhs << ", " << m.rhs << "): expected " << m.expected << ", got "
                << m.actual << "\n";
    }
  }
  return rep.mismatches.empty() ? kOk : kVerification;
}

int cmd_witness(const std::string& graph, const Options& o) {
  const auto g = load_graph(graph);
  const auto P = lpa::product_not_intersection_witness(g, lpa::Field::parse(o.field), make_config(o));
  if (!P) {
    if (o.json) {
      std::cout << json{{"witness", nullptr}}.dump(2) << "\n";
    } else {
      std::cout << "no witness: the graph satisfies condition (K), so products of primes are intersections\n";
    }
    return kAbsent;
  }
  const lpa::Ideal P2 = lpa::product(*P, *P);
  if (o.json) {
    std::cout << json{{"witness", lpa::io::ideal_to_json(*P)}, {"square", lpa::io::ideal_to_json(P2)}}.dump(2) << "\n";
  } else {
    std::cout << "prime: " << lpa::describe(*P) << "\n";
    std::cout << "square (not semiprime): " << lpa::describe(P2) << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& graph, const std::string& cert_file, const Options& o) {
  const auto g = load_graph(graph);
  const auto cert = lpa::io::certificate_from_json(lpa::io::read_json_file(cert_file), g, lpa::Field::parse(o.field),
                                                   make_config(o));
  if (o.json) {
    std::cout << lpa::io::certificate_to_json(cert).dump(2) << "\n";
  } else {
    print_certificate(cert);
  }
  return cert.verified ? kOk : kVerification;
}

int cmd_export_dot(const std::string& graph, const std::string& ideal, const std::string& out, const Options& o) {
  const auto g = load_graph(graph);
  std::string dot;
  if (ideal.empty()) {
    dot = lpa::io::to_dot(*g);
  } else {
    const lpa::Ideal I = load_ideal(ideal, g, o);
    dot = lpa::io::to_dot(lpa::quotient_graph(*g, I.pair()).graph, "quotient");
  }
  if (out.empty()) {
    std::cout << dot;
  } else {
    std::ofstream f(out);
    if (!f) throw lpa::InputError("cannot write '" + out + "'");
    f << dot;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideals of Leavitt path algebras of finite graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Coefficient field: Q or Fp:<p>")->capture_default_str();
  app.add_option("--qdeg", o.qdeg, "Degree bound for factoring over Q")->capture_default_str();
  app.add_option("--max-cycles", o.max_cycles, "Cap on simple-cycle enumeration")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized steps");
  app.add_flag("--json", o.json, "Emit JSON");

  std::string graph, ideal, ideal_b, query, op, out;
  std::size_t trials = 100;

  auto* analyze = app.add_subcommand("analyze", "Graph invariants and global classification");
  analyze->add_option("graph", graph, "Graph JSON file")->required();

  auto* id = app.add_subcommand("ideal", "Classify, take the radical of, or factor an ideal");
  id->add_option("graph", graph, "Graph JSON file")->required();
  id->add_option("ideal", ideal, "Ideal JSON file")->required();
  id->add_option("query", query, "classify | radical | factor-prime | factor-semiprime")
      ->required()
      ->check(CLI::IsMember({"classify", "radical", "factor-prime", "factor-semiprime"}));

  auto* binop = app.add_subcommand("binop", "Combine two ideals");
  binop->add_option("graph", graph, "Graph JSON file")->required();
  binop->add_option("a", ideal, "First ideal JSON file")->required();
  binop->add_option("b", ideal_b, "Second ideal JSON file")->required();
  binop->add_option("op", op, "product | intersect | sum | contains")
      ->required()
      ->check(CLI::IsMember({"product", "intersect", "sum", "contains"}));

  auto* oracle = app.add_subcommand("oracle", "Compare ideal arithmetic against a brute-force model");
  oracle->add_option("graph", graph, "Graph JSON file")->required();
  oracle->add_option("--trials", trials, "Number of random ideal pairs")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "A prime whose square is not an intersection of primes");
  witness->add_option("graph", graph, "Graph JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Re-multiply the factors of a certificate and compare with its target");
  verify->add_option("graph", graph, "Graph JSON file")->required();
  verify->add_option("certificate", ideal, "Certificate JSON file")->required();

  auto* dot = app.add_subcommand("export-dot", "Write the graph, or the quotient by an ideal, as DOT");
  dot->add_option("graph", graph, "Graph JSON file")->required();
  dot->add_option("--ideal", ideal, "Export the quotient graph by this ideal's admissible pair");
  dot->add_option("-o,--output", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(graph, o);
    if (*id) return cmd_ideal(graph, ideal, query, o);
    if (*binop) return cmd_binop(graph, ideal, ideal_b, op, o);
    if (*oracle) return cmd_oracle(graph, trials, o);
    if (*witness) return cmd_witness(graph, o);
    if (*verify) return cmd_verify(graph, ideal, o);
    if (*dot) return cmd_export_dot(graph, ideal, out, o);
  } catch (const lpa::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerification;
  } catch (const lpa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
