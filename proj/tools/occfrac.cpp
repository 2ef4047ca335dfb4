// Copyright 2026 The occfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// occfrac command-line front end. Every subcommand prints one JSON report:
//   {"command", "inputs", "results", "verdict", "timing_ms"}
// Exit codes: 0 pass or not-applicable, 1 fail or inconclusive, 2 usage,
// 3 capability limit.

#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "occfrac/occfrac.hpp"

namespace {

using occfrac::Graph;
using occfrac::Rational;
using occfrac::Verdict;
using Json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Verdict verdict = Verdict::kPass;
};

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const std::vector<occfrac::BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Rational positive_rational(const std::string& text, const char* what) {
  const Rational r = occfrac::parse_rational(text);
  if (r.sign() <= 0) throw UsageError(std::string(what) + " must be positive (got " + text + ")");
  return r;
}

std::vector<Rational> lambda_list(const std::string& lambda, const std::string& grid) {
  std::vector<Rational> out;
  if (!grid.empty()) {
    std::size_t pos = 0;
    while (pos <= grid.size()) {
      const auto comma = grid.find(',', pos);
      out.push_back(positive_rational(grid.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos),
                                      "lambda"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else if (!lambda.empty()) {
    out.push_back(positive_rational(lambda, "lambda"));
  } else {
    throw UsageError("one of --lambda or --grid is required");
  }
  return out;
}

occfrac::GraphFormat parse_format(const std::string& f) {
  if (f == "graph6") return occfrac::GraphFormat::kGraph6;
  if (f == "edgelist") return occfrac::GraphFormat::kEdgeList;
  throw UsageError("unknown format '" + f + "' (expected graph6 or edgelist)");
}

std::vector<Graph> load_corpus(const std::string& path, const std::string& format) {
  return occfrac::parse_corpus(occfrac::read_file(path), parse_format(format));
}

// kdd:D, hdn:D:N, cycle:N, file:PATH, or any other family name.
Graph load_graph(const std::string& spec, const std::string& format) {
  if (spec.rfind("file:", 0) == 0) {
    auto graphs = load_corpus(spec.substr(5), format);
    if (graphs.size() != 1) {
      throw UsageError("'" + spec + "' holds " + std::to_string(graphs.size()) + " graphs, expected 1");
    }
    return graphs.front();
  }
  return occfrac::generate_from_spec(spec);
}

Json graph_summary(const Graph& g) {
  return Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"graph6", occfrac::serialize_graph6(g)}};
}

// ---------------------------------------------------------------------------

void cmd_poly(Report& rep, const std::string& graph, const std::string& format) {
  rep.inputs = {{"graph", graph}, {"format", format}};
  const Graph g = load_graph(graph, format);
  rep.results = graph_summary(g);
  rep.results["independence"] = to_json(occfrac::independence_poly(g).coefficients());
  rep.results["matching"] = to_json(occfrac::matching_gen_poly(g).coefficients());
}

void cmd_occupancy(Report& rep, const std::string& graph, const std::string& format, const std::string& lambda) {
  rep.inputs = {{"graph", graph}, {"format", format}, {"lambda", lambda}};
  const Rational lam = positive_rational(lambda, "lambda");
  const Graph g = load_graph(graph, format);
  rep.results["occupancy"] = to_json(occfrac::occupancy(g, lam));
  if (g.edge_count() > 0) rep.results["edge_occupancy"] = to_json(occfrac::edge_occupancy(g, lam));
}

void cmd_certify_hardcore(Report& rep, int d, const std::string& lambda, const std::string& grid) {
  rep.inputs = {{"d", d}, {"lambda", lambda}, {"grid", grid}};
  Json runs = Json::array();
  for (const auto& lam : lambda_list(lambda, grid)) {
    const auto cert = occfrac::hardcore::evaluate_dual_certificate(d, lam);
    const auto sol = occfrac::solve(occfrac::hardcore::build_primal(d, lam));
    Json j;
    j["lambda"] = lam.str();
    j["dual_values"] = Json::object();
    for (const auto& [name, v] : cert.dual_values) j["dual_values"][name] = v.str();
    j["optimum"] = cert.optimum.str();
    j["lp_optimum"] = sol.value.str();
    j["tight_set"] = cert.tight_set;
    j["slacks"] = Json::array();
    for (const auto& s : cert.slacks) j["slacks"].push_back({{"config", s.id}, {"slack", s.slack.str()}});
    j["failures"] = cert.failures;
    const bool ok = cert.valid() && sol.value == cert.optimum;
    j["valid"] = ok;
    if (!ok) rep.verdict = Verdict::kFail;
    runs.push_back(std::move(j));
  }
  rep.results["certificates"] = std::move(runs);
}

void cmd_certify_matching(Report& rep, int d, const std::string& lambda, const std::string& grid) {
  rep.inputs = {{"d", d}, {"lambda", lambda}, {"grid", grid}};
  const bool laguerre = occfrac::matching::laguerre_check(d);
  rep.results["laguerre"] = laguerre ? "pass" : "fail";
  if (!laguerre) rep.verdict = Verdict::kFail;
  Json runs = Json::array();
  for (const auto& lam : lambda_list(lambda, grid)) {
    const auto cert = occfrac::matching::evaluate_dual_certificate(d, lam);
    const auto sol = occfrac::solve(occfrac::matching::build_primal(d, lam));
    Json j;
    j["lambda"] = lam.str();
    j["optimum"] = cert.dual.optimum.str();
    j["lp_optimum"] = sol.value.str();
    j["dual_variables"] = to_json(cert.dual.lambdas);
    j["triples"] = Json::array();
    for (const auto& t : cert.triples) {
      j["triples"].push_back({{"triple", t.triple.str()}, {"L", t.l.str()}, {"slack", t.slack.str()}});
    }
    j["F"] = Json::array();
    for (int t = 1; t < d; ++t) {
      j["F"].push_back({{"t", t},
                        {"definition", cert.f.definition[static_cast<std::size_t>(t)].str()},
                        {"explicit", cert.f.explicit_form[static_cast<std::size_t>(t)].str()}});
    }
    j["tight_set"] = cert.report.tight_set;
    j["failures"] = cert.report.failures;
    const bool ok = cert.report.valid() && sol.value == cert.dual.optimum;
    j["valid"] = ok;
    if (!ok) rep.verdict = Verdict::kFail;
    runs.push_back(std::move(j));
  }
  rep.results["certificates"] = std::move(runs);
}

void cmd_tree(Report& rep, int d, const std::string& lambda, const std::string& tol) {
  rep.inputs = {{"d", d}, {"lambda", lambda}, {"tol", tol}};
  const auto t = occfrac::bounds::tree_occupancy(d, positive_rational(lambda, "lambda"), positive_rational(tol, "tol"));
  rep.results["alpha_low"] = t.alpha_low.str();
  rep.results["alpha_high"] = t.alpha_high.str();
  rep.results["alpha_approx"] = ((t.alpha_low + t.alpha_high) / Rational(2)).to_double();
  if (d >= 3) rep.results["lambda_c"] = occfrac::bounds::uniqueness_threshold(d).str();
}

void cmd_lower_bound(Report& rep, const std::string& corpus, const std::string& format, const std::string& lambda,
                     const std::string& grid, const std::string& tol, bool assume_transitive) {
  rep.inputs = {{"corpus", corpus}, {"format", format}, {"lambda", lambda}, {"grid", grid}, {"tol", tol},
                {"assume_transitive", assume_transitive}};
  const auto lambdas = lambda_list(lambda, grid.empty() && lambda.empty() ? "1/4,1/2,1,2,4" : grid);
  const Rational tolerance = positive_rational(tol, "tol");
  Json rows = Json::array();
  Verdict overall = Verdict::kNotApplicable;
  const auto graphs = load_corpus(corpus, format);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json row = graph_summary(graphs[i]);
    row["index"] = i;
    Json checks = Json::array();
    Verdict v = Verdict::kNotApplicable;
    try {
      for (const auto& lam : lambdas) {
        const auto r = occfrac::bounds::verify_lower_bound(graphs[i], lam, tolerance, assume_transitive);
        checks.push_back({{"lambda", lam.str()},
                          {"occupancy", r.occupancy.str()},
                          {"tree_low", r.tree.alpha_low.str()},
                          {"tree_high", r.tree.alpha_high.str()},
                          {"tightened", r.tightened},
                          {"verdict", occfrac::to_string(r.verdict)}});
        v = occfrac::combine(v, r.verdict);
      }
    } catch (const occfrac::DomainError& e) {
      row["reason"] = e.what();
    }
    row["checks"] = std::move(checks);
    row["verdict"] = occfrac::to_string(v);
    overall = occfrac::combine(overall, v);
    rows.push_back(std::move(row));
  }
  rep.results["graphs"] = std::move(rows);
  rep.verdict = overall;
}

void cmd_given_size(Report& rep, const std::string& corpus, const std::string& format) {
  rep.inputs = {{"corpus", corpus}, {"format", format}};
  Json rows = Json::array();
  Verdict overall = Verdict::kNotApplicable;
  const auto graphs = load_corpus(corpus, format);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto r = occfrac::bounds::given_size_bound(graphs[i]);
    Json row = graph_summary(graphs[i]);
    row["index"] = i;
    row["verdict"] = occfrac::to_string(r.verdict);
    row["failures"] = r.failures;
    overall = occfrac::combine(overall, r.verdict);
    rows.push_back(std::move(row));
  }
  rep.results["graphs"] = std::move(rows);
  rep.verdict = overall;
}

void cmd_counts(Report& rep, const std::string& graph, const std::string& format) {
  rep.inputs = {{"graph", graph}, {"format", format}};
  const Graph g = load_graph(graph, format);
  const auto c = occfrac::bounds::counts(g);
  rep.results = graph_summary(g);
  rep.results["independent_sets"] = to_json(c.independent_sets);
  rep.results["matchings"] = to_json(c.matchings);
}

void cmd_conjectures(Report& rep, const std::string& corpus, const std::string& format, int d, int n) {
  rep.inputs = {{"corpus", corpus}, {"format", format}, {"d", d}, {"n", n}};
  const auto graphs = load_corpus(corpus, format);
  if (graphs.empty()) throw UsageError("corpus is empty");
  if (d <= 0) d = occfrac::regular_degree(graphs.front()).value_or(0);
  if (n <= 0) n = graphs.front().vertex_count();
  rep.results["d"] = d;
  rep.results["n"] = n;
  if (d < 1 || n % (2 * d) != 0) {
    rep.verdict = Verdict::kNotApplicable;
    rep.results["reason"] = "2d does not divide n";
    return;
  }
  const auto cr = occfrac::bounds::conjecture_ratio_check(graphs, d, n);
  auto rows = [](const std::vector<occfrac::bounds::RatioRow>& v) {
    Json a = Json::array();
    for (const auto& r : v) {
      a.push_back({{"k", r.k},
                   {"corpus_max", r.corpus_max.str()},
                   {"argmax", r.argmax},
                   {"hdn_ratio", r.hdn_ratio.str()},
                   {"hdn_attains", r.hdn_attains}});
    }
    return a;
  };
  rep.results["independent_sets"] = rows(cr.independent_sets);
  rep.results["matchings"] = rows(cr.matchings);
  rep.results["skipped"] = cr.skipped;
  // Open conjectures: counterexamples are evidence, never a failure.
  rep.results["counterexamples"] = cr.counterexamples;
}

void cmd_selftest(Report& rep, bool quick, const std::string& mutate) {
  rep.inputs = {{"quick", quick}, {"mutate", mutate}};
  occfrac::acceptance::Options opts;
  opts.quick = quick;
  if (mutate == "gamma-f") opts.formulas = occfrac::matching::corrupted_gamma_f();
  else if (!mutate.empty()) throw UsageError("unknown mutation '" + mutate + "' (expected gamma-f)");
  Json rows = Json::array();
  for (std::size_t i = 0; i < occfrac::acceptance::criteria().size(); ++i) {
    const auto r = occfrac::acceptance::run(occfrac::acceptance::criteria()[i], static_cast<int>(i) + 1, opts);
    std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << '\n';
    for (const auto& f : r.failures) std::cerr << "    " << f << '\n';
    rows.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"failures", r.failures}});
    if (!r.passed) rep.verdict = Verdict::kFail;
  }
  rep.results["criteria"] = std::move(rows);
}

int emit(const Report& rep, std::chrono::steady_clock::time_point start) {
  Json out;
  out["command"] = rep.command;
  out["inputs"] = rep.inputs;
  out["results"] = rep.results;
  out["verdict"] = occfrac::to_string(rep.verdict);
  out["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << out.dump(2) << '\n';
  return rep.verdict == Verdict::kFail || rep.verdict == Verdict::kInconclusive ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact occupancy-fraction computations for the hard-core and monomer-dimer models"};
  app.require_subcommand(1);

  std::string graph, format = "graph6", lambda, grid, tol = "1/1000000000", corpus, mutate;
  int d = 0, n = 0;
  bool quick = false, assume_transitive = false;

  auto* poly = app.add_subcommand("poly", "independence and matching polynomials of a graph");
  poly->add_option("--graph", graph, "kdd:D, hdn:D:N, cycle:N, file:PATH, ...")->required();
  poly->add_option("--format", format, "graph6 or edgelist (for file: graphs)");

  auto* occ = app.add_subcommand("occupancy", "occupancy and edge occupancy fractions");
  occ->add_option("--graph", graph)->required();
  occ->add_option("--lambda", lambda, "fugacity P/Q")->required();
  occ->add_option("--format", format);

  auto* certify = app.add_subcommand("certify", "LP dual certificates");
  certify->require_subcommand(1);
  auto* cert_hc = certify->add_subcommand("hardcore", "hard-core LP certificate");
  auto* cert_m = certify->add_subcommand("matching", "matching LP certificate");
  for (auto* c : {cert_hc, cert_m}) {
    c->add_option("--d", d, "degree")->required();
    c->add_option("--lambda", lambda, "fugacity P/Q");
    c->add_option("--grid", grid, "comma-separated fugacities");
  }

  auto* tree = app.add_subcommand("tree", "occupancy fraction of the infinite d-regular tree");
  tree->add_option("--d", d)->required();
  tree->add_option("--lambda", lambda)->required();
  tree->add_option("--tol", tol);

  auto* verify = app.add_subcommand("verify", "corpus checks");
  verify->require_subcommand(1);
  auto* lower = verify->add_subcommand("lower-bound", "occupancy above the tree value");
  lower->add_option("--corpus", corpus)->required();
  lower->add_option("--format", format);
  lower->add_option("--lambda", lambda);
  lower->add_option("--grid", grid);
  lower->add_option("--tol", tol);
  lower->add_flag("--assume-transitive", assume_transitive, "skip the vertex-transitivity test");
  auto* given = verify->add_subcommand("given-size", "counts of a given size against H_{d,n}");
  given->add_option("--corpus", corpus)->required();
  given->add_option("--format", format);

  auto* cnt = app.add_subcommand("counts", "independent sets and matchings by size");
  cnt->add_option("graph", graph, "graph spec")->required();
  cnt->add_option("--format", format);

  auto* conj = app.add_subcommand("conjectures", "ratio evidence against H_{d,n}");
  conj->add_option("--corpus", corpus)->required();
  conj->add_option("--format", format);
  conj->add_option("--d", d, "degree (default: from the first graph)");
  conj->add_option("--n", n, "vertex count (default: from the first graph)");

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--quick", quick, "reduced grid");
  self->add_option("--mutate", mutate, "inject a known-bad formula (gamma-f)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (*poly) {
      rep.command = "poly";
      cmd_poly(rep, graph, format);
    } else if (*occ) {
      rep.command = "occupancy";
      cmd_occupancy(rep, graph, format, lambda);
    } else if (*cert_hc) {
      rep.command = "certify hardcore";
      cmd_certify_hardcore(rep, d, lambda, grid);
    } else if (*cert_m) {
      rep.command = "certify matching";
      cmd_certify_matching(rep, d, lambda, grid);
    } else if (*tree) {
      rep.command = "tree";
      cmd_tree(rep, d, lambda, tol);
    } else if (*lower) {
      rep.command = "verify lower-bound";
      cmd_lower_bound(rep, corpus, format, lambda, grid, tol, assume_transitive);
    } else if (*given) {
      rep.command = "verify given-size";
      cmd_given_size(rep, corpus, format);
    } else if (*cnt) {
      rep.command = "counts";
      cmd_counts(rep, graph, format);
    } else if (*conj) {
      rep.command = "conjectures";
      cmd_conjectures(rep, corpus, format, d, n);
    } else if (*self) {
      rep.command = "selftest";
      cmd_selftest(rep, quick, mutate);
    }
  } catch (const occfrac::CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << '\n';
    return kExitCapability;
  } catch (const occfrac::CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kExitFail;
  } catch (const occfrac::ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const occfrac::FormatError& e) {
    std::cerr << "format error at byte " << e.offset() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // ParameterError, StructuralError
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  }
  return emit(rep, start);
}
