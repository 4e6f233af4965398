// hypereig: principal eigenpairs of uniform hypergraphs and certification of
// the eigenvector / spectral-gap bounds against them.
//
// Exit codes: 0 success, 1 certificate failure, 2 input or parse error,
// 3 power iteration did not converge.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypereig/hypereig.hpp"

namespace {

using namespace hypereig;

enum Exit : int { kOk = 0, kCertificateFailure = 1, kInputError = 2, kNonConvergence = 3 };

struct CommonArgs {
  std::string file;
  double tol = 1e-12;
  std::size_t max_iters = 100000;
  double shift = 1.0;
  std::string json_out;
  std::string csv_out;
};

void add_common(CLI::App* sub, CommonArgs& a, bool with_csv = true) {
  sub->add_option("file", a.file, "Hypergraph file ('n r m' header, then m edge lines)")->required();
  sub->add_option("--tol", a.tol, "Relative Collatz-Wielandt bracket width")->capture_default_str();
  sub->add_option("--max-iters", a.max_iters, "Power-iteration cap")->capture_default_str();
  sub->add_option("--shift", a.shift, "Diagonal shift for the power method")->capture_default_str();
  sub->add_option("--json", a.json_out, "Write the full JSON report here");
  if (with_csv) sub->add_option("--csv", a.csv_out, "Write a CSV table here");
}

IterationOptions iteration_options(const CommonArgs& a) {
  IterationOptions o;
  o.tolerance = a.tol;
  o.max_iterations = a.max_iters;
  o.shift = a.shift;
  return o;
}

Hypergraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return read_hypergraph(in);
}

template <class Fn>
void write_file(const std::string& path, Fn&& fn) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidParameters, "cannot write '" + path + "'");
  fn(out);
}

Json report_header(const std::string& command, const CommonArgs& a) {
  Json j;
  j["schema"] = report_schema;
  j["command"] = command;
  j["options"] = {{"tolerance", a.tol}, {"max_iterations", a.max_iters}, {"shift", a.shift}};
  return j;
}

void print_spectral(const SpectralResult& s) {
  std::printf("rho            = %.17g\n", s.rho);
  std::printf("bracket        = [%.17g, %.17g]\n", s.lambda_lo, s.lambda_hi);
  std::printf("residual_inf   = %.3e\n", s.residual_inf);
  std::printf("iterations     = %zu\n", s.iterations);
  std::printf("x_max          = %.17g (vertex %u)\n", s.x_max(), s.argmax());
  std::printf("x_min          = %.17g (vertex %u)\n", s.x_min(), s.argmin());
  for (std::size_t v = 0; v < s.x.size(); ++v) std::printf("  x[%zu] = %.17g\n", v, s.x[v]);
}

void print_incidence(const WeightedIncidence& b, const AlphaNormalReport& an, const ConsistencyReport& cy) {
  std::printf("alpha          = %.17g\n", b.alpha);
  std::printf("row sums       max dev %.3e (vertex %u)\n", an.row_sum_deviation, an.row_sum_vertex);
  std::printf("edge products  max dev %.3e (edge %zu)\n", an.edge_product_deviation, an.edge_product_edge);
  std::printf("edge spread    max dev %.3e (edge %zu)\n", an.spread_deviation, an.spread_edge);
  std::printf("identities     %s (tol %.1e)\n", an.pass ? "PASS" : "FAIL", an.tolerance);
  std::printf("cycles         %zu/%zu checked, max dev %.3e: %s\n", cy.cycles_checked, cy.cycles_total,
              cy.max_deviation, cy.pass ? "PASS" : "FAIL");
}

void print_bounds(const std::vector<BoundCertificate>& certs) {
  const auto sum = summarize(certs);
  std::printf("certificates   %zu total, %zu applicable, %zu passed, %zu failed\n", sum.total, sum.applicable,
              sum.passed, sum.failed);
  // Tightest applicable certificate per bound.
  for (int id = 0; id <= static_cast<int>(BoundId::RhoVsMaxDegree); ++id) {
    const BoundCertificate* tight = nullptr;
    for (const auto& c : certs) {
      if (static_cast<int>(c.id) == id && c.applicable && (!tight || c.slack < tight->slack)) tight = &c;
    }
    if (!tight) continue;
    std::string subj;
    if (tight->subject.u) subj += std::to_string(*tight->subject.u);
    if (tight->subject.v) subj += "," + std::to_string(*tight->subject.v);
    std::printf("  %-22s tightest at (%s): actual %.12g vs bound %.12g, slack %.3e %s\n", to_string(tight->id),
                subj.c_str(), tight->actual_value, tight->bound_value, tight->slack,
                tight->pass ? "" : "FAIL");
  }
  for (const auto& c : certs) {
    if (c.failed()) {
      std::printf("  FAILED %s u=%s v=%s actual %.17g bound %.17g\n", to_string(c.id),
                  c.subject.u ? std::to_string(*c.subject.u).c_str() : "-",
                  c.subject.v ? std::to_string(*c.subject.v).c_str() : "-", c.actual_value, c.bound_value);
    }
  }
}

void print_gap(const GapReport& g) {
  std::printf("diameter D     = %zu\n", g.diameter);
  std::printf("deletions      %zu connected, %zu disconnected: %s\n", g.connected_deletions,
              g.disconnected_deletions, g.pass ? "PASS" : "FAIL");
  for (const auto& r : g.records) {
    std::printf("  edge %zu: gap %.12g >= bound %.6g  [%s]%s\n", r.edge_index, r.gap, r.bound.bound,
                r.connected_after ? "connected" : "disconnected", r.pass ? "" : " FAIL");
  }
}

struct Pipeline {
  Hypergraph h;
  SpectralResult s;
};

Pipeline solve(const CommonArgs& a) {
  Hypergraph h = load(a.file);
  SpectralResult s = power_iteration(h, iteration_options(a));
  return {std::move(h), std::move(s)};
}

int run_spectral(const CommonArgs& a) {
  auto [h, s] = solve(a);
  print_spectral(s);
  Json j = report_header("spectral", a);
  j["input"] = input_json(h);
  j["spectral"] = spectral_json(s);
  write_file(a.json_out, [&](std::ostream& out) { write_json(out, j); });
  write_file(a.csv_out, [&](std::ostream& out) { write_spectral_csv(out, s); });
  return kOk;
}

int run_incidence(const CommonArgs& a, std::size_t budget) {
  auto [h, s] = solve(a);
  const auto b = build_incidence(h, s);
  const auto an = verify_alpha_normal(b, h, s);
  const auto cy = verify_consistency(b, h, budget);
  print_incidence(b, an, cy);
  Json j = report_header("incidence", a);
  j["input"] = input_json(h);
  j["spectral"] = spectral_json(s);
  j["incidence"] = incidence_json(h, b, an, cy);
  write_file(a.json_out, [&](std::ostream& out) { write_json(out, j); });
  write_file(a.csv_out, [&](std::ostream& out) { write_incidence_csv(out, h, b); });
  return an.pass && cy.pass ? kOk : kCertificateFailure;
}

int run_bounds(const CommonArgs& a) {
  auto [h, s] = solve(a);
  const auto certs = certify_all(h, s);
  print_bounds(certs);
  Json j = report_header("bounds", a);
  j["input"] = input_json(h);
  j["spectral"] = spectral_json(s);
  j["bounds"] = bounds_json(certs);
  write_file(a.json_out, [&](std::ostream& out) { write_json(out, j); });
  write_file(a.csv_out, [&](std::ostream& out) { write_bounds_csv(out, certs); });
  return summarize(certs).failed == 0 ? kOk : kCertificateFailure;
}

int run_gap(const CommonArgs& a) {
  auto [h, s] = solve(a);
  const auto g = audit_edge_deletions(h, iteration_options(a), s.rho);
  print_gap(g);
  Json j = report_header("gap", a);
  j["input"] = input_json(h);
  j["spectral"] = spectral_json(s);
  j["gap"] = gap_json(g);
  write_file(a.json_out, [&](std::ostream& out) { write_json(out, j); });
  write_file(a.csv_out, [&](std::ostream& out) { write_gap_csv(out, g); });
  return g.pass ? kOk : kCertificateFailure;
}

// "v:factor" -> scale x_v by factor after the incidence matrix is built.
std::pair<Vertex, double> parse_perturbation(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidParameters, "--perturb expects VERTEX:FACTOR");
  return {static_cast<Vertex>(std::stoul(arg.substr(0, colon))), std::stod(arg.substr(colon + 1))};
}

int run_verify(const CommonArgs& a, std::size_t budget, const std::string& perturb) {
  auto [h, s] = solve(a);
  const auto b = build_incidence(h, s);
  if (!perturb.empty()) {
    const auto [v, factor] = parse_perturbation(perturb);
    if (v >= h.num_vertices()) throw Error(Errc::VertexOutOfRange, "--perturb vertex");
    s.x[v] *= factor;
    s.residual_inf = residual(h, s.x, s.rho);
  }
  const auto an = verify_alpha_normal(b, h, s);
  const auto cy = verify_consistency(b, h, budget);
  const auto certs = certify_all(h, s);
  const auto g = audit_edge_deletions(h, iteration_options(a), s.rho);
  const auto sum = summarize(certs);

  print_spectral(s);
  print_incidence(b, an, cy);
  print_bounds(certs);
  print_gap(g);

  const bool pass = an.pass && cy.pass && sum.failed == 0 && g.pass;
  std::printf("verdict        %s\n", pass ? "PASS" : "FAIL");

  Json j = report_header("verify", a);
  j["input"] = input_json(h);
  j["spectral"] = spectral_json(s);
  j["incidence"] = incidence_json(h, b, an, cy);
  j["bounds"] = bounds_json(certs);
  j["gap"] = gap_json(g);
  j["verdict"] = {{"pass", pass},
                  {"identities", an.pass},
                  {"cycles", cy.pass},
                  {"certificates_failed", sum.failed},
                  {"gap", g.pass}};
  write_file(a.json_out, [&](std::ostream& out) { write_json(out, j); });
  return pass ? kOk : kCertificateFailure;
}

Hypergraph generate(const std::string& family, const std::vector<std::size_t>& p, std::uint64_t seed) {
  auto need = [&](std::size_t k, const char* usage) {
    if (p.size() != k) throw Error(Errc::InvalidParameters, std::string("usage: gen ") + usage);
  };
  if (family == "single_edge") {
    need(1, "single_edge R");
    return single_edge(p[0]);
  }
  if (family == "complete") {
    need(2, "complete N R");
    return complete(p[0], p[1]);
  }
  if (family == "loose_path") {
    need(2, "loose_path K R");
    return loose_path(p[0], p[1]);
  }
  if (family == "random" || family == "random_uniform") {
    need(3, "random N R M [--seed S]");
    return random_uniform(p[0], p[1], p[2], seed);
  }
  throw Error(Errc::InvalidParameters, "unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal eigenvectors of uniform hypergraphs: spectral radius, alpha-normal incidence, "
               "eigenvector bounds, sub-hypergraph spectral gaps"};
  app.require_subcommand(1);

  CommonArgs common;
  std::size_t cycle_budget = 1000;
  std::string perturb;

  auto* spectral = app.add_subcommand("spectral", "Perron pair by shifted power iteration");
  add_common(spectral, common);
  auto* incidence = app.add_subcommand("incidence", "Alpha-normal weighted incidence matrix and its identities");
  add_common(incidence, common);
  incidence->add_option("--cycle-budget", cycle_budget, "Fundamental cycles to check")->capture_default_str();
  auto* bounds = app.add_subcommand("bounds", "Certify eigenvector entry, ratio and principal-ratio bounds");
  add_common(bounds, common);
  auto* gap = app.add_subcommand("gap", "Audit the spectral gap over all single-edge deletions");
  add_common(gap, common);
  auto* verify = app.add_subcommand("verify", "Full pipeline; exit 1 on any failed check");
  add_common(verify, common, false);
  verify->add_option("--cycle-budget", cycle_budget, "Fundamental cycles to check")->capture_default_str();
  verify->add_option("--perturb", perturb, "Fault injection: scale x_v by FACTOR before checking (VERTEX:FACTOR)");

  std::string family;
  std::vector<std::size_t> params;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a generated hypergraph (single_edge, complete, loose_path, random)");
  gen->add_option("family", family, "single_edge | complete | loose_path | random")->required();
  gen->add_option("params", params, "Family parameters")->required();
  gen->add_option("--seed", seed, "Seed for the random family")->capture_default_str();
  gen->add_option("-o,--output", out_path, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*spectral) return run_spectral(common);
    if (*incidence) return run_incidence(common, cycle_budget);
    if (*bounds) return run_bounds(common);
    if (*gap) return run_gap(common);
    if (*verify) return run_verify(common, cycle_budget, perturb);
    if (*gen) {
      const Hypergraph h = generate(family, params, seed);
      std::string comment = "hypereig gen " + family;
      for (auto p : params) comment += " " + std::to_string(p);
      if (family.rfind("random", 0) == 0) comment += " --seed " + std::to_string(seed);
      if (out_path.empty()) {
        write_hypergraph(std::cout, h, comment);
      } else {
        write_file(out_path, [&](std::ostream& out) { write_hypergraph(out, h, comment); });
      }
      return kOk;
    }
  } catch (const NonConvergence& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNonConvergence;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == Errc::NotConverged ? kNonConvergence : kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kInputError;
}
