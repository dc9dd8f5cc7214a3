// hyperspectra command-line front end.
//
// Exit codes: 0 success/confirmed, 2 input error, 3 numeric failure,
// 4 refuted, 5 out of range, 6 capacity.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyperspectra/hyperspectra.hpp"

namespace hs = hyperspectra;

namespace {

enum Exit { kOk = 0, kInput = 2, kNumeric = 3, kRefuted = 4, kOutOfRange = 5, kCapacity = 6 };

struct Config {
  double tol_power = 1e-10;
  double tol_alpha = 1e-13;
  double tol_agree = 1e-6;
  std::string format = "human";
  std::string output;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int m = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {m, m};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw hs::InputError("m-range must look like A..B, got '" + text + "'");
  }
}

// Writes to cfg.output when set, else stdout.
void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    hs::write_file(cfg.output, text);
  }
}

std::string sidecar_path(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size()) + ".labels.json";
  }
  return path + ".labels.json";
}

int cmd_rho(const Config& cfg, const std::string& path) {
  const auto g = hs::read_hypergraph(hs::read_file(path));
  const auto ep = hs::spectral_radius(g, cfg.tol_power);
  if (cfg.format == "json") {
    hs::ojson out{{"rho", ep.rho},
                  {"residual", ep.residual},
                  {"iterations", ep.iterations},
                  {"lambda_min", ep.lambda_min},
                  {"lambda_max", ep.lambda_max}};
    emit(cfg, out.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, "rho,residual,iterations\n" + num(ep.rho) + "," + num(ep.residual) + "," +
                  std::to_string(ep.iterations) + "\n");
  } else {
    emit(cfg, "rho        " + num(ep.rho) + "\nresidual   " + num(ep.residual) + "\niterations " +
                  std::to_string(ep.iterations) + "\n");
  }
  return kOk;
}

int cmd_build(const Config& cfg, const std::string& family, int m, int k) {
  const auto h = hs::build_family(hs::parse_family(family), m, k);
  if (cfg.output.empty()) {
    std::cout << hs::write_hypergraph(h.graph);
    return kOk;
  }
  hs::write_file(cfg.output, hs::write_hypergraph(h.graph));
  hs::write_file(sidecar_path(cfg.output), hs::labels_to_json(h).dump() + "\n");
  return kOk;
}

int cmd_certify(const Config& cfg, const std::string& family, int m, int k) {
  const hs::Family f = hs::parse_family(family);
  if (f != hs::Family::A && f != hs::Family::D && f != hs::Family::L && f != hs::Family::I) {
    throw hs::InputError("family " + hs::to_string(f) +
                         " has no normal certificate (A, D, L, I only); use the witness subcommand");
  }
  hs::CertificateTolerances tol;
  tol.alpha = cfg.tol_alpha;
  const auto sol = hs::solve_certificate(f, m, k, tol);
  const double rho_power = hs::spectral_radius(sol.host.graph, cfg.tol_power).rho;
  const double gap = std::abs(sol.rho - rho_power);
  const bool agree = gap <= cfg.tol_agree;
  if (cfg.format == "json") {
    auto out = hs::to_json(sol);
    out["rho_power"] = rho_power;
    out["gap"] = gap;
    out["agree"] = agree;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::string text = "certificate " + family + " m=" + std::to_string(m) + " k=" + std::to_string(k) + "\n";
    text += "alpha      " + num(sol.alpha) + "\n";
    for (const auto& [name, value] : sol.params) text += "  " + name + " = " + num(value) + "\n";
    text += "rho(cert)  " + num(sol.rho) + "\nrho(power) " + num(rho_power) + "\ngap        " + num(gap) +
            (agree ? "  (agree)\n" : "  (DISAGREE)\n");
    emit(cfg, text);
  }
  return agree ? kOk : kNumeric;
}

int cmd_witness(const Config& cfg, const std::string& pair_name, int m, int k) {
  const auto pair = hs::parse_witness_pair(pair_name);
  hs::CertificateTolerances tol;
  tol.alpha = cfg.tol_alpha;
  const bool in_range = m >= hs::witness_min_m(pair);
  const auto w = hs::build_subnormal_witness(pair, m, k, tol);
  const bool strict = w.slack > 0.0 && w.status == hs::Subnormality::StrictlySubnormal;
  if (cfg.format == "json") {
    auto out = hs::to_json(w);
    out["in_proven_range"] = in_range;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::string text = "witness " + hs::to_string(pair) + " m=" + std::to_string(m) + " k=" + std::to_string(k) + "\n";
    text += "alpha  " + num(w.alpha) + "\nslack  " + num(w.slack) + "\nstatus " + hs::to_string(w.status) + "\n";
    if (!in_range) text += "note   m is below the proven range (m >= " + std::to_string(hs::witness_min_m(pair)) + ")\n";
    emit(cfg, text);
  }
  if (!in_range) return kOutOfRange;
  return strict ? kOk : kRefuted;
}

int cmd_enumerate(const Config& cfg, int n, int k, bool linear_only, bool nonlinear_only, unsigned threads) {
  if (linear_only && nonlinear_only) throw hs::InputError("--linear-only and --nonlinear-only are exclusive");
  if (n <= 0) throw hs::InputError("n must be positive");
  hs::EnumerationOptions opts;
  opts.tol = cfg.tol_power;
  opts.threads = threads;
  const auto filter = linear_only      ? hs::EnumerationFilter::LinearOnly
                      : nonlinear_only ? hs::EnumerationFilter::NonlinearOnly
                                       : hs::EnumerationFilter::All;
  const auto r = hs::enumerate_unicyclic_pm(static_cast<std::size_t>(n), k, filter, opts);
  if (cfg.format == "csv") {
    emit(cfg, hs::enumeration_csv(r));
  } else if (cfg.format == "json") {
    emit(cfg, hs::to_json(r).dump(2) + "\n");
  } else {
    std::string text = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " filter=" + hs::to_string(filter) +
                       " members=" + std::to_string(r.members.size()) + "\n";
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      const auto& mem = r.members[i];
      std::string tags;
      for (const auto& t : mem.label.tags.names()) tags += " " + t;
      text += (r.maximizer && *r.maximizer == i ? "* " : "  ") + mem.hash + "  rho=" + num(mem.rho) + "  " +
              hs::to_string(mem.label.kind) + " l=" + std::to_string(mem.label.cycle_length) + tags + "\n";
    }
    if (r.members.size() > 1) text += "runner-up gap " + num(r.runner_up_gap) + "\n";
    emit(cfg, text);
  }
  return kOk;
}

std::string open_ad_text(const std::vector<hs::OpenComparisonRow>& rows) {
  std::string text = "m  rho(A)          rho(D)          rho(D)-rho(A)\n";
  for (const auto& r : rows) {
    text += std::to_string(r.m) + "  " + num(r.rho_a) + "  " + num(r.rho_d) + "  " + num(r.gap) + "\n";
  }
  return text;
}

int cmd_compare_ad(const Config& cfg, int k, const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  const auto rows = hs::resolve_open_comparison(k, lo, hi, cfg.tol_power);
  if (cfg.format == "json") {
    emit(cfg, hs::to_json(rows, k).dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::string text = "k,m,rho_A,rho_D,gap_D_minus_A\n";
    for (const auto& r : rows) {
      text += std::to_string(k) + "," + std::to_string(r.m) + "," + num(r.rho_a) + "," + num(r.rho_d) + "," +
              num(r.gap) + "\n";
    }
    emit(cfg, text);
  } else {
    emit(cfg, open_ad_text(rows));
  }
  return kOk;
}

std::string anchor(const std::string& id) {
  if (id.empty()) return id;
  if (id[0] == 'L') return "Lemma " + id.substr(1);
  if (id[0] == 'C') return "Corollary " + id.substr(1);
  return "Theorem " + id;
}

int cmd_verify(const Config& cfg, const std::string& id, int k, const std::string& range, bool exhaustive,
               unsigned threads) {
  if (id == "open-AD") return cmd_compare_ad(cfg, k, range);
  const auto [lo, hi] = parse_range(range);
  hs::VerifyOptions opts;
  opts.tol = cfg.tol_power;
  opts.enumeration.tol = cfg.tol_power;
  opts.enumeration.threads = threads;
  const auto report = hs::verify_theorem(id, k, lo, hi, exhaustive, opts);
  if (cfg.format == "json") {
    emit(cfg, hs::to_json(report).dump(2) + "\n");
  } else {
    std::string text = anchor(id) + "  k=" + std::to_string(k) + "  m=" + std::to_string(lo) + ".." +
                       std::to_string(hi) + "  mode=" + (exhaustive ? "exhaustive" : "family") + "\n";
    for (const auto& c : report.checks) {
      text += "  m=" + std::to_string(c.m) + "  " + (c.passed ? "ok    " : "FAIL  ") + c.what;
      if (!std::isnan(c.gap)) text += "  gap=" + num(c.gap);
      text += "\n";
    }
    for (const auto& note : report.notes) text += "  note: " + note + "\n";
    text += "verdict: " + hs::to_string(report.verdict) + " (" + anchor(id) + ")";
    if (report.min_gap) text += "  min gap " + num(*report.min_gap);
    text += "\n";
    if (!report.counterexample.empty()) text += "counterexample: " + report.counterexample + "\n";
    emit(cfg, text);
  }
  switch (report.verdict) {
    case hs::Verdict::Confirmed: return kOk;
    case hs::Verdict::Refuted: return kRefuted;
    case hs::Verdict::OutOfRange: return kOutOfRange;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radii, certificates and extremal checks for uniform hypergraphs"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tol-power", cfg.tol_power, "power iteration bracket tolerance")->capture_default_str();
  app.add_option("--tol-alpha", cfg.tol_alpha, "bisection tolerance on alpha")->capture_default_str();
  app.add_option("--tol-agree", cfg.tol_agree, "certificate vs power iteration agreement")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();

  std::string path, family, pair, id, range;
  int m = 0, k = 0, n = 0;
  unsigned threads = 0;
  bool linear_only = false, nonlinear_only = false, exhaustive = false;

  auto* rho = app.add_subcommand("rho", "spectral radius of a hypergraph file");
  rho->add_option("file", path, "hypergraph JSON")->required();

  auto* build = app.add_subcommand("build", "build a named family member");
  build->add_option("family", family, "S, C, C2, A, B, D, I, J or L")->required();
  build->add_option("--m", m, "size parameter (a for S, l for C)")->required();
  build->add_option("--k", k, "uniformity")->required();
  build->add_option("-o,--output", cfg.output, "output path");

  auto* certify = app.add_subcommand("certify", "solve a normal certificate and cross-check");
  certify->add_option("family", family, "A, D, L or I")->required();
  certify->add_option("--m", m)->required();
  certify->add_option("--k", k)->required();

  auto* witness = app.add_subcommand("witness", "strict subnormality witness");
  witness->add_option("pair", pair, "B-under-A, A-under-D, I-under-L or J-under-I")->required();
  witness->add_option("--m", m)->required();
  witness->add_option("--k", k)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate unicyclic hypergraphs with perfect matchings");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();
  auto* lin = enumerate->add_flag("--linear-only", linear_only);
  enumerate->add_flag("--nonlinear-only", nonlinear_only)->excludes(lin);
  enumerate->add_option("-o,--output", cfg.output, "output path");
  enumerate->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "check a lemma, corollary or theorem");
  verify->add_option("--id", id, "3.1 4.1 5.1 C3.1 C3.2 C4.1 C4.2 L3.7 L3.9 L4.3 L4.4 L4.7 open-AD")->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--m-range", range, "A..B")->required();
  verify->add_flag("--exhaustive", exhaustive);
  verify->add_option("-o,--output", cfg.output, "report path");
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* compare = app.add_subcommand("compare-ad", "rho(A) against rho(D) per m");
  compare->add_option("--k", k)->required();
  compare->add_option("--m-range", range, "A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kInput;
  }

  try {
    if (*rho) return cmd_rho(cfg, path);
    if (*build) return cmd_build(cfg, family, m, k);
    if (*certify) return cmd_certify(cfg, family, m, k);
    if (*witness) return cmd_witness(cfg, pair, m, k);
    if (*enumerate) return cmd_enumerate(cfg, n, k, linear_only, nonlinear_only, threads);
    if (*verify) return cmd_verify(cfg, id, k, range, exhaustive, threads);
    if (*compare) return cmd_compare_ad(cfg, k, range);
  } catch (const hs::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const hs::SolverError& e) {
    std::cerr << "solver: " << e.what() << "\n";
    return kNumeric;
  } catch (const hs::ConvergenceError& e) {
    std::cerr << "convergence: " << e.what() << "\n";
    return kNumeric;
  } catch (const hs::CertificateError& e) {
    std::cerr << "certificate: " << e.what() << "\n";
    return kNumeric;
  } catch (const hs::Error& e) {
    std::cerr << "input: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
