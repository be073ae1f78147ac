// gftlab: expand exponential starlike/convex class members, evaluate their
// logarithmic-coefficient functionals, run the bound-verification searches and
// the proof-inequality battery, and emit figure data.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gftlab/report_io.hpp"
#include "gftlab/verify.hpp"

namespace {

using namespace gftlab;

struct CommonOpts {
  double alpha = 1.0;
  int order = 12;
  std::uint64_t seed = 42;
  long budget = 100000;
  std::string format = "text";
  std::string out_path;
};

int thread_cap() {
  if (const char* env = std::getenv("GFT_LAB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_output(const CommonOpts& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + opts.out_path);
  f << payload;
}

ClassKind parse_class(const std::string& name) {
  if (name == "starlike") return ClassKind::StarlikeExp;
  if (name == "convex") return ClassKind::ConvexExp;
  throw CLI::ValidationError("--class", "expected starlike or convex");
}

// omega specs: "zero", "z", "z^k", or "poly:b1,b2,..." (real coefficients of
// z, z^2, ...).
TruncatedSeries parse_omega(const std::string& spec, int order) {
  if (spec == "zero") return TruncatedSeries(static_cast<std::size_t>(order));
  if (spec == "z") return TruncatedSeries::monomial(order, 1);
  if (spec.rfind("z^", 0) == 0) {
    const int k = std::stoi(spec.substr(2));
    if (k < 1 || k > order)
      throw CLI::ValidationError("--omega", "monomial power out of range");
    return TruncatedSeries::monomial(order, k);
  }
  if (spec.rfind("poly:", 0) == 0) {
    TruncatedSeries w(static_cast<std::size_t>(order));
    std::stringstream ss(spec.substr(5));
    std::string tok;
    int k = 1;
    while (std::getline(ss, tok, ',')) {
      if (k > order) throw CLI::ValidationError("--omega", "too many coefficients");
      w.coeffs[static_cast<std::size_t>(k++)] = std::stod(tok);
    }
    return w;
  }
  throw CLI::ValidationError("--omega", "unrecognized omega spec '" + spec + "'");
}

std::string format_complex(cplx v) {
  if (std::abs(v.imag()) < 1e-14) return format_double(v.real());
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
         format_double(std::abs(v.imag())) + "i";
}

struct MemberSelection {
  int extremal_index = 0;  // 0 = use omega spec
  std::string class_name = "starlike";
  bool class_given = false;
  std::string omega_spec;
};

ClassMember build_selected(const MemberSelection& sel, const CommonOpts& opts) {
  if (sel.extremal_index != 0) {
    if (sel.class_given) {
      const bool star = sel.extremal_index <= 4;
      if (star != (parse_class(sel.class_name) == ClassKind::StarlikeExp))
        throw CLI::ValidationError("--extremal",
                                   "extremal index inconsistent with --class");
    }
    return extremal(sel.extremal_index, opts.alpha, opts.order);
  }
  if (sel.omega_spec.empty())
    throw CLI::ValidationError("--omega", "need --extremal or --omega");
  const ClassTag tag{parse_class(sel.class_name), opts.alpha};
  return build_member(tag, parse_omega(sel.omega_spec, opts.order), opts.order);
}

void add_member_options(CLI::App* cmd, MemberSelection& sel) {
  cmd->add_option("--extremal", sel.extremal_index,
                  "extremal witness index 1..8 (1-4 starlike, 5-8 convex)")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--class", sel.class_name, "starlike | convex")
      ->check(CLI::IsMember({"starlike", "convex"}))
      ->each([&sel](const std::string&) { sel.class_given = true; });
  cmd->add_option("--omega", sel.omega_spec, "zero | z | z^k | poly:b1,b2,...");
}

// ---------------------------------------------------------------------------

int run_expand(const MemberSelection& sel, const CommonOpts& opts) {
  const ClassMember m = build_selected(sel, opts);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value(std::string("expand"));
    w.key("class");
    w.value(m.tag.kind == ClassKind::StarlikeExp ? "starlike" : "convex");
    w.key("alpha");
    w.value(m.tag.alpha);
    w.key("order");
    w.value(static_cast<long long>(opts.order));
    w.key("coefficients");
    w.begin_array();
    for (int n = 1; n <= opts.order; ++n) {
      w.begin_array();
      w.value(m.a.coeffs[static_cast<std::size_t>(n)].real());
      w.value(m.a.coeffs[static_cast<std::size_t>(n)].imag());
      w.end_array();
    }
    w.end_array();
    w.end_object();
    write_output(opts, w.str() + "\n");
  } else if (opts.format == "csv") {
    std::string out = csv_row({"n", "re", "im"});
    for (int n = 1; n <= opts.order; ++n) {
      const cplx a = m.a.coeffs[static_cast<std::size_t>(n)];
      out += csv_row({std::to_string(n), format_double(a.real()),
                      format_double(a.imag())});
    }
    write_output(opts, out);
  } else {
    std::string out;
    for (int n = 1; n <= opts.order; ++n) {
      if (n > 1) out += ", ";
      out += format_complex(m.a.coeffs[static_cast<std::size_t>(n)]);
    }
    write_output(opts, out + "\n");
  }
  return 0;
}

int run_gamma(const MemberSelection& sel, const CommonOpts& opts, int m_count) {
  CommonOpts o = opts;
  o.order = std::max(o.order, m_count + 2);
  const ClassMember m = build_selected(sel, o);
  const LogCoeffs g = log_coeffs(m, m_count);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value(std::string("gamma"));
    w.key("alpha");
    w.value(m.tag.alpha);
    w.key("gamma");
    w.begin_array();
    for (const cplx& v : g.gamma) {
      w.begin_array();
      w.value(v.real());
      w.value(v.imag());
      w.end_array();
    }
    w.end_array();
    w.end_object();
    write_output(opts, w.str() + "\n");
  } else {
    std::string out;
    for (int n = 1; n <= g.count(); ++n) {
      if (n > 1) out += ", ";
      out += format_complex(g.at(n));
    }
    write_output(opts, out + "\n");
  }
  return 0;
}

int run_determinant(const MemberSelection& sel, const CommonOpts& opts, int q, int n,
                    bool is_hankel) {
  const int needed = is_hankel ? n + 2 * q - 2 : n + q - 1;
  CommonOpts o = opts;
  o.order = std::max(o.order, needed + 2);
  const ClassMember m = build_selected(sel, o);
  const LogCoeffs g = log_coeffs(m, needed);
  const DeterminantValue d = is_hankel ? hankel(g, q, n) : toeplitz(g, q, n);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value(std::string(is_hankel ? "hankel" : "toeplitz"));
    w.key("q");
    w.value(static_cast<long long>(q));
    w.key("n");
    w.value(static_cast<long long>(n));
    w.key("value");
    w.begin_array();
    w.value(d.value.real());
    w.value(d.value.imag());
    w.end_array();
    w.key("modulus");
    w.value(std::abs(d.value));
    w.end_object();
    write_output(opts, w.str() + "\n");
  } else {
    write_output(opts, format_complex(d.value) + "  |.| = " +
                           format_double(std::abs(d.value)) + "\n");
  }
  return 0;
}

int run_verify(const CommonOpts& opts, const std::string& claim_sel,
               const std::string& class_sel, int gamma_n,
               const std::string& alpha_grid_spec) {
  std::vector<BoundClaim> claims;
  const auto want_class = [&](ClassKind k) {
    return class_sel == "both" ||
           (class_sel == "starlike") == (k == ClassKind::StarlikeExp);
  };
  for (ClassKind kind : {ClassKind::StarlikeExp, ClassKind::ConvexExp}) {
    if (!want_class(kind)) continue;
    if (claim_sel == "gamma" || claim_sel == "all") {
      if (gamma_n != 0)
        claims.push_back(gamma_claim(kind, gamma_n));
      else
        for (int n = 1; n <= 4; ++n) claims.push_back(gamma_claim(kind, n));
    }
    if (claim_sel == "hankel21" || claim_sel == "all")
      claims.push_back(hankel_claim(kind));
    if (claim_sel == "toeplitz21" || claim_sel == "all")
      claims.push_back(toeplitz_claim(kind));
  }
  const std::vector<double> alphas = alpha_grid_spec.empty()
                                         ? std::vector<double>{opts.alpha}
                                         : parse_alpha_grid(alpha_grid_spec);
  for (double a : alphas)
    if (!(a > 0.0) || a > 1.0)
      throw CLI::ValidationError("--alpha", "alpha values must lie in (0,1]");

  // one cell per (claim, alpha); cell seeds derive from the master seed so the
  // fan-out is deterministic regardless of thread count
  struct Cell {
    std::size_t claim_idx, alpha_idx;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < claims.size(); ++i)
    for (std::size_t j = 0; j < alphas.size(); ++j) cells.push_back({i, j});
  std::vector<SearchReport> reports(cells.size());

  const int workers =
      std::min<int>(thread_cap(), static_cast<int>(cells.size()));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next.fetch_add(1); k < cells.size();
         k = next.fetch_add(1)) {
      const Cell& cell = cells[k];
      SplitMix64 mix(opts.seed + 0x51ed270b * (cell.claim_idx + 1) +
                     0x9e3779b9 * (cell.alpha_idx + 1));
      reports[k] = search_sup(claims[cell.claim_idx], alphas[cell.alpha_idx],
                              opts.budget, mix.next());
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  bool all_ok = true;
  std::ostringstream table;
  table << "claim       class     alpha    claimed        estimated_sup  "
           "witness        slack          status\n";
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    char line[256];
    std::snprintf(line, sizeof(line),
                  "%-11s %-9s %-8.4g %-14.8g %-14.8g %-14.8g %-14.6g %s\n",
                  r.claim.name().c_str(), r.claim.class_name().c_str(), r.alpha,
                  r.claimed, r.estimated_sup,
                  r.witness_value ? *r.witness_value : std::nan(""), r.slack,
                  r.ok() ? "ok" : "VIOLATED");
    table << line;
  }
  // keep stdout parseable when a serialized payload goes there
  const bool payload_on_stdout = opts.format != "text" && opts.out_path.empty();
  (payload_on_stdout ? std::cerr : std::cout) << table.str();

  if (opts.format == "csv")
    write_output(opts, report_to_csv(reports));
  else if (opts.format == "json" || !opts.out_path.empty())
    write_output(opts, report_to_json(reports));  // text + --out keeps a JSON copy
  return all_ok ? 0 : 1;
}

int run_battery(const CommonOpts& opts, double step, double tau_step) {
  if (step > 1.0 / 64.0)
    throw CLI::ValidationError("--step", "battery step must be <= 1/64");
  const auto checks = proof_inequality_battery(step, tau_step);
  const bool payload_on_stdout = opts.format != "text" && opts.out_path.empty();
  bool all_ok = true;
  for (const auto& c : checks) {
    all_ok = all_ok && c.pass;
    char line[512];
    std::snprintf(line, sizeof(line), "(%c) %-34s %-4s worst=%- .6g  %s\n", c.key,
                  c.name.c_str(), c.pass ? "pass" : "FAIL", c.worst,
                  c.detail.c_str());
    (payload_on_stdout ? std::cerr : std::cout) << line;
  }
  if (opts.format == "json" || !opts.out_path.empty())
    write_output(opts, battery_to_json(checks));
  return all_ok ? 0 : 1;
}

int run_lemmas(const CommonOpts& opts, long samples, long psi_samples, int grid_n) {
  const auto suites = run_lemma_suites(samples, opts.seed, psi_samples, grid_n);
  const bool payload_on_stdout = opts.format != "text" && opts.out_path.empty();
  bool all_ok = true;
  for (const auto& s : suites) {
    all_ok = all_ok && s.pass;
    char line[512];
    std::snprintf(line, sizeof(line),
                  "%-22s %-4s samples=%-7ld violations=%-5ld %s\n", s.name.c_str(),
                  s.pass ? "pass" : "FAIL", s.samples, s.violations,
                  s.detail.c_str());
    (payload_on_stdout ? std::cerr : std::cout) << line;
  }
  if (opts.format == "json" || !opts.out_path.empty())
    write_output(opts, suites_to_json(suites));
  return all_ok ? 0 : 1;
}

int run_figures(const CommonOpts& opts, const std::string& which) {
  std::string out;
  if (which == "spiral") {
    const double alphas[] = {0.25, 0.5, 0.75, 1.0};
    std::vector<std::string> header{"theta"};
    for (double a : alphas) {
      header.push_back("re_" + format_double(a));
      header.push_back("im_" + format_double(a));
    }
    out += csv_row(header);
    const int steps = 512;
    for (int k = 0; k <= steps; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / steps;
      std::vector<std::string> row{format_double(theta)};
      for (double a : alphas) {
        const cplx v = std::exp(a * std::polar(1.0, theta));
        row.push_back(format_double(v.real()));
        row.push_back(format_double(v.imag()));
      }
      out += csv_row(row);
    }
  } else if (which == "phi") {
    out += csv_row({"alpha", "phi1", "phi2"});
    const int steps = 256;
    for (int k = 0; k <= steps; ++k) {
      const double a = static_cast<double>(k) / steps;
      out += csv_row({format_double(a), format_double((2.0 - a) / 4.0),
                      format_double((a * a - 6.0 * a + 6.0) / 24.0)});
    }
  } else if (which == "psi1" || which == "xi") {
    out += csv_row({"tau1", "alpha", "value"});
    const int steps = 64;
    for (int i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) / steps;
      for (int j = 0; j <= steps; ++j) {
        const double a = static_cast<double>(j) / steps;
        const double v = which == "psi1" ? psi1_surface(t, a) : xi_surface(t, a);
        out += csv_row({format_double(t), format_double(a), format_double(v)});
      }
    }
  } else {
    throw CLI::ValidationError("--which", "unknown figure '" + which + "'");
  }
  write_output(opts, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponential starlike/convex class laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  app.add_option("--alpha", opts.alpha, "exponent scale in (0,1]");
  app.add_option("--order", opts.order, "truncation order")->check(CLI::Range(2, 64));
  app.add_option("--seed", opts.seed, "master RNG seed");
  app.add_option("--budget", opts.budget, "search evaluation budget");
  app.add_option("--format", opts.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opts.out_path, "output file (default stdout)");

  MemberSelection sel;
  auto* expand = app.add_subcommand("expand", "Taylor coefficients a_1..a_N");
  add_member_options(expand, sel);

  auto* gamma_cmd = app.add_subcommand("gamma", "logarithmic coefficients");
  int gamma_count = 4;
  add_member_options(gamma_cmd, sel);
  gamma_cmd->add_option("--m", gamma_count, "number of coefficients")
      ->check(CLI::Range(1, 32));

  int det_q = 2, det_n = 1;
  auto* hankel_cmd = app.add_subcommand("hankel", "Hankel determinant of gammas");
  add_member_options(hankel_cmd, sel);
  hankel_cmd->add_option("--q", det_q)->check(CLI::Range(1, 8));
  hankel_cmd->add_option("--n", det_n)->check(CLI::Range(1, 16));

  auto* toeplitz_cmd =
      app.add_subcommand("toeplitz", "Toeplitz determinant of gammas");
  add_member_options(toeplitz_cmd, sel);
  toeplitz_cmd->add_option("--q", det_q)->check(CLI::Range(1, 8));
  toeplitz_cmd->add_option("--n", det_n)->check(CLI::Range(1, 16));

  auto* verify_cmd = app.add_subcommand("verify", "search-based bound verification");
  std::string claim_sel = "all", class_sel = "both", alpha_grid_spec;
  int gamma_n = 0;
  verify_cmd->add_option("--claim", claim_sel, "gamma | hankel21 | toeplitz21 | all")
      ->check(CLI::IsMember({"gamma", "hankel21", "toeplitz21", "all"}));
  verify_cmd->add_option("--class", class_sel, "starlike | convex | both")
      ->check(CLI::IsMember({"starlike", "convex", "both"}));
  verify_cmd->add_option("--n", gamma_n, "gamma index (0 = all)")
      ->check(CLI::Range(0, 4));
  verify_cmd->add_option("--alpha-grid", alpha_grid_spec,
                         "start:stop:step (inclusive)");

  auto* battery_cmd =
      app.add_subcommand("battery", "proof-inequality battery over an alpha grid");
  double battery_step = 1.0 / 256.0, battery_tau_step = 1.0 / 512.0;
  battery_cmd->add_option("--step", battery_step, "alpha grid step (<= 1/64)");
  battery_cmd->add_option("--tau-step", battery_tau_step, "tau grid step");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "empirical lemma suites");
  long lemma_samples = 10000, psi_samples = 1000;
  int psi_grid = 256;
  lemmas_cmd->add_option("--samples", lemma_samples)->check(CLI::PositiveNumber);
  lemmas_cmd->add_option("--psi-samples", psi_samples)->check(CLI::PositiveNumber);
  lemmas_cmd->add_option("--grid-n", psi_grid)->check(CLI::Range(64, 4096));

  auto* figures_cmd = app.add_subcommand("figures", "CSV plot data");
  std::string which = "spiral";
  figures_cmd->add_option("--which", which, "spiral | phi | psi1 | xi")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*expand) return run_expand(sel, opts);
    if (*gamma_cmd) return run_gamma(sel, opts, gamma_count);
    if (*hankel_cmd) return run_determinant(sel, opts, det_q, det_n, true);
    if (*toeplitz_cmd) return run_determinant(sel, opts, det_q, det_n, false);
    if (*verify_cmd)
      return run_verify(opts, claim_sel, class_sel, gamma_n, alpha_grid_spec);
    if (*battery_cmd) return run_battery(opts, battery_step, battery_tau_step);
    if (*lemmas_cmd) return run_lemmas(opts, lemma_samples, psi_samples, psi_grid);
    if (*figures_cmd) return run_figures(opts, which);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
