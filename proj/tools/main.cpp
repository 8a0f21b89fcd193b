// hcss: Harish-Chandra c-functions and spherical superfunctions for the
// rank-one symmetric superspace families, from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "hcss/cfunc.hpp"
#include "hcss/checks.hpp"
#include "hcss/hcseries.hpp"
#include "hcss/oracle.hpp"
#include "hcss/radialode.hpp"
#include "hcss/runconfig.hpp"

using namespace hcss;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvalError = 2;
constexpr int kExitParseError = 64;

struct CommonArgs {
  std::string pair = "u:1:0";
  std::string lambda_text;
  std::string lambda_re_range, lambda_im_range;
  std::string t_text = "1.0";
  std::string method = "series";
  std::string out_path;
  std::string format = "csv";
  std::string config_path;
  std::string mu_text = "1", nu_text = "0";
  double c_plus = 0.0, c_minus = 1.0;
  std::string h_text = "0,0.5";
  double quad_tol = 1e-9;
  int threads = 0;
};

// Flat key=value config merged under explicit flags (flags win).
void merge_config(const CLI::App& cmd, CommonArgs& args) {
  if (args.config_path.empty()) return;
  const auto kv = parse_config_file(args.config_path);
  auto pull = [&](const char* flag, const char* key, auto& slot) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    if (opt != nullptr && opt->count() > 0) return; // flag wins
    if constexpr (std::is_same_v<std::decay_t<decltype(slot)>, double>)
      slot = std::stod(it->second);
    else if constexpr (std::is_same_v<std::decay_t<decltype(slot)>, int>)
      slot = std::stoi(it->second);
    else
      slot = it->second;
  };
  pull("--pair", "pair", args.pair);
  pull("--lambda", "lambda", args.lambda_text);
  pull("--lambda-re", "lambda_re", args.lambda_re_range);
  pull("--lambda-im", "lambda_im", args.lambda_im_range);
  pull("--t", "t", args.t_text);
  pull("--method", "method", args.method);
  pull("--out", "out", args.out_path);
  pull("--format", "format", args.format);
  pull("--mu", "mu", args.mu_text);
  pull("--nu", "nu", args.nu_text);
  pull("--cplus", "cplus", args.c_plus);
  pull("--cminus", "cminus", args.c_minus);
  pull("--h", "h", args.h_text);
  pull("--quad-tol", "quad_tol", args.quad_tol);
  pull("--threads", "threads", args.threads);
}

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_t) {
  cmd->add_option("--pair", args.pair, "Pair spec: u:p:q, osp:p:q, or gl11");
  cmd->add_option("--lambda", args.lambda_text, "Comma-separated complex list, e.g. 1.5+0.3i,2");
  cmd->add_option("--lambda-re", args.lambda_re_range, "Grid lo:hi:n for Re lambda");
  cmd->add_option("--lambda-im", args.lambda_im_range, "Grid lo:hi:n for Im lambda");
  if (with_t) cmd->add_option("--t", args.t_text, "Comma-separated t list");
  cmd->add_option("--out", args.out_path, "Output path (default: stdout)");
  cmd->add_option("--format", args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", args.config_path, "key=value config file merged under flags");
  cmd->add_option("--mu", args.mu_text, "gl11: lambda(h+)");
  cmd->add_option("--nu", args.nu_text, "gl11: lambda(h-)");
  cmd->add_option("--cplus", args.c_plus, "gl11: h0 component along h+");
  cmd->add_option("--cminus", args.c_minus, "gl11: h0 component along h-");
  cmd->add_option("--h", args.h_text, "gl11: group element a_plus,a_minus");
  cmd->add_option("--quad-tol", args.quad_tol, "Quadrature target tolerance");
  cmd->add_option("--threads", args.threads, "Worker threads (HCSS_THREADS caps)");
}

std::vector<Complex> resolve_lambdas(const CommonArgs& args) {
  if (!args.lambda_text.empty()) return parse_complex_list(args.lambda_text);
  if (!args.lambda_re_range.empty()) {
    std::vector<double> res = parse_linear_range(args.lambda_re_range);
    std::vector<double> ims = args.lambda_im_range.empty()
                                  ? std::vector<double>{0.0}
                                  : parse_linear_range(args.lambda_im_range);
    std::vector<Complex> out;
    for (double re : res)
      for (double im : ims) out.emplace_back(re, im);
    return out;
  }
  throw ParseError("need --lambda or --lambda-re");
}

void emit_rows(const CommonArgs& args, const std::vector<ResultRow>& rows) {
  std::string text;
  if (args.format == "json") {
    text = json_document(rows);
  } else {
    text = csv_header();
    for (const auto& row : rows) text += csv_row(row);
  }
  if (args.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file '" + args.out_path + "'");
    out << text;
  }
}

int finish_rows(const CommonArgs& args, std::vector<ResultRow>& rows) {
  bool any_failed = false;
  for (const auto& row : rows) {
    if (row.failed) {
      any_failed = true;
      std::fprintf(stderr, "error: %s lambda=%s t=%g method=%s: %s\n", row.pair.c_str(),
                   format_complex(row.lambda).c_str(), row.t, row.method.c_str(),
                   row.error.c_str());
    }
  }
  emit_rows(args, rows);
  return any_failed ? kExitEvalError : kExitOk;
}

ResultRow base_row(const SymmetricPair& pair, Complex lambda, double t,
                   const std::string& method) {
  ResultRow row;
  row.pair = pair.spec_string();
  row.family = pair.family_name();
  row.p = pair.p();
  row.q = pair.q();
  row.lambda = lambda;
  row.t = t;
  row.method = method;
  return row;
}

int cmd_pair_info(const std::string& pair_text) {
  const SymmetricPair pair = parse_pair(pair_text);
  const Rational rho = pair.rho();
  std::printf("pair:          %s\n", pair.spec_string().c_str());
  std::printf("family:        %s\n", pair.family_name().c_str());
  std::printf("p, q:          %d, %d\n", pair.p(), pair.q());
  std::printf("m_alpha:       %d\n", pair.m_alpha());
  std::printf("m_2alpha:      %d\n", pair.m_2alpha());
  std::printf("rho:           %g (exact %ld/%ld)\n", rho.value(), rho.num, rho.den);
  std::printf("weyl order:    %d\n", pair.weyl_order());
  std::printf("finite series: %s\n", pair.finite_series() ? "yes" : "no");
  std::string c_methods = "formula, limit";
  std::string phi_methods = "series, integral";
  if (pair.family() == Family::GL11) {
    c_methods = "formula (direction trichotomy), limit";
    phi_methods = "closed, integral";
  } else {
    if (pair.family() == Family::OrthoSymplectic || pair.m_alpha() <= 0)
      c_methods += ", integral";
    if (pair.finite_series()) phi_methods += ", jacobi";
    if (pair.family() == Family::OrthoSymplectic && pair.p() == 0) phi_methods += ", closed";
  }
  std::printf("c methods:     %s\n", c_methods.c_str());
  std::printf("phi methods:   %s\n", phi_methods.c_str());
  return kExitOk;
}

int cmd_c_eval(const CommonArgs& args) {
  QuadratureSpec quad{args.quad_tol, args.quad_tol, 4000};
  std::vector<ResultRow> rows;

  if (args.pair == "gl11") {
    const GL11Param par = make_gl11_param(parse_complex(args.mu_text),
                                          parse_complex(args.nu_text), args.c_plus,
                                          args.c_minus);
    ResultRow row;
    row.pair = "gl11";
    row.family = "gl11";
    row.p = row.q = 1;
    row.lambda = par.mu;
    row.method = args.method;
    try {
      if (args.method == "formula") {
        const CGl11Result c = c_gl11(par);
        if (!c.exists) throw DomainError("c does not exist for c_minus < 0");
        row.value = c.value;
      } else if (args.method == "limit") {
        const LimitEstimate est = c_limit_oracle_gl11(par);
        row.value = est.value;
        row.abs_err_est = est.residual;
      } else {
        throw ParseError("gl11 c methods: formula, limit");
      }
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
      row.value = Complex(std::nan(""), std::nan(""));
    }
    rows.push_back(row);
    return finish_rows(args, rows);
  }

  const SymmetricPair pair = parse_pair(args.pair);
  const std::vector<Complex> lambdas = resolve_lambdas(args);
  rows.resize(lambdas.size());
  parallel_for(lambdas.size(), args.threads, [&](std::size_t i) {
    ResultRow row = base_row(pair, lambdas[i], 0.0, args.method);
    try {
      if (args.method == "formula") {
        row.value = c_formula(pair, lambdas[i]);
      } else if (args.method == "integral") {
        if (pair.family() == Family::Unitary)
          row.value = c_integral_unitary(pair, lambdas[i], quad);
        else
          row.value = c_integral_osp(pair, lambdas[i], CutoffSpec{}, quad);
        row.abs_err_est = quad.abs_tol;
      } else if (args.method == "limit") {
        OracleOptions opt;
        opt.quad = quad;
        const LimitEstimate est = c_limit_oracle(pair, lambdas[i], {}, opt);
        row.value = est.value;
        row.abs_err_est = est.residual;
      } else {
        throw ParseError("c methods: formula, integral, limit");
      }
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
      row.value = Complex(std::nan(""), std::nan(""));
    }
    rows[i] = row;
  });
  return finish_rows(args, rows);
}

int cmd_phi_eval(const CommonArgs& args) {
  QuadratureSpec quad{args.quad_tol, args.quad_tol, 4000};
  std::vector<ResultRow> rows;

  if (args.pair == "gl11") {
    const GL11Param par = make_gl11_param(parse_complex(args.mu_text),
                                          parse_complex(args.nu_text), args.c_plus,
                                          args.c_minus);
    const std::vector<double> h = parse_double_list(args.h_text);
    if (h.size() != 2) throw ParseError("--h expects a_plus,a_minus");
    ResultRow row;
    row.pair = "gl11";
    row.family = "gl11";
    row.p = row.q = 1;
    row.lambda = par.mu;
    row.t = h[1];
    row.method = args.method;
    try {
      if (args.method == "closed")
        row.value = phi_gl11(par, h[0], h[1]);
      else if (args.method == "integral")
        row.value = phi_integral_gl11(par, h[0], h[1]);
      else
        throw ParseError("gl11 phi methods: closed, integral");
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
      row.value = Complex(std::nan(""), std::nan(""));
    }
    rows.push_back(row);
    return finish_rows(args, rows);
  }

  const SymmetricPair pair = parse_pair(args.pair);
  const std::vector<Complex> lambdas = resolve_lambdas(args);
  const std::vector<double> ts = parse_double_list(args.t_text);
  rows.resize(lambdas.size() * ts.size());
  parallel_for(rows.size(), args.threads, [&](std::size_t idx) {
    const Complex lambda = lambdas[idx / ts.size()];
    const double t = ts[idx % ts.size()];
    ResultRow row = base_row(pair, lambda, t, args.method);
    try {
      if (args.method == "series") {
        row.value = phi_spherical(pair, lambda, t);
        row.abs_err_est = 1e-12 * std::abs(row.value);
      } else if (args.method == "jacobi") {
        row.value = phi_jacobi(pair, lambda, t);
      } else if (args.method == "closed") {
        if (!(pair.family() == Family::OrthoSymplectic && pair.p() == 0))
          throw DomainError("closed form: osp with p = 0 (or gl11) only");
        row.value = phi_osp_p0(pair.q(), lambda, t);
      } else if (args.method == "integral") {
        OracleOptions opt;
        opt.quad = quad;
        row.value = phi_integral(pair, lambda, t, opt);
        row.abs_err_est = quad.abs_tol * std::exp(t * (lambda.real() - pair.rho_d()));
      } else {
        throw ParseError("phi methods: series, jacobi, closed, integral");
      }
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
      row.value = Complex(std::nan(""), std::nan(""));
    }
    rows[idx] = row;
  });
  return finish_rows(args, rows);
}

int cmd_verify(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = verify_suite_names();
  else
    suites.push_back(suite);
  int failures = 0;
  for (const auto& name : suites) {
    const auto results = run_verify_suite(name);
    for (const auto& check : results) {
      if (!check.passed) ++failures;
      std::printf("[%s] %s: %s (observed %.3e, bound %.1e)%s%s\n",
                  check.passed ? "PASS" : "FAIL", name.c_str(), check.name.c_str(),
                  check.observed, check.bound, check.note.empty() ? "" : " ",
                  check.note.c_str());
    }
  }
  if (failures > 0) std::printf("%d check(s) failed\n", failures);
  return failures == 0 ? kExitOk : 1;
}

int cmd_table(const CommonArgs& args_in) {
  CommonArgs args = args_in;
  if (args.out_path.empty()) args.out_path = "golden.csv";
  std::vector<ResultRow> rows;

  const std::vector<std::string> pair_specs = {"u:1:0",   "u:2:0",   "u:1:1",   "u:0:1",
                                               "u:0:2",   "osp:3:0", "osp:2:1", "osp:1:1",
                                               "osp:0:1", "osp:0:2", "osp:2:2"};
  const std::vector<Complex> c_lambdas = {Complex(0.9), Complex(1.3), Complex(2.1),
                                          Complex(2.7, 0.4)};
  const std::vector<Complex> phi_lambdas = {Complex(1.3), Complex(2.7, 0.4)};
  const std::vector<double> ts = {0.7, 1.3};

  for (const auto& spec : pair_specs) {
    const SymmetricPair pair = parse_pair(spec);
    for (Complex lambda : c_lambdas) {
      ResultRow row = base_row(pair, lambda, 0.0, "formula");
      row.value = c_formula(pair, lambda);
      rows.push_back(row);
    }
    for (Complex lambda : phi_lambdas) {
      for (double t : ts) {
        ResultRow row = base_row(pair, lambda, t, "series");
        row.value = phi_spherical(pair, lambda, t);
        rows.push_back(row);
        if (pair.finite_series()) {
          ResultRow jrow = base_row(pair, lambda, t, "jacobi");
          jrow.value = phi_jacobi(pair, lambda, t);
          rows.push_back(jrow);
        }
        if (pair.family() == Family::OrthoSymplectic && pair.p() == 0) {
          ResultRow crow = base_row(pair, lambda, t, "closed");
          crow.value = phi_osp_p0(pair.q(), lambda, t);
          rows.push_back(crow);
        }
      }
    }
  }
  // gl(1|1) reference rows.
  const GL11Param par = make_gl11_param(Complex(1.5), Complex(0.25), 0.0, 1.0);
  for (double am : ts) {
    ResultRow row;
    row.pair = "gl11";
    row.family = "gl11";
    row.p = row.q = 1;
    row.lambda = par.mu;
    row.t = am;
    row.method = "closed";
    row.value = phi_gl11(par, 0.4, am);
    rows.push_back(row);
  }
  emit_rows(args, rows);
  std::printf("wrote %zu golden rows to %s\n", rows.size(), args.out_path.c_str());
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harish-Chandra c-functions and spherical superfunctions (rank one)"};
  app.require_subcommand(1);

  // pair info
  auto* pair_cmd = app.add_subcommand("pair", "Pair catalog");
  std::string pair_info_spec = "u:1:0";
  auto* info_cmd = pair_cmd->add_subcommand("info", "Show multiplicities, rho, Weyl order");
  info_cmd->add_option("spec", pair_info_spec, "Pair spec, e.g. osp:2:1")->required();

  // c eval
  auto* c_cmd = app.add_subcommand("c", "Harish-Chandra c-function");
  CommonArgs c_args;
  auto* c_eval = c_cmd->add_subcommand("eval", "Evaluate c(lambda)");
  c_args.method = "formula";
  add_common_options(c_eval, c_args, /*with_t=*/false);
  c_eval->add_option("--method", c_args.method, "formula | integral | limit")
      ->check(CLI::IsMember({"formula", "integral", "limit"}));

  // phi eval
  auto* phi_cmd = app.add_subcommand("phi", "Spherical superfunctions");
  CommonArgs phi_args;
  auto* phi_eval = phi_cmd->add_subcommand("eval", "Evaluate phi_lambda(e^{t h0})");
  add_common_options(phi_eval, phi_args, /*with_t=*/true);
  phi_eval->add_option("--method", phi_args.method, "series | jacobi | closed | integral")
      ->check(CLI::IsMember({"series", "jacobi", "closed", "integral"}));

  // scan
  CommonArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Lambda x t grid sweep");
  add_common_options(scan_cmd, scan_args, /*with_t=*/true);
  scan_cmd->add_option("--method", scan_args.method, "series | jacobi | closed | integral")
      ->check(CLI::IsMember({"series", "jacobi", "closed", "integral"}));

  // verify
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite,
                         "localization | cfunc | series | jacobi | gl11 | ode | symmetry | "
                         "cutoff | all");

  // table
  CommonArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Regenerate the golden value table");
  table_cmd->add_option("--out", table_args.out_path, "Output CSV (default golden.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (info_cmd->parsed()) return cmd_pair_info(pair_info_spec);
    if (c_eval->parsed()) {
      merge_config(*c_eval, c_args);
      return cmd_c_eval(c_args);
    }
    if (phi_eval->parsed()) {
      merge_config(*phi_eval, phi_args);
      return cmd_phi_eval(phi_args);
    }
    if (scan_cmd->parsed()) {
      merge_config(*scan_cmd, scan_args);
      return cmd_phi_eval(scan_args);
    }
    if (verify_cmd->parsed()) return cmd_verify(suite);
    if (table_cmd->parsed()) return cmd_table(table_args);
    std::fprintf(stderr, "no subcommand given\n");
    return kExitParseError;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParseError;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitEvalError;
  }
}
