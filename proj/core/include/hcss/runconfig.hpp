#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcss/cutoff.hpp"
#include "hcss/quadrature.hpp"
#include "hcss/rootdata.hpp"

namespace hcss {

// Complex literal "a+bi" / "a-bi" (spaces allowed), plain real "a", or pure
// imaginary "bi".
Complex parse_complex(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
// "lo:hi:n" -> n equally spaced values (n >= 1; n = 1 gives lo).
std::vector<double> parse_linear_range(std::string_view text);

// Flat key=value file; '#' starts a comment. Unknown keys are rejected by
// the consumer, not here.
std::map<std::string, std::string> parse_config_file(const std::string& path);

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string pair_spec = "u:1:0";
  std::vector<Complex> lambdas;
  std::vector<double> ts;
  std::string method = "series";
  CutoffSpec cutoff{};
  QuadratureSpec quad{1e-9, 1e-9, 4000};
  std::string out_path;            // empty = stdout
  OutputFormat format = OutputFormat::Csv;
  // gl11-only spectral data and group element.
  Complex mu{0.0};
  Complex nu{0.0};
  double h_plus = 0.0;
  double h_minus = 0.0;
  int threads = 0;                 // 0 = hardware, capped by HCSS_THREADS
};

struct ResultRow {
  std::string pair;
  std::string family;
  int p = 0;
  int q = 0;
  Complex lambda{0.0};
  double t = 0.0;
  std::string method;
  Complex value{0.0};
  double abs_err_est = 0.0;
  bool failed = false;
  std::string error;
};

// Fixed-format emission: 17 significant digits, '.' decimal separator,
// '\n' line endings, so identical configs give byte-identical files.
std::string csv_header();
std::string csv_row(const ResultRow& row);
std::string json_document(const std::vector<ResultRow>& rows);
std::string format_double(double v);
std::string format_complex(Complex v);

// Worker count: explicit request, else hardware concurrency, both capped by
// the HCSS_THREADS environment variable.
int resolve_threads(int requested);

// Runs fn(0..n-1) on a pool; results must be written into pre-sized slots so
// output order never depends on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace hcss
