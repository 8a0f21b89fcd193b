#include "hcss/runconfig.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace hcss {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_double_strict(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty()) throw ParseError(std::string(what) + ": empty number");
  if (s.front() == '+') s.remove_prefix(1); // from_chars rejects a leading '+'
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError(std::string(what) + ": bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

} // namespace

Complex parse_complex(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact.push_back(c);
  if (compact.empty()) throw ParseError("complex: empty literal");

  // Split at the sign of the imaginary part (skip a leading sign).
  size_t split_pos = std::string::npos;
  for (size_t i = 1; i < compact.size(); ++i) {
    if (compact[i] == '+' || compact[i] == '-') {
      if (compact[i - 1] == 'e' || compact[i - 1] == 'E') continue; // exponent sign
      split_pos = i;
    }
  }
  if (compact.back() == 'i') {
    std::string imag_text = compact.substr(0, compact.size() - 1);
    if (split_pos == std::string::npos) {
      // Pure imaginary: "bi", "-bi", "i".
      if (imag_text.empty() || imag_text == "+" || imag_text == "-") imag_text += "1";
      return Complex(0.0, parse_double_strict(imag_text, "complex"));
    }
    std::string re = compact.substr(0, split_pos);
    std::string im = compact.substr(split_pos, compact.size() - 1 - split_pos);
    if (im == "+" || im == "-") im += "1";
    return Complex(parse_double_strict(re, "complex"), parse_double_strict(im, "complex"));
  }
  return Complex(parse_double_strict(compact, "complex"), 0.0);
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (auto part : split(text, ','))
    if (!trim(part).empty()) out.push_back(parse_complex(part));
  if (out.empty()) throw ParseError("complex list: empty");
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ','))
    if (!trim(part).empty()) out.push_back(parse_double_strict(part, "list"));
  if (out.empty()) throw ParseError("list: empty");
  return out;
}

std::vector<double> parse_linear_range(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() != 3) throw ParseError("range: expected 'lo:hi:n'");
  const double lo = parse_double_strict(parts[0], "range");
  const double hi = parse_double_strict(parts[1], "range");
  const double n_raw = parse_double_strict(parts[2], "range");
  const int n = static_cast<int>(n_raw);
  if (n < 1 || n != n_raw) throw ParseError("range: n must be a positive integer");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config: line " + std::to_string(lineno) + ": expected key=value");
    std::string key(trim(s.substr(0, eq)));
    std::string value(trim(s.substr(eq + 1)));
    if (key.empty()) throw ParseError("config: line " + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(Complex v) {
  std::string s = format_double(v.real());
  if (v.imag() >= 0.0 || std::isnan(v.imag()))
    s += "+" + format_double(v.imag()) + "i";
  else
    s += "-" + format_double(-v.imag()) + "i";
  return s;
}

std::string csv_header() {
  return "pair,family,p,q,lambda_re,lambda_im,t,method,value_re,value_im,abs_err_est\n";
}

std::string csv_row(const ResultRow& row) {
  std::string s;
  s += row.pair;
  s += ',';
  s += row.family;
  s += ',';
  s += std::to_string(row.p);
  s += ',';
  s += std::to_string(row.q);
  s += ',';
  s += format_double(row.lambda.real());
  s += ',';
  s += format_double(row.lambda.imag());
  s += ',';
  s += format_double(row.t);
  s += ',';
  s += row.method;
  s += ',';
  s += format_double(row.value.real());
  s += ',';
  s += format_double(row.value.imag());
  s += ',';
  s += format_double(row.abs_err_est);
  s += '\n';
  return s;
}

std::string json_document(const std::vector<ResultRow>& rows) {
  std::string s = "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const ResultRow& r = rows[i];
    s += "  {\"pair\":\"" + r.pair + "\",\"family\":\"" + r.family + "\"";
    s += ",\"p\":" + std::to_string(r.p) + ",\"q\":" + std::to_string(r.q);
    s += ",\"lambda_re\":" + format_double(r.lambda.real());
    s += ",\"lambda_im\":" + format_double(r.lambda.imag());
    s += ",\"t\":" + format_double(r.t);
    s += ",\"method\":\"" + r.method + "\"";
    s += ",\"value_re\":" + format_double(r.value.real());
    s += ",\"value_im\":" + format_double(r.value.imag());
    s += ",\"abs_err_est\":" + format_double(r.abs_err_est);
    if (r.failed) s += ",\"error\":\"" + r.error + "\"";
    s += "}";
    if (i + 1 < rows.size()) s += ",";
    s += "\n";
  }
  s += "]\n";
  return s;
}

int resolve_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("HCSS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  pool.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

} // namespace hcss
