#include "sliceq/series_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "sliceq/errors.hpp"

namespace sliceq {

namespace {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) out.push_back(s.substr(start, pos - start));
  }
  return out;
}

double parse_double(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw ParseError(line, "not a finite number: '" + std::string(tok) + "'");
  }
  return v;
}

std::optional<std::size_t> parse_index(std::string_view tok) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

bool is_blank(std::string_view s) { return split_ws(s).empty(); }

}  // namespace

std::string format_quaternion(const Quaternion& q) {
  return format_double(q.x0) + ' ' + format_double(q.x1) + ' ' + format_double(q.x2) + ' ' +
         format_double(q.x3);
}

Quaternion parse_quaternion(std::string_view text, std::size_t line) {
  const auto toks = split_ws(text);
  if (toks.size() != 4) {
    throw ParseError(line, "expected 4 quaternion components, got " + std::to_string(toks.size()));
  }
  return {parse_double(toks[0], line), parse_double(toks[1], line), parse_double(toks[2], line),
          parse_double(toks[3], line)};
}

void write_series(std::ostream& os, const SliceSeries& f) {
  os << "slice-series v1 N=" << f.degree() << '\n';
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    os << n << ' ' << format_quaternion(f[n]) << '\n';
  }
}

SliceSeries read_series(std::istream& is) {
  std::string raw;
  std::size_t line = 0;

  std::optional<std::size_t> degree;
  while (std::getline(is, raw)) {
    ++line;
    if (is_blank(raw)) continue;
    const auto toks = split_ws(raw);
    constexpr std::string_view kPrefix = "N=";
    if (toks.size() != 3 || toks[0] != "slice-series" || toks[1] != "v1" || !toks[2].starts_with(kPrefix)) {
      throw ParseError(line, "expected header 'slice-series v1 N=<deg>'");
    }
    degree = parse_index(toks[2].substr(kPrefix.size()));
    if (!degree) throw ParseError(line, "malformed degree in header");
    break;
  }
  if (!degree) throw ParseError(line + 1, "missing header 'slice-series v1 N=<deg>'");

  std::vector<std::optional<Quaternion>> coeffs(*degree + 1);
  while (std::getline(is, raw)) {
    ++line;
    if (is_blank(raw)) continue;
    const auto toks = split_ws(raw);
    if (toks.size() != 5) {
      throw ParseError(line, "expected '<n> <x0> <x1> <x2> <x3>'");
    }
    const auto n = parse_index(toks[0]);
    if (!n) throw ParseError(line, "malformed degree '" + std::string(toks[0]) + "'");
    if (*n > *degree) {
      throw ParseError(line, "degree " + std::to_string(*n) + " exceeds N=" + std::to_string(*degree));
    }
    if (coeffs[*n]) throw ParseError(line, "duplicate degree " + std::to_string(*n));
    coeffs[*n] = Quaternion(parse_double(toks[1], line), parse_double(toks[2], line),
                            parse_double(toks[3], line), parse_double(toks[4], line));
  }

  std::vector<Quaternion> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!coeffs[n]) throw ParseError(line + 1, "missing degree " + std::to_string(n));
    out.push_back(*coeffs[n]);
  }
  return SliceSeries(std::move(out));
}

SliceSeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open series file " + path.string());
  return read_series(in);
}

void save_series(const std::filesystem::path& path, const SliceSeries& f) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write series file " + path.string());
  write_series(out, f);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace sliceq
