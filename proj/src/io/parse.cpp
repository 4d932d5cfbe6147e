#include "horo/io/parse.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace horo::io {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x))
    throw ParseError("complex", "cannot parse '" + std::string(whole) + "'");
  return x;
}

// Coefficient of i: "" / "+" means 1, "-" means -1.
double parse_imag(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s.push_back(c);
  return s;
}

}  // namespace

Complex<double> parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("complex", "empty number");
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  const std::string_view v(s);
  if (v.back() == 'i') {
    const std::string_view body = v.substr(0, v.size() - 1);
    if (split == std::string::npos) return {0.0, parse_imag(body, text)};
    return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
  }
  if (split != std::string::npos) throw ParseError("complex", "imaginary part must end in 'i': '" + s + "'");
  return {parse_real(v, text), 0.0};
}

NonzeroSpinor<double> parse_spinor(std::string_view text) {
  const std::string s = strip_spaces(text);
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw ParseError("spinor", "expected 'xi,eta', got '" + s + "'");
  const Complex<double> xi = parse_complex(std::string_view(s).substr(0, comma));
  const Complex<double> eta = parse_complex(std::string_view(s).substr(comma + 1));
  if (xi == Complex<double>(0) && eta == Complex<double>(0)) throw ParseError("spinor", "spinor must be nonzero");
  return NonzeroSpinor<double>(xi, eta);
}

}  // namespace horo::io
