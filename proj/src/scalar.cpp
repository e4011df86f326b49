#include "gauss_hodge/scalar.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace gauss_hodge {

std::string format_real(const Rational& x) { return x.get_str(); }

std::string format_real(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf.data(), end);
}

namespace {

// Splits a decimal literal into an exact rational.
Rational parse_decimal(std::string_view text) {
  std::string s(text);
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stoi(s.substr(e + 1));
    s.resize(e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  std::string digits;
  int fraction_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed number: " + std::string(text));
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_point) ++fraction_digits;
    } else {
      throw std::invalid_argument("malformed number: " + std::string(text));
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed number: " + std::string(text));
  mpz_class num(digits, 10);
  mpz_class scale = 1;
  exponent -= fraction_digits;
  mpz_class ten = 10;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::abs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(text.substr(0, slash)));
    Rational den = parse_decimal(trim(text.substr(slash + 1)));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return num / den;
  }
  return parse_decimal(text);
}

}  // namespace

template <>
Rational parse_real<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
double parse_real<double>(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
  double value = 0;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed number: " + std::string(text));
  return value;
}

}  // namespace gauss_hodge
