#include "gridcover/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "gridcover/error.hpp"

namespace gridcover {

double to_double(const Rational& r) {
  auto num = r.numerator().convert_to<long double>();
  auto den = r.denominator().convert_to<long double>();
  return static_cast<double>(num / den);
}

std::int64_t floor_to_int(const Rational& r) {
  Integer q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) q -= 1;
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_to_int(const Rational& r) {
  return -floor_to_int(-r);
}

std::string to_fraction_string(const Rational& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorCode::parse, "not a rational number: '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) bad_number(whole);
  Integer value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(whole);
    value = value * 10 + (c - '0');
  }
  return value;
}

Integer pow10(int e) {
  Integer v = 1;
  for (int i = 0; i < e; ++i) v *= 10;
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(whole);

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  try {
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      Integer den = parse_integer(text.substr(slash + 1), whole);
      if (den == 0) bad_number(whole);
      value = Rational(parse_integer(text.substr(0, slash), whole), den);
    } else {
      int exponent = 0;
      if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
          exp_negative = exp_text.front() == '-';
          exp_text.remove_prefix(1);
        }
        Integer magnitude = parse_integer(exp_text, whole);
        if (magnitude > 30) bad_number(whole);
        exponent = magnitude.convert_to<int>() * (exp_negative ? -1 : 1);
        text = text.substr(0, e);
      }
      std::string digits;
      int fraction_digits = 0;
      if (auto dot = text.find('.'); dot != std::string_view::npos) {
        digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
        fraction_digits = static_cast<int>(text.size() - dot - 1);
        if (dot == 0 && fraction_digits == 0) bad_number(whole);
      } else {
        digits = std::string(text);
      }
      if (digits.size() > 30) bad_number(whole);
      Integer mantissa = parse_integer(digits, whole);
      int scale = exponent - fraction_digits;
      value = scale >= 0 ? Rational(mantissa * pow10(scale)) : Rational(mantissa, pow10(-scale));
    }
    return negative ? -value : value;
  } catch (const std::overflow_error&) {
    bad_number(whole);
  }
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) fail(ErrorCode::domain, "non-finite value has no rational form");
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  if (exponent > 60 || exponent < -120) fail(ErrorCode::domain, "value out of exact range");
  Integer num = scaled;
  if (exponent >= 0) return Rational(num << exponent);
  return Rational(num, Integer(1) << -exponent);
}

Rational quantize_down(double value, int bits) {
  double scaled = std::floor(std::ldexp(value, bits));
  if (!std::isfinite(scaled) || std::fabs(scaled) > 9.0e15) fail(ErrorCode::domain, "value out of quantization range");
  return Rational(Integer(static_cast<std::int64_t>(scaled)), Integer(1) << bits);
}

}  // namespace gridcover
