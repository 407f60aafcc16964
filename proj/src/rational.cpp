#include "rbsep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rbsep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view token) {
  if (token.empty()) return std::nullopt;
  bool negative = false;
  if (token.front() == '+' || token.front() == '-') {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token.empty()) return std::nullopt;

  Rational value;
  auto slash = token.find('/');
  auto dot = token.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = token.substr(0, slash);
    std::string_view den = token.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(BigInt{std::string(num)}, d);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = token.substr(0, dot);
    std::string_view fp = token.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    if (!fp.empty() && !all_digits(fp)) return std::nullopt;
    BigInt intpart = ip.empty() ? BigInt(0) : BigInt{std::string(ip)};
    BigInt scale = 1;
    BigInt frac = 0;
    for (char c : fp) {
      frac = frac * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(intpart * scale + frac, scale);
  } else {
    if (!all_digits(token)) return std::nullopt;
    value = Rational(BigInt{std::string(token)});
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt floor_to_int(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt ceil_to_int(const Rational& r) { return -floor_to_int(-r); }

Rational pow_rational(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("pow_rational: zero base with negative exponent");
    return pow_rational(Rational(1) / base, -exp);
  }
  Rational result(1);
  Rational acc = base;
  unsigned e = static_cast<unsigned>(exp);
  while (e > 0) {
    if (e & 1u) result *= acc;
    acc *= acc;
    e >>= 1;
  }
  return result;
}

}  // namespace rbsep
