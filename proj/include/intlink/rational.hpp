#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace intlink {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }

/// Parses a decimal integer or "p/q" with q > 0. Leading '+'/'-' allowed on
/// the numerator only. Returns nullopt on anything else.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
  }
  std::string_view body = num;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (!digits(body)) return std::nullopt;

  mpz_class n(std::string(body), 10);
  if (num.front() == '-') n = -n;
  mpz_class d = 1;
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) return std::nullopt;
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// n/d in lowest terms. GMP does not reduce the two-argument constructor.
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace intlink
