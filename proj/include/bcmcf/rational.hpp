#pragma once

// Exact rational arithmetic on top of GMP. mpq_class keeps every value in
// lowest terms with a positive denominator once canonicalized; all helpers
// here return canonical values.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcmcf {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational MakeRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  return MakeRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline Rational ToRational(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Accepts "7", "-3/4" and plain decimals such as "0.25" or "-1.5e-3".
inline Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      return MakeRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    }
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      exponent = std::stol(s.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    std::string digits;
    bool seen_dot = false;
    for (char ch : mantissa) {
      if (ch == '.' && !seen_dot) {
        seen_dot = true;
        continue;
      }
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit");
      digits.push_back(ch);
      if (seen_dot) --exponent;
    }
    if (digits.empty()) throw std::invalid_argument("no digits");
    BigInt num(digits, 10);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(num * scale) : MakeRational(num, scale);
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
}

// "num/den", or just "num" for integers.
inline std::string ToString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Fixed-point rendering, rounded toward zero. Used for human-readable output
// only; exact values always travel as ToString().
inline std::string ToDecimal(const Rational& q, int digits = 9) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt abs_num = abs(q.get_num());
  BigInt scaled = abs_num * scale / q.get_den();
  std::string body = scaled.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  if (q < 0) out.insert(0, "-");
  return out;
}

inline BigInt Ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt Floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Exact value of a finite binary64.
inline Rational FromDouble(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  Rational q(value);
  q.canonicalize();
  return q;
}

// Nearest multiple of 1/resolution not above value.
inline Rational SnapDown(double value, long resolution) {
  BigInt k = Floor(FromDouble(value) * resolution);
  return MakeRational(k, BigInt(resolution));
}

inline double ToDouble(const Rational& q) { return q.get_d(); }

inline std::int64_t ToInt64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits");
  return z.get_si();
}

}  // namespace bcmcf
