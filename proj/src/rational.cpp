#include "gpuniq/rational.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace gpuniq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es)) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), exponent);
    if (ec != std::errc() || exponent > 100000) {
      throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    }
    if (eneg) exponent = -exponent;
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpq_class q{mpz_class(digits, 10)};
  if (exponent > 0) q *= pow10(exponent);
  if (exponent < 0) q /= pow10(-exponent);
  if (negative) q = -q;
  return Rational(q);
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view nd = num;
    if (!nd.empty() && (nd.front() == '-' || nd.front() == '+')) nd.remove_prefix(1);
    if (!all_digits(nd) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
  }
  return parse_decimal(text);
}

double Rational::to_double() const {
  // get_d truncates toward zero; the nearest double is that value or its
  // successor away from zero.
  const double lo = q_.get_d();
  if (!std::isfinite(lo)) return lo;
  const double hi = std::nextafter(lo, q_ < 0 ? -HUGE_VAL : HUGE_VAL);
  if (!std::isfinite(hi)) return lo;
  const mpq_class err_lo = abs(q_ - from_double_exact(lo).q_);
  const mpq_class err_hi = abs(from_double_exact(hi).q_ - q_);
  if (err_lo < err_hi) return lo;
  if (err_hi < err_lo) return hi;
  const auto bits = std::bit_cast<std::uint64_t>(lo);
  return (bits & 1U) == 0 ? lo : hi;
}

Rational Rational::from_double_exact(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  return Rational(mpq_class(v));
}

Rational Rational::from_double_decimal(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::invalid_argument("cannot format double");
  return parse_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace gpuniq
