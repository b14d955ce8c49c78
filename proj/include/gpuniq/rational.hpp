#ifndef GPUNIQ_RATIONAL_HPP
#define GPUNIQ_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gpuniq {

// Exact rational scalar. Always canonical (gcd(num, den) = 1, den > 0).
//
// Thin value wrapper over mpq_class that returns concrete Rationals from every
// operator, so it can be used as an Eigen scalar without mixing two expression
// template systems.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(mpz_class(std::to_string(v), 10)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "p", "p/q", "-p/q", decimals "0.25", "-1.5e-3".
  static Rational parse(std::string_view text);
  // Exact value of a binary double.
  static Rational from_double_exact(double v);
  // Shortest decimal that round-trips to v, read exactly (0.1 -> 1/10).
  static Rational from_double_decimal(double v);

  const mpq_class& gmp() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const;  // nearest double, ties to even
  std::string str() const;  // "p" or "p/q"

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);

}  // namespace gpuniq

namespace Eigen {

template <>
struct NumTraits<gpuniq::Rational> : GenericNumTraits<gpuniq::Rational> {
  using Real = gpuniq::Rational;
  using NonInteger = gpuniq::Rational;
  using Nested = gpuniq::Rational;
  using Literal = gpuniq::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  static inline Real highest() = delete;
  static inline Real lowest() = delete;
};

}  // namespace Eigen

#endif  // GPUNIQ_RATIONAL_HPP
