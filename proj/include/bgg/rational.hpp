#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace bgg {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon as
/// it fits. The representation is always canonical (gcd 1, positive
/// denominator), so equality is structural.
class Rational {
public:
  Rational() = default;
  Rational(int v) : num_(v) {}
  Rational(long v) : num_(v) {}
  Rational(long long v) : num_(v) {}
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Numerator/denominator; throws if they do not fit in 64 bits.
  std::int64_t num() const;
  std::int64_t den() const;
  /// Throws unless the value is an integer fitting in 64 bits.
  std::int64_t to_int() const;

  mpq_class to_mpq() const;
  std::string str() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// this += a * b, the inner-loop operation of elimination.
  void add_product(const Rational& a, const Rational& b);

private:
  void assign_big(mpq_class q);
  void normalize_small();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bgg
