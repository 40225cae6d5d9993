#include "bgg/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bgg {
namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = -kMax;  // keep INT64_MIN out so negation is always safe

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) { return z >= mpz_class(-static_cast<long>(kMax)) && z <= mpz_class(static_cast<long>(kMax)); }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > kMax || n < kMin || d > kMax) {
    mpq_class q(to_mpz(n), to_mpz(d));
    assign_big(std::move(q));
  } else {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    if (big_)
      *big_ = *o.big_;
    else
      big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_big(mpq_class q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_)
    *big_ = std::move(q);
  else
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text, 10);
      return Rational(mpq_class(n));
    }
    mpz_class n(text.substr(0, slash), 10);
    mpz_class d(text.substr(slash + 1), 10);
    if (d == 0) throw std::domain_error("zero denominator");
    return Rational(mpq_class(n, d));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::int64_t Rational::num() const {
  if (big_) throw std::overflow_error("Rational::num: value does not fit in 64 bits");
  return num_;
}

std::int64_t Rational::den() const {
  if (big_) throw std::overflow_error("Rational::den: value does not fit in 64 bits");
  return den_;
}

std::int64_t Rational::to_int() const {
  if (big_ || den_ != 1) throw std::domain_error("Rational::to_int: not a small integer: " + str());
  return num_;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_)
    *r.big_ = -*r.big_;
  else
    r.num_ = -r.num_;
  return r;
}

void Rational::normalize_small() {}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (s <= kMax && s >= kMin) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n <= kMax && n >= kMin && d <= kMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    big_.reset();
    num_ = 0;
    den_ = 1;
    return *this;
  }
  if (!big_ && !o.big_) {
    i128 g1 = gcd128(num_, o.den_);
    i128 g2 = gcd128(o.num_, den_);
    i128 n = (static_cast<i128>(num_) / g1) * (static_cast<i128>(o.num_) / g2);
    i128 d = (static_cast<i128>(den_) / g2) * (static_cast<i128>(o.den_) / g1);
    if (n <= kMax && n >= kMin && d <= kMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!o.big_) {
    Rational inv;
    if (o.num_ < 0) {
      inv.num_ = -o.den_;
      inv.den_ = -o.num_;
    } else {
      inv.num_ = o.den_;
      inv.den_ = o.num_;
    }
    return *this *= inv;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!a.big_ && !b.big_ && !big_ && a.den_ == 1 && b.den_ == 1 && den_ == 1) {
    i128 p = static_cast<i128>(a.num_) * b.num_ + num_;
    if (p <= kMax && p >= kMin) {
      num_ = static_cast<std::int64_t>(p);
      return;
    }
  }
  *this += a * b;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bgg
