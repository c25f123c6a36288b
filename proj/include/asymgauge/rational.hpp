#pragma once

// Exact rational scalar backed by GMP's mpq_t.  Values are always canonical
// (lowest terms, positive denominator) and arithmetic never rounds.  The
// class returns plain values from every operator so it composes with Eigen
// expressions without the gmpxx expression-template pitfalls.

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace asymgauge {

class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational(long n) { // NOLINT: implicit by design, mirrors built-in scalars
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(v_);
    mpz_set_si(mpq_numref(v_), num);
    mpz_set_si(mpq_denref(v_), den);
    mpq_canonicalize(v_);  // lowest terms, denominator made positive
  }
  ~Rational() { mpq_clear(v_); }

  Rational& operator=(const Rational& o) {
    mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  Rational& operator=(long n) {
    mpq_set_si(v_, n, 1);
    return *this;
  }

  // Exact conversion of a finite double (every double is a dyadic rational).
  static Rational from_double(double d) {
    Rational r;
    mpq_set_d(r.v_, d);
    return r;
  }

  // Parses "p", "-p" or "p/q".  Returns nullopt on malformed input or q = 0.
  static std::optional<Rational> parse(std::string_view s);

  // Parses decimal literals like "1.5" or "-0.25" exactly (power-of-ten
  // denominator); also accepts the plain and p/q forms.
  static std::optional<Rational> parse_decimal(std::string_view s);

  std::string str() const;
  double to_double() const { return mpq_get_d(v_); }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }
  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) >= 0;
  }

  // Greatest common divisor of |numerators| over a common denominator scale;
  // exposed as the primitive-scaling helper used by the polyhedral layer.
  mpq_srcptr raw() const { return v_; }
  mpq_ptr raw() { return v_; }

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.abs(); }
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace asymgauge

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<asymgauge::Rational>
    : GenericNumTraits<asymgauge::Rational> {
  typedef asymgauge::Rational Real;
  typedef asymgauge::Rational NonInteger;
  typedef asymgauge::Rational Nested;
  typedef asymgauge::Rational Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
};

}  // namespace Eigen
