#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "latcover/error.hpp"

namespace latcover {

using Int = mpz_class;

/// Exact rational scalar. Always reduced, denominator > 0.
/// All decision procedures in this library run on Rat; floats appear only in
/// Monte Carlo estimates and render-only exports.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(const Int& n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) { normalize(); }
  Rat(const Int& num, const Int& den) : v_(num, den) { normalize(); }

  /// Parses "p/q" or an integer string. Decimal floats are rejected.
  static std::optional<Rat> parse(std::string_view s);

  std::string str() const { return v_.get_str(); }
  double dbl() const { return v_.get_d(); }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(v_)), raw_tag{}); }
  /// Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  /// Smallest integer >= value.
  Int ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_), raw_tag{}); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_), raw_tag{}); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_), raw_tag{}); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_), raw_tag{}); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  struct raw_tag {};
  Rat(mpq_class q, raw_tag) : v_(std::move(q)) {}
  void normalize() {
    if (sgn(v_.get_den()) == 0) throw Error(Errc::ParseError, "zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

inline Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::Internal, "division by zero");
  v_ /= o.v_;
  return *this;
}

inline Rat operator/(const Rat& a, const Rat& b) {
  Rat r = a;
  r /= b;
  return r;
}

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// parse() that throws ParseError instead of returning nullopt.
Rat rat_from_string(std::string_view s);

}  // namespace latcover
