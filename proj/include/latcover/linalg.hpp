#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "latcover/rational.hpp"

namespace latcover {

/// Point or direction in E^n with exact rational coordinates.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : c_(dim) {}
  Vec(std::initializer_list<Rat> xs) : c_(xs) {}
  explicit Vec(std::vector<Rat> xs) : c_(std::move(xs)) {}

  int dim() const { return static_cast<int>(c_.size()); }
  Rat& operator[](int i) { return c_[i]; }
  const Rat& operator[](int i) const { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rat& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rat& s, Vec a) { return a *= s; }
  friend Vec operator-(const Vec& a);

  Rat dot(const Vec& o) const;
  bool is_zero() const;

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  /// Lexicographic order; used for all canonical sorts.
  friend bool operator<(const Vec& a, const Vec& b);

  std::string str() const;

 private:
  std::vector<Rat> c_;
};

/// 2D cross product (signed parallelogram area).
Rat cross2(const Vec& a, const Vec& b);
/// 3D cross product.
Vec cross3(const Vec& a, const Vec& b);
/// Concatenation (u, v), used by products and cylinder lifts.
Vec concat(const Vec& a, const Vec& b);

/// Square matrix of exact rationals, row-major.
class Mat {
 public:
  explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);

  int dim() const { return n_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  Vec row(int i) const;
  Vec col(int j) const;
  std::vector<Vec> rows() const;

  /// Exact determinant (Gaussian elimination with exact pivoting).
  Rat det() const;
  /// Exact inverse; throws SingularMatrix.
  Mat inverse() const;
  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  /// M * x
  Vec apply(const Vec& x) const;

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  int n_ = 0;
  std::vector<Rat> a_;
};

/// Solves A x = b exactly; returns false if A is singular.
bool solve_linear(const Mat& a, const Vec& b, Vec& out);

}  // namespace latcover
