#include "latcover/linalg.hpp"

#include <sstream>

#include "latcover/error.hpp"

namespace latcover {

namespace {
void check_dim(int a, int b) {
  if (a != b)
    throw Error(Errc::DimensionMismatch,
                "dim " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

Vec& Vec::operator+=(const Vec& o) {
  check_dim(dim(), o.dim());
  for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  check_dim(dim(), o.dim());
  for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vec operator-(const Vec& a) {
  Vec r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return r;
}

Rat Vec::dot(const Vec& o) const {
  check_dim(dim(), o.dim());
  Rat s;
  for (int i = 0; i < dim(); ++i) s += c_[i] * o.c_[i];
  return s;
}

bool Vec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator<(const Vec& a, const Vec& b) {
  check_dim(a.dim(), b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << c_[i].str();
  os << ")";
  return os.str();
}

Rat cross2(const Vec& a, const Vec& b) {
  check_dim(a.dim(), 2);
  check_dim(b.dim(), 2);
  return a[0] * b[1] - a[1] * b[0];
}

Vec cross3(const Vec& a, const Vec& b) {
  check_dim(a.dim(), 3);
  check_dim(b.dim(), 3);
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec concat(const Vec& a, const Vec& b) {
  std::vector<Rat> c;
  c.reserve(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i) c.push_back(a[i]);
  for (int i = 0; i < b.dim(); ++i) c.push_back(b[i]);
  return Vec(std::move(c));
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  int n = static_cast<int>(rows.size());
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    check_dim(rows[i].dim(), n);
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec r(n_);
  for (int j = 0; j < n_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(int j) const {
  Vec r(n_);
  for (int i = 0; i < n_; ++i) r[i] = at(i, j);
  return r;
}

std::vector<Vec> Mat::rows() const {
  std::vector<Vec> r;
  r.reserve(n_);
  for (int i = 0; i < n_; ++i) r.push_back(row(i));
  return r;
}

Rat Mat::det() const {
  Mat w = *this;
  int n = n_;
  Rat d(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!w.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(w.at(piv, j), w.at(k, j));
      d = -d;
    }
    d *= w.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (w.at(i, k).is_zero()) continue;
      Rat f = w.at(i, k) / w.at(k, k);
      for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  int n = n_;
  Mat w = *this;
  Mat inv = Mat::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!w.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error(Errc::SingularMatrix, "matrix not invertible");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(k, j));
        std::swap(inv.at(piv, j), inv.at(k, j));
      }
    Rat p = w.at(k, k);
    for (int j = 0; j < n; ++j) {
      w.at(k, j) /= p;
      inv.at(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w.at(i, k).is_zero()) continue;
      Rat f = w.at(i, k);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

Mat Mat::transpose() const {
  Mat t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  check_dim(n_, o.n_);
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec& x) const {
  check_dim(n_, x.dim());
  Vec r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

bool solve_linear(const Mat& a, const Vec& b, Vec& out) {
  int n = a.dim();
  check_dim(n, b.dim());
  Mat w = a;
  Vec rhs = b;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!w.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(k, j));
      std::swap(rhs[piv], rhs[k]);
    }
    for (int i = k + 1; i < n; ++i) {
      if (w.at(i, k).is_zero()) continue;
      Rat f = w.at(i, k) / w.at(k, k);
      for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  Vec x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat s = rhs[i];
    for (int j = i + 1; j < n; ++j) s -= w.at(i, j) * x[j];
    x[i] = s / w.at(i, i);
  }
  out = x;
  return true;
}

}  // namespace latcover
