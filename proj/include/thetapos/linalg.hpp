#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "thetapos/rational.hpp"

namespace thetapos {

using QVec = std::vector<Rat>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& c, const QVec& v);
QVec operator-(const QVec& v);
bool is_zero_vec(const QVec& v);

/// Dense matrix of exact rationals, row-major.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  QMat(int rows, int cols, std::initializer_list<Rat> vals);

  static QMat identity(int n);
  static QMat zero(int rows, int cols) { return QMat(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  QMat transpose() const;
  QVec row(int i) const;
  QVec col(int j) const;

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  friend QMat operator*(const Rat& c, const QMat& m);
  friend QMat operator-(const QMat& m);
  friend bool operator==(const QMat& a, const QMat& b);
  friend bool operator!=(const QMat& a, const QMat& b) { return !(a == b); }

  QVec apply(const QVec& v) const;  // matrix * column vector

  bool is_zero() const;

  /// Total order usable as a map key (dims first, then entrywise).
  friend bool operator<(const QMat& a, const QMat& b);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

QMat bracket(const QMat& x, const QMat& y);  // xy - yx

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMat& m);

int rank(const QMat& m);
Rat det(const QMat& m);
std::optional<QMat> inverse(const QMat& m);

/// One solution of a*x = b, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Basis of the kernel of a.
std::vector<QVec> nullspace(const QMat& a);

/// Matrix whose columns are the given vectors.
QMat from_columns(const std::vector<QVec>& cols);

/// Coordinates of v in the span of basis, or nullopt if v is outside it.
std::optional<QVec> in_span(const std::vector<QVec>& basis, const QVec& v);

/// True when the symmetric matrix is positive definite (exact leading-minor test).
bool is_positive_definite(const QMat& sym);

QVec flatten(const QMat& m);

}  // namespace thetapos
