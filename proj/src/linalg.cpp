#include "thetapos/linalg.hpp"

#include <stdexcept>

namespace thetapos {

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec operator*(const Rat& c, const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

QVec operator-(const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

QMat::QMat(int rows, int cols, std::initializer_list<Rat> vals) : QMat(rows, cols) {
  if (static_cast<int>(vals.size()) != rows * cols) throw std::invalid_argument("initializer size mismatch");
  size_t k = 0;
  for (const auto& v : vals) a_[k++] = v;
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVec QMat::row(int i) const {
  QVec v(c_);
  for (int j = 0; j < c_; ++j) v[j] = at(i, j);
  return v;
}

QVec QMat::col(int j) const {
  QVec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix size mismatch");
  QMat out(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Rat& aik = a.at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < b.c_; ++j) {
        if (is_zero(b.at(k, j))) continue;
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  return out;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch");
  QMat out(a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix size mismatch");
  QMat out(a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

QMat operator*(const Rat& c, const QMat& m) {
  QMat out(m.r_, m.c_);
  for (size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = c * m.a_[i];
  return out;
}

QMat operator-(const QMat& m) { return Rat(-1) * m; }

bool operator==(const QMat& a, const QMat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

QVec QMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("vector size mismatch");
  QVec out(r_);
  for (int i = 0; i < r_; ++i) {
    Rat s = 0;
    for (int j = 0; j < c_; ++j)
      if (!thetapos::is_zero(at(i, j))) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (!thetapos::is_zero(x)) return false;
  return true;
}

bool operator<(const QMat& a, const QMat& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  if (a.c_ != b.c_) return a.c_ < b.c_;
  for (size_t i = 0; i < a.a_.size(); ++i) {
    int c = cmp(a.a_[i], b.a_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

QMat bracket(const QMat& x, const QMat& y) { return x * y - y * x; }

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const QMat& m) {
  QMat t = m;
  return static_cast<int>(rref(t).size());
}

Rat det(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  QMat t = m;
  int n = t.rows();
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(t.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) swap(t.at(p, j), t.at(col, j));
      d = -d;
    }
    d *= t.at(col, col);
    Rat inv = 1 / t.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(t.at(i, col))) continue;
      Rat f = t.at(i, col) * inv;
      for (int j = col; j < n; ++j) t.at(i, j) -= f * t.at(col, j);
    }
  }
  return d;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  for (int c : piv)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  QVec x(a.cols(), Rat(0));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(static_cast<int>(k), a.cols());
  return x;
}

std::vector<QVec> nullspace(const QMat& a) {
  QMat t = a;
  auto piv = rref(t);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_piv[free]) continue;
    QVec v(a.cols(), Rat(0));
    v[free] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -t.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat from_columns(const std::vector<QVec>& cols) {
  if (cols.empty()) return QMat(0, 0);
  QMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols[0].size()) throw std::invalid_argument("ragged columns");
    for (size_t i = 0; i < cols[j].size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

std::optional<QVec> in_span(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) return is_zero_vec(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
  return solve(from_columns(basis), v);
}

bool is_positive_definite(const QMat& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("pd test of non-square matrix");
  int n = sym.rows();
  for (int k = 1; k <= n; ++k) {
    QMat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = sym.at(i, j);
    if (sgn(det(minor)) <= 0) return false;
  }
  return true;
}

QVec flatten(const QMat& m) {
  QVec out;
  out.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

}  // namespace thetapos
