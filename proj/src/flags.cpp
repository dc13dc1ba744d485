#include "thetapos/flags.hpp"

#include <cmath>
#include <stdexcept>

namespace thetapos::fl {

using som::GroupElem;
using som::SOModel;

namespace {

Flag canonicalize(const SOModel& m, const QVec& v1, const QVec& v2) {
  QMat plane(2, m.n);
  for (int j = 0; j < m.n; ++j) {
    plane.at(0, j) = v1[j];
    plane.at(1, j) = v2[j];
  }
  auto piv = rref(plane);
  if (piv.size() != 2) throw std::invalid_argument("plane basis is not of rank 2");
  Flag f;
  f.plane = plane;
  f.line = v1;
  int lead = -1;
  for (int j = 0; j < m.n; ++j)
    if (!is_zero(f.line[j])) {
      lead = j;
      break;
    }
  if (lead < 0) throw std::invalid_argument("zero line vector");
  f.line = Rat(1 / f.line[lead]) * f.line;
  return f;
}

QVec plane_row(const Flag& f, int i) {
  QVec v(f.plane.cols());
  for (int j = 0; j < f.plane.cols(); ++j) v[j] = f.plane.at(i, j);
  return v;
}

}  // namespace

Flag flag_from(const SOModel& m, const QVec& v1, const QVec& v2) {
  if (static_cast<int>(v1.size()) != m.n || static_cast<int>(v2.size()) != m.n)
    throw std::invalid_argument("flag vectors must have length q+3");
  if (!is_zero(b_Q(m, v1, v1)) || !is_zero(b_Q(m, v2, v2)) || !is_zero(b_Q(m, v1, v2)))
    throw std::invalid_argument("plane is not totally isotropic");
  return canonicalize(m, v1, v2);
}

std::pair<Flag, Flag> standard_flags(const SOModel& m) {
  QVec e1(m.n, Rat(0)), e2(m.n, Rat(0)), f1(m.n, Rat(0)), f2(m.n, Rat(0));
  e1[0] = 1;
  e2[1] = 1;
  f1[m.n - 1] = 1;
  f2[m.n - 2] = 1;
  return {flag_from(m, e1, e2), flag_from(m, f1, f2)};
}

Flag act(const SOModel& m, const QMat& g, const Flag& f) {
  QVec l = g.apply(f.line);
  QVec p1 = g.apply(plane_row(f, 0));
  QVec p2 = g.apply(plane_row(f, 1));
  QMat pair(2, m.n);
  for (int j = 0; j < m.n; ++j) {
    pair.at(0, j) = l[j];
    pair.at(1, j) = p1[j];
  }
  return canonicalize(m, l, rank(pair) == 2 ? p1 : p2);
}

bool is_valid_flag(const SOModel& m, const Flag& f) {
  if (static_cast<int>(f.line.size()) != m.n || f.plane.rows() != 2 || f.plane.cols() != m.n)
    return false;
  QVec p1 = plane_row(f, 0), p2 = plane_row(f, 1);
  if (!is_zero(b_Q(m, p1, p1)) || !is_zero(b_Q(m, p2, p2)) || !is_zero(b_Q(m, p1, p2)))
    return false;
  if (!in_span({p1, p2}, f.line).has_value()) return false;
  QMat pair(2, m.n);
  for (int j = 0; j < m.n; ++j) {
    pair.at(0, j) = p1[j];
    pair.at(1, j) = p2[j];
  }
  return rank(pair) == 2 && !is_zero_vec(f.line);
}

namespace {

QMat gram(const SOModel& m, const Flag& f, const Flag& g) {
  QMat out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = b_Q(m, plane_row(f, i), plane_row(g, j));
  return out;
}

}  // namespace

bool is_transverse(const SOModel& m, const Flag& f, const Flag& g) {
  if (!is_valid_flag(m, f) || !is_valid_flag(m, g)) throw std::invalid_argument("invalid flag");
  return !is_zero(b_Q(m, f.line, g.line)) && !is_zero(det(gram(m, f, g)));
}

std::array<int, 9> position_signature(const SOModel& m, const Flag& f, const Flag& g) {
  std::array<int, 9> sig{};
  QMat gr = gram(m, f, g);
  sig[0] = rank(gr);
  sig[1] = is_zero(b_Q(m, f.line, g.line)) ? 0 : 1;
  sig[2] = (is_zero(b_Q(m, f.line, plane_row(g, 0))) && is_zero(b_Q(m, f.line, plane_row(g, 1))))
               ? 1
               : 0;
  sig[3] = (is_zero(b_Q(m, plane_row(f, 0), g.line)) && is_zero(b_Q(m, plane_row(f, 1), g.line)))
               ? 1
               : 0;
  QMat stacked(4, m.n);
  for (int j = 0; j < m.n; ++j) {
    stacked.at(0, j) = f.plane.at(0, j);
    stacked.at(1, j) = f.plane.at(1, j);
    stacked.at(2, j) = g.plane.at(0, j);
    stacked.at(3, j) = g.plane.at(1, j);
  }
  sig[4] = 4 - rank(stacked);
  sig[5] = in_span({plane_row(g, 0), plane_row(g, 1)}, f.line).has_value() ? 1 : 0;
  sig[6] = in_span({plane_row(f, 0), plane_row(f, 1)}, g.line).has_value() ? 1 : 0;
  sig[7] = 2 - sig[0];
  // dim(l cap l'): the first eight components leave the classes e and s1
  // (same plane, different line) unseparated; line coincidence closes the gap
  sig[8] = (f.line == g.line) ? 1 : 0;
  return sig;
}

std::vector<std::pair<std::string, Flag>> position_representatives(const SOModel& m) {
  auto basis = [&](int i) {
    QVec v(m.n, Rat(0));
    v[i] = 1;
    return v;
  };
  QVec e1 = basis(0), e2 = basis(1);
  QVec f3 = basis(m.mid_hi()), f2 = basis(m.n - 2), f1 = basis(m.n - 1);
  auto mk = [&](const QVec& a, const QVec& b) { return flag_from(m, a, b); };
  return {
      {"e", mk(f1, f2)},
      {"s1", mk(f2, f1)},
      {"s2", mk(f1, f3)},
      {"s2s3s2", mk(f1, e2)},
      {"s2s1", mk(f3, f1)},
      {"(s2s3s2)s1", mk(e2, f1)},
      {"s1s2", mk(f2, f3)},
      {"s1(s2s3s2)", mk(f2, e1)},
      {"(s2s3)s1s2", mk(f3, e2)},
      {"s2s1(s2s3s2)", mk(f3, e1)},
      {"(s2s3s2)s1s2", mk(e2, f3)},
      {"(s2s3s2)s1(s2s3s2)", mk(e2, e1)},
      {"s1s2s1", mk(f3, f2)},
      {"s1(s2s3s2)s1", mk(e1, f2)},
      {"s1(s2s3s2)s1s2", mk(e1, f3)},
      {"s1(s2s3s2)s1(s2s3s2)", mk(e1, e2)},
  };
}

const std::map<std::array<int, 9>, std::string>& position_table() {
  // Calibrated once against the representative pairs measured from E-; the
  // regeneration test recomputes this for several q and asserts equality.
  static const std::map<std::array<int, 9>, std::string> table = [] {
    auto m = som::model(5);
    auto [eplus, eminus] = standard_flags(m);
    std::map<std::array<int, 9>, std::string> t;
    for (auto& [label, rep] : position_representatives(m)) {
      auto sig = position_signature(m, eminus, rep);
      if (!t.emplace(sig, label).second)
        throw std::logic_error("calibration signatures are not distinct");
    }
    return t;
  }();
  return table;
}

PairPosition relative_position(const SOModel& m, const Flag& f, const Flag& g) {
  if (!is_valid_flag(m, f) || !is_valid_flag(m, g)) throw std::invalid_argument("invalid flag");
  auto sig = position_signature(m, f, g);
  auto it = position_table().find(sig);
  if (it == position_table().end()) throw std::logic_error("calibration incomplete");
  return {it->second, sig};
}

GroupElem recover_unipotent(const SOModel& m, const Flag& x) {
  if (!is_valid_flag(m, x)) throw std::invalid_argument("invalid flag");
  const int n = m.n;
  if (is_zero(x.line[n - 1])) throw std::invalid_argument("flag is not transverse to E+");
  QVec colN = Rat(1 / x.line[n - 1]) * x.line;

  // plane vector with f1-coefficient 0 and f2-coefficient 1
  QVec r1 = plane_row(x, 0), r2 = plane_row(x, 1);
  QMat sys(2, 2, {r1[n - 1], r2[n - 1], r1[n - 2], r2[n - 2]});
  auto ab = solve(sys, QVec{Rat(0), Rat(1)});
  if (!ab || is_zero(det(sys))) throw std::invalid_argument("flag is not transverse to E+");
  QVec colN1 = (*ab)[0] * r1 + (*ab)[1] * r2;

  QMat u = QMat::identity(n);
  for (int i = 0; i < n; ++i) {
    u.at(i, n - 1) = colN[i];
    u.at(i, n - 2) = colN1[i];
  }
  u.at(0, 1) = colN[n - 2];  // forced by b_Q(u e2, u f1) = 0

  // middle columns: u(m_j) = m_j + a_j e2 + b_j e1, pinned by orthogonality
  // to the last two columns
  QVec jN(m.q - 1), jN1(m.q - 1);
  {
    QVec rawN(m.q - 1), rawN1(m.q - 1);
    for (int i = 0; i < m.q - 1; ++i) {
      rawN[i] = colN[2 + i];
      rawN1[i] = colN1[2 + i];
    }
    jN = m.J.apply(rawN);
    jN1 = m.J.apply(rawN1);
  }
  for (int i = 0; i < m.q - 1; ++i) {
    Rat a = jN1[i];
    u.at(1, 2 + i) = a;
    u.at(0, 2 + i) = a * colN[n - 2] - jN[i];
  }

  if (!som::in_U_theta(m, u)) throw std::logic_error("recovered element left U_Theta");
  auto [eplus, eminus] = standard_flags(m);
  if (act(m, u, eminus) != x) throw std::logic_error("recovered element misses the flag");
  return {u};
}

bool positive_triple_std(const SOModel& m, const Flag& x) {
  try {
    return sg::is_positive(m, recover_unipotent(m, x));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool diamond_membership(const SOModel& m, const Flag& x, DiamondSide side) {
  try {
    GroupElem u = recover_unipotent(m, x);
    if (side == DiamondSide::D) return sg::is_positive(m, u);
    return sg::is_positive(m, GroupElem{inverse(u.g).value()});
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool positive_quadruple_axby(const SOModel& m, const Flag& x, const Flag& y) {
  // (E+, x, E-, y) is positive when some diamond with extremities E+, E-
  // holds x with y in its opposite; the standard diamond or its opposite
  // realize both orientations.
  return (diamond_membership(m, x, DiamondSide::D) &&
          diamond_membership(m, y, DiamondSide::Dopp)) ||
         (diamond_membership(m, x, DiamondSide::Dopp) &&
          diamond_membership(m, y, DiamondSide::D));
}

bool positive_quadruple_axyb(const SOModel& m, const Flag& x, const Flag& y) {
  // (E+, x, y, E-) as (a, vu.b, v.b, b); the mirrored branch covers the
  // configuration with both ratios inverted.
  try {
    GroupElem v = recover_unipotent(m, y);
    QMat vinv = inverse(v.g).value();
    if (sg::is_positive(m, v)) {
      GroupElem u = recover_unipotent(m, act(m, vinv, x));
      return sg::is_positive(m, u);
    }
    if (sg::is_positive(m, GroupElem{vinv})) {
      GroupElem u = recover_unipotent(m, act(m, v.g, x));
      return sg::is_positive(m, GroupElem{inverse(u.g).value()});
    }
    return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool positive_tuple_std(const SOModel& m, const std::vector<Flag>& fs) {
  // (E+, fs[0], ..., fs[k-1], E-): peel off u_1 from the flag next to E-,
  // then the successive ratios.
  try {
    QMat acc = QMat::identity(m.n);
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      Flag pulled = act(m, inverse(acc).value(), *it);
      GroupElem u = recover_unipotent(m, pulled);
      if (!sg::is_positive(m, u)) return false;
      acc = acc * u.g;
    }
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Flag circle_point(const SOModel& m, const som::PrincipalSL2& p, const std::optional<Rat>& t) {
  auto [eplus, eminus] = standard_flags(m);
  if (!t) return eminus;
  GroupElem g = som::exp_nilpotent(som::LieElem{*t * p.F.m});
  return act(m, g.g, eplus);
}

// ---------------------------------------------------------------------------
// Float backend

namespace {

using DVec = std::vector<double>;
using DMat = std::vector<DVec>;

DVec to_dvec(const QVec& v) {
  DVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

double dot_q(const SOModel& m, const DVec& a, const DVec& b) {
  double s = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      double q = to_double(m.Q.at(i, j));
      if (q != 0) s += a[i] * q * b[j];
    }
  return s;
}

DVec dscale(double c, const DVec& v) {
  DVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

DVec dsub(const DVec& a, const DVec& b) {
  DVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Gauss elimination with partial pivoting; empty result on singularity.
DVec dsolve(DMat s, DVec rhs, double tol) {
  const int n = static_cast<int>(s.size());
  for (int col = 0; col < n; ++col) {
    int p = col;
    for (int i = col + 1; i < n; ++i)
      if (std::fabs(s[i][col]) > std::fabs(s[p][col])) p = i;
    if (std::fabs(s[p][col]) < tol) return {};
    std::swap(s[p], s[col]);
    std::swap(rhs[p], rhs[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      double f = s[i][col] / s[col][col];
      if (f == 0) continue;
      for (int j = col; j < n; ++j) s[i][j] -= f * s[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  DVec x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / s[i][i];
  return x;
}

struct DFlag {
  DVec line;
  DVec p1, p2;
};

// Isometry h (as columns) with h(E+) = a, h(E-) = b; empty when degenerate.
DMat normalize_pair(const SOModel& m, const DFlag& a, const DFlag& b, double tol) {
  const int n = m.n;
  double lp = dot_q(m, a.line, b.line);
  if (std::fabs(lp) < tol) return {};
  DVec a1 = a.line;
  DVec b1 = dscale(1.0 / lp, b.line);

  // a2 in the a-plane with b_Q(a2, b1) = 0
  double c1 = dot_q(m, a.p1, b1), c2 = dot_q(m, a.p2, b1);
  DVec a2 = dsub(dscale(c2, a.p1), dscale(c1, a.p2));
  double na = 0;
  for (double v : a2) na += v * v;
  if (na < tol * tol) return {};
  // b2 in the b-plane with b_Q(a1, b2) = 0, scaled so b_Q(a2, b2) = -1
  double d1 = dot_q(m, a1, b.p1), d2 = dot_q(m, a1, b.p2);
  DVec b2 = dsub(dscale(d2, b.p1), dscale(d1, b.p2));
  double pairing = dot_q(m, a2, b2);
  if (std::fabs(pairing) < tol) return {};
  b2 = dscale(-1.0 / pairing, b2);

  // orthogonal complement of span(a1, a2, b2, b1)
  std::vector<DVec> w;
  {
    DMat cons(4, DVec(n, 0.0));
    const DVec* four[4] = {&a1, &a2, &b2, &b1};
    for (int r = 0; r < 4; ++r)
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < n; ++i) {
          double q = to_double(m.Q.at(i, j));
          if (q != 0) s += (*four[r])[i] * q;
        }
        cons[r][j] = s;
      }
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < 4; ++col) {
      int p = row;
      for (int i = row + 1; i < 4; ++i)
        if (std::fabs(cons[i][col]) > std::fabs(cons[p][col])) p = i;
      if (std::fabs(cons[p][col]) < tol) continue;
      std::swap(cons[p], cons[row]);
      for (int i = 0; i < 4; ++i) {
        if (i == row) continue;
        double f = cons[i][col] / cons[row][col];
        for (int j = 0; j < n; ++j) cons[i][j] -= f * cons[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    if (pivots.size() != 4) return {};
    std::vector<bool> is_piv(n, false);
    for (int c : pivots) is_piv[c] = true;
    for (int free = 0; free < n; ++free) {
      if (is_piv[free]) continue;
      DVec v(n, 0.0);
      v[free] = 1.0;
      for (size_t r2 = 0; r2 < pivots.size(); ++r2)
        v[pivots[r2]] = -cons[r2][free] / cons[r2][pivots[r2]];
      w.push_back(std::move(v));
    }
  }
  if (static_cast<int>(w.size()) != m.q - 1) return {};

  // Lagrange congruence diagonalization of the complement
  std::vector<DVec> diag;
  std::vector<double> dval;
  std::vector<DVec> pool = w;
  int guard = 4 * n;
  while (!pool.empty() && guard-- > 0) {
    size_t best = 0;
    double bestq = 0;
    for (size_t i = 0; i < pool.size(); ++i) {
      double qv = dot_q(m, pool[i], pool[i]);
      if (std::fabs(qv) > std::fabs(bestq)) {
        bestq = qv;
        best = i;
      }
    }
    if (std::fabs(bestq) < tol) {
      bool fixed = false;
      for (size_t i = 0; i < pool.size() && !fixed; ++i)
        for (size_t j = i + 1; j < pool.size() && !fixed; ++j)
          if (std::fabs(dot_q(m, pool[i], pool[j])) > tol) {
            for (size_t k2 = 0; k2 < pool[i].size(); ++k2) pool[i][k2] += pool[j][k2];
            fixed = true;
          }
      if (!fixed) return {};
      continue;
    }
    DVec v = pool[best];
    pool.erase(pool.begin() + best);
    for (auto& u2 : pool) {
      double f = dot_q(m, u2, v) / bestq;
      u2 = dsub(u2, dscale(f, v));
    }
    diag.push_back(dscale(1.0 / std::sqrt(std::fabs(bestq)), v));
    dval.push_back(bestq > 0 ? 1.0 : -1.0);
  }
  if (!pool.empty()) return {};

  int pos = -1, negs = 0;
  for (size_t i = 0; i < dval.size(); ++i)
    if (dval[i] > 0)
      pos = static_cast<int>(i);
    else
      ++negs;
  if (pos < 0 || negs != m.q - 2) return {};

  // middle basis with Gram J: light-cone pair plus the remaining negatives
  std::vector<int> negidx;
  for (size_t i = 0; i < dval.size(); ++i)
    if (dval[i] < 0) negidx.push_back(static_cast<int>(i));
  int last_neg = negidx.back();
  const double s2 = std::sqrt(2.0);
  DVec m_first(n), m_last(n);
  for (int j = 0; j < n; ++j) {
    m_first[j] = (diag[pos][j] + diag[last_neg][j]) / s2;
    m_last[j] = (diag[pos][j] - diag[last_neg][j]) / s2;
  }
  std::vector<DVec> mids;
  mids.push_back(m_first);
  for (size_t k2 = 0; k2 + 1 < negidx.size(); ++k2) mids.push_back(diag[negidx[k2]]);
  mids.push_back(m_last);

  DMat h(n, DVec(n, 0.0));
  auto set_col = [&](int c, const DVec& v) {
    for (int i = 0; i < n; ++i) h[i][c] = v[i];
  };
  set_col(0, a1);
  set_col(1, a2);
  for (int k2 = 0; k2 < m.q - 1; ++k2) set_col(2 + k2, mids[k2]);
  set_col(n - 2, b2);
  set_col(n - 1, b1);
  return h;
}

}  // namespace

bool positive_triple_general(const SOModel& m, const Flag& a, const Flag& x, const Flag& b,
                             double tol) {
  DFlag da{to_dvec(a.line), to_dvec(plane_row(a, 0)), to_dvec(plane_row(a, 1))};
  DFlag db{to_dvec(b.line), to_dvec(plane_row(b, 0)), to_dvec(plane_row(b, 1))};
  DMat h = normalize_pair(m, da, db, tol);
  if (h.empty()) return false;

  const int n = m.n;
  auto pull = [&](const QVec& v) { return dsolve(h, to_dvec(v), tol); };
  DVec line = pull(x.line);
  DVec p1 = pull(plane_row(x, 0));
  DVec p2 = pull(plane_row(x, 1));
  if (line.empty() || p1.empty() || p2.empty()) return false;

  // rebuild the full unipotent carrying E- to the pulled flag
  if (std::fabs(line[n - 1]) < tol) return false;
  DVec colN = dscale(1.0 / line[n - 1], line);
  double det2 = p1[n - 1] * p2[n - 2] - p2[n - 1] * p1[n - 2];
  if (std::fabs(det2) < tol) return false;
  double ca = -p2[n - 1] / det2;
  double cb = p1[n - 1] / det2;
  DVec colN1(n);
  for (int i = 0; i < n; ++i) colN1[i] = ca * p1[i] + cb * p2[i];

  auto jmid = [&](const DVec& col) {
    DVec out(m.q - 1, 0.0);
    for (int i = 0; i < m.q - 1; ++i)
      for (int j = 0; j < m.q - 1; ++j) {
        double jv = to_double(m.J.at(i, j));
        if (jv != 0) out[i] += jv * col[2 + j];
      }
    return out;
  };
  DVec jmN = jmid(colN), jmN1 = jmid(colN1);
  DMat u(n, DVec(n, 0.0));
  for (int i = 0; i < n; ++i) {
    u[i][i] = 1.0;
    u[i][n - 1] = colN[i];
    u[i][n - 2] = colN1[i];
  }
  u[n - 2][n - 2] = colN1[n - 2];
  u[n - 1][n - 1] = colN[n - 1];
  u[0][1] = colN[n - 2];
  for (int i = 0; i < m.q - 1; ++i) {
    u[1][2 + i] = jmN1[i];
    u[0][2 + i] = jmN1[i] * colN[n - 2] - jmN[i];
  }

  // inverse of a unipotent via the terminating Neumann series
  DMat nil(n, DVec(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) nil[i][j] = u[i][j] - (i == j ? 1.0 : 0.0);
  DMat uinv(n, DVec(n, 0.0));
  for (int i = 0; i < n; ++i) uinv[i][i] = 1.0;
  DMat power = nil;
  double sign = -1.0;
  for (int k2 = 0; k2 < 5; ++k2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) uinv[i][j] += sign * power[i][j];
    DMat next(n, DVec(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (power[i][l] != 0)
          for (int j = 0; j < n; ++j) next[i][j] += power[i][l] * nil[l][j];
    power = std::move(next);
    sign = -sign;
  }

  auto qj = [&](const DVec& v) {
    double s = 0;
    for (int i = 0; i < m.q - 1; ++i)
      for (int j = 0; j < m.q - 1; ++j) {
        double jv = to_double(m.J.at(i, j));
        if (jv != 0) s += v[i] * jv * v[j];
      }
    return s / 2;
  };

  // positivity up to a coherent orientation of the two cones; the opposite
  // diamond appears through the inverse element
  auto coherent_positive = [&](const DMat& g) {
    double p2e = g[1][n - 1];
    if (std::fabs(p2e) < tol) return false;
    double s1 = g[0][n - 1] / p2e;
    double s2v = g[n - 2][n - 1] - s1;
    DVec cN(n), cN1(n);
    for (int i = 0; i < n; ++i) {
      cN[i] = g[i][n - 1];
      cN1[i] = g[i][n - 2];
    }
    DVec jN = jmid(cN), jN1 = jmid(cN1);
    if (std::fabs(s2v) < tol) return false;
    DVec v1(m.q - 1), v2(m.q - 1);
    for (int i = 0; i < m.q - 1; ++i) {
      v1[i] = jN[i] / s2v;
      v2[i] = jN1[i] - v1[i];
    }
    auto interior = [&](const DVec& v, double orient) {
      return orient * v[0] > tol && qj(v) > tol;
    };
    if (s1 > tol && s2v > tol && interior(v1, 1) && interior(v2, 1)) return true;
    if (s1 < -tol && s2v < -tol && interior(v1, -1) && interior(v2, -1)) return true;
    return false;
  };
  return coherent_positive(u) || coherent_positive(uinv);
}

}  // namespace thetapos::fl
