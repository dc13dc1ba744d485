#include "thetapos/semigroup.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thetapos::sg {

namespace {

using som::GroupElem;
using som::SOModel;

// Middle slice of a column, mapped back through J (J^2 = id).
QVec mid_col_J(const SOModel& m, const QMat& g, int col) {
  QVec raw(m.q - 1);
  for (int i = 0; i < m.q - 1; ++i) raw[i] = g.at(2 + i, col);
  return m.J.apply(raw);
}

QVec mid_row(const SOModel& m, const QMat& g, int row) {
  QVec out(m.q - 1);
  for (int i = 0; i < m.q - 1; ++i) out[i] = g.at(row, 2 + i);
  return out;
}

void require_u_theta(const SOModel& m, const GroupElem& g) {
  if (!som::in_U_theta(m, g.g)) throw std::invalid_argument("element is not in U_Theta");
}

}  // namespace

ConeStatus cone_status(const som::SOModel& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.q - 1) throw std::invalid_argument("cone vector size mismatch");
  if (is_zero_vec(v)) return ConeStatus::Zero;
  Rat qj = q_J(m, v);
  int s = sgn(qj);
  if (s > 0 && sgn(v[0]) > 0) return ConeStatus::Interior;
  // closed-cone boundary: q_J = 0, v_0 >= 0; on the v_0 = 0 ray the middle
  // coordinates vanish and the last one must be nonnegative
  if (s == 0 && sgn(v[0]) >= 0 && (sgn(v[0]) > 0 || sgn(v[m.q - 2]) >= 0))
    return ConeStatus::BoundaryNonzero;
  return ConeStatus::Outside;
}

bool in_closed_cone(const som::SOModel& m, const QVec& v) {
  return cone_status(m, v) != ConeStatus::Outside;
}

som::GroupElem F_gamma(const som::SOModel& m, const UCoord& u) {
  if (u.order == Order::O1212)
    return {som::x1(m, u.s1).g * som::x2(m, u.v1).g * som::x1(m, u.s2).g * som::x2(m, u.v2).g};
  return {som::x2(m, u.v2).g * som::x1(m, u.s2).g * som::x2(m, u.v1).g * som::x1(m, u.s1).g};
}

ChartEntries chart_entries(const som::SOModel& m) {
  const int n = m.n;
  return ChartEntries{
      {0, n - 1},  // s1 s2 qJ(v1)
      {1, n - 1},  // s2 qJ(v1)
      n - 1,       // J(s2 v1) fills rows 2..q of the last column
      {n - 2, n - 1},  // s1 + s2
      {1, n - 2},      // qJ(v1 + v2)
      n - 2,           // J(v1 + v2) fills rows 2..q of the next-to-last column
      {0, n - 2},      // s1 qJ(v1+v2) + s2 qJ(v2)
  };
}

std::optional<UCoord> decode(const som::SOModel& m, const som::GroupElem& g, Order order) {
  require_u_theta(m, g);
  const int n = m.n;
  UCoord c;
  c.order = order;
  if (order == Order::O1212) {
    ChartEntries ce = chart_entries(m);
    Rat p2 = g.g.at(ce.s2_qJ_v1.first, ce.s2_qJ_v1.second);
    if (is_zero(p2)) return std::nullopt;
    c.s1 = g.g.at(ce.s1s2_qJ_v1.first, ce.s1s2_qJ_v1.second) / p2;
    c.s2 = g.g.at(ce.s_sum.first, ce.s_sum.second) - c.s1;
    if (is_zero(c.s2)) return std::nullopt;
    c.v1 = Rat(1 / c.s2) * mid_col_J(m, g.g, ce.col_s2_v1);
    c.v2 = mid_col_J(m, g.g, ce.col_vsum) - c.v1;
  } else {
    // first row: (1, t1+t2, t2 w1^t, t2 qJ(w1), t1 t2 qJ(w1))
    Rat p2 = g.g.at(0, n - 2);
    if (is_zero(p2)) return std::nullopt;
    c.s1 = g.g.at(0, n - 1) / p2;
    c.s2 = g.g.at(0, 1) - c.s1;
    if (is_zero(c.s2)) return std::nullopt;
    c.v1 = Rat(1 / c.s2) * mid_row(m, g.g, 0);
    c.v2 = mid_row(m, g.g, 1) - c.v1;
  }
  if (F_gamma(m, c).g != g.g) return std::nullopt;
  return c;
}

bool is_positive(const som::SOModel& m, const som::GroupElem& g) {
  auto c = decode(m, g, Order::O1212);
  if (!c) return false;
  return sgn(c->s1) > 0 && sgn(c->s2) > 0 && cone_status(m, c->v1) == ConeStatus::Interior &&
         cone_status(m, c->v2) == ConeStatus::Interior;
}

QVec a_op(const som::SOModel& m, const QVec& v1, const QVec& v2) {
  QVec sum = v1 + v2;
  return q_J(m, sum) * v1 - q_J(m, v1) * sum;
}

UCoord braid_change(const som::SOModel& m, const UCoord& u) {
  const Rat &s1 = u.s1, &s2 = u.s2;
  const QVec &v1 = u.v1, &v2 = u.v2;
  QVec sum = v1 + v2;
  QVec mix = s1 * sum + Rat(s2) * v2;
  Rat den1 = s1 * q_J(m, sum) + s2 * q_J(m, v2);
  Rat den2 = q_J(m, mix);
  if (is_zero(den1) || is_zero(den2))
    throw std::invalid_argument("braid change undefined on boundary");

  UCoord out;
  out.order = (u.order == Order::O1212) ? Order::O2121 : Order::O1212;
  out.s1 = s1 * s2 * q_J(m, v1) / den1;  // t1
  out.s2 = den2 / den1;                  // t2
  out.v1 = Rat(den1 / den2) * mix;       // w1
  QVec num = Rat(s2 * q_J(m, v2)) * v1 + Rat(s1) * a_op(m, v1, v2);
  out.v2 = Rat(s2 / den2) * num;  // w2
  return out;
}

std::vector<std::string> braid_relations_failures(const som::SOModel& m, const UCoord& a,
                                                  const UCoord& b) {
  const Rat &s1 = a.s1, &s2 = a.s2, &t1 = b.s1, &t2 = b.s2;
  const QVec &v1 = a.v1, &v2 = a.v2, &w1 = b.v1, &w2 = b.v2;
  std::vector<std::string> bad;
  auto expect = [&bad](bool ok, const char* name) {
    if (!ok) bad.push_back(name);
  };
  QVec vs = v1 + v2, ws = w1 + w2;
  expect(s1 + s2 == t1 + t2, "R1: s1+s2 = t1+t2");
  expect(vs == ws, "R2: v1+v2 = w1+w2");
  expect(Rat(s1) * vs + Rat(s2) * v2 == Rat(t2) * w1, "R3: s1(v1+v2)+s2 v2 = t2 w1");
  expect(s1 * q_J(m, vs) + s2 * q_J(m, v2) == t2 * q_J(m, w1),
         "R4: s1 qJ(v1+v2)+s2 qJ(v2) = t2 qJ(w1)");
  expect(Rat(s2) * v1 == Rat(t2) * w2 + Rat(t1) * ws, "R5: s2 v1 = t2 w2 + t1(w1+w2)");
  expect(s2 * q_J(m, v1) == t2 * q_J(m, w2) + t1 * q_J(m, ws),
         "R6: s2 qJ(v1) = t2 qJ(w2) + t1 qJ(w1+w2)");
  expect(s1 * s2 * q_J(m, v1) == t2 * t1 * q_J(m, w1), "R7: s1 s2 qJ(v1) = t1 t2 qJ(w1)");
  return bad;
}

const std::vector<std::string>& stratum_labels() {
  static const std::vector<std::string> labels = {
      "e",
      "s1",
      "s2",
      "s2s3s2",
      "s2s1",
      "(s2s3s2)s1",
      "s1s2",
      "s1(s2s3s2)",
      "(s2s3)s1s2",
      "s2s1(s2s3s2)",
      "(s2s3s2)s1s2",
      "(s2s3s2)s1(s2s3s2)",
      "s1s2s1",
      "s1(s2s3s2)s1",
      "s1(s2s3s2)s1s2",
      "s1(s2s3s2)s1(s2s3s2)",
  };
  return labels;
}

namespace {

// v1 interior, s2 > 0: the six strata of the half-open main chart.
std::optional<Stratum> try_main_chart(const SOModel& m, const QMat& g) {
  const int n = m.n;
  Rat p2 = g.at(1, n - 1);
  if (is_zero(p2)) return std::nullopt;
  UCoord c;
  c.order = Order::O1212;
  c.s1 = g.at(0, n - 1) / p2;
  c.s2 = g.at(n - 2, n - 1) - c.s1;
  if (sgn(c.s1) < 0 || sgn(c.s2) <= 0) return std::nullopt;
  c.v1 = Rat(1 / c.s2) * mid_col_J(m, g, n - 1);
  c.v2 = mid_col_J(m, g, n - 2) - c.v1;
  if (cone_status(m, c.v1) != ConeStatus::Interior) return std::nullopt;
  ConeStatus cv2 = cone_status(m, c.v2);
  if (cv2 == ConeStatus::Outside) return std::nullopt;
  if (F_gamma(m, c).g != g) return std::nullopt;
  bool s1pos = sgn(c.s1) > 0;
  std::string label;
  if (cv2 == ConeStatus::Zero)
    label = s1pos ? "s1(s2s3s2)s1" : "(s2s3s2)s1";
  else if (cv2 == ConeStatus::BoundaryNonzero)
    label = s1pos ? "s1(s2s3s2)s1s2" : "(s2s3s2)s1s2";
  else
    label = s1pos ? "s1(s2s3s2)s1(s2s3s2)" : "(s2s3s2)s1(s2s3s2)";
  return Stratum{label, c};
}

// s1 = 0, v1 on the boundary: strata s2s1, (s2s3)s1s2, s2s1(s2s3s2).
std::optional<Stratum> try_boundary_v1(const SOModel& m, const QMat& g) {
  const int n = m.n;
  Rat s = g.at(n - 2, n - 1);
  if (sgn(s) <= 0) return std::nullopt;
  UCoord c;
  c.order = Order::O1212;
  c.s1 = 0;
  c.s2 = s;
  c.v1 = Rat(1 / s) * mid_col_J(m, g, n - 1);
  c.v2 = mid_col_J(m, g, n - 2) - c.v1;
  if (cone_status(m, c.v1) != ConeStatus::BoundaryNonzero) return std::nullopt;
  if (F_gamma(m, c).g != g) return std::nullopt;
  ConeStatus cv2 = cone_status(m, c.v2);
  if (cv2 == ConeStatus::Zero) return Stratum{"s2s1", c};
  if (cv2 == ConeStatus::Interior) return Stratum{"s2s1(s2s3s2)", c};
  if (cv2 == ConeStatus::BoundaryNonzero && !is_zero(b_J(m, c.v1, c.v2)))
    return Stratum{"(s2s3)s1s2", c};
  return std::nullopt;
}

// v2 = 0, v1 on the boundary, both s positive: stratum s1s2s1.
std::optional<Stratum> try_s1s2s1(const SOModel& m, const QMat& g) {
  const int n = m.n;
  UCoord c;
  c.order = Order::O1212;
  c.v1 = mid_col_J(m, g, n - 2);
  if (cone_status(m, c.v1) != ConeStatus::BoundaryNonzero) return std::nullopt;
  QVec m2 = mid_col_J(m, g, n - 1);
  int k = -1;
  for (int i = 0; i < m.q - 1 && k < 0; ++i)
    if (!is_zero(c.v1[i])) k = i;
  c.s2 = m2[k] / c.v1[k];
  if (sgn(c.s2) <= 0 || m2 != Rat(c.s2) * c.v1) return std::nullopt;
  c.s1 = g.at(n - 2, n - 1) - c.s2;
  if (sgn(c.s1) <= 0) return std::nullopt;
  c.v2 = QVec(m.q - 1, Rat(0));
  if (F_gamma(m, c).g != g) return std::nullopt;
  return Stratum{"s1s2s1", c};
}

// s2 v1 = 0: the element collapses to x1(S) x2(V).
std::optional<Stratum> try_collapsed(const SOModel& m, const QMat& g) {
  const int n = m.n;
  UCoord c;
  c.order = Order::O1212;
  c.s1 = g.at(n - 2, n - 1);
  c.v1 = mid_col_J(m, g, n - 2);
  c.s2 = 0;
  c.v2 = QVec(m.q - 1, Rat(0));
  if (sgn(c.s1) < 0) return std::nullopt;
  ConeStatus cv = cone_status(m, c.v1);
  if (cv == ConeStatus::Outside) return std::nullopt;
  if (F_gamma(m, c).g != g) return std::nullopt;
  bool spos = sgn(c.s1) > 0;
  if (cv == ConeStatus::Zero) return Stratum{spos ? "s1" : "e", c};
  if (cv == ConeStatus::BoundaryNonzero) return Stratum{spos ? "s1s2" : "s2", c};
  return Stratum{spos ? "s1(s2s3s2)" : "s2s3s2", c};
}

}  // namespace

std::optional<Stratum> stratify(const som::SOModel& m, const som::GroupElem& g,
                                bool assert_unique) {
  require_u_theta(m, g);
  using Attempt = std::optional<Stratum> (*)(const SOModel&, const QMat&);
  static const Attempt attempts[] = {try_main_chart, try_boundary_v1, try_s1s2s1, try_collapsed};
  std::vector<Stratum> matches;
  for (auto* attempt : attempts) {
    auto r = attempt(m, g.g);
    if (r) {
      if (!assert_unique) return r;
      matches.push_back(*r);
    }
  }
  if (matches.empty()) return std::nullopt;
  if (matches.size() > 1) throw std::logic_error("stratification is not unique");
  return matches.front();
}

bool ur_member(const UrElem& x) {
  return sgn(x.a) >= 0 && sgn(x.b) >= 0 && sgn(x.c) >= 0 && x.c <= x.r * x.a * x.b;
}

UrElem ur_product(const UrElem& x, const UrElem& y) {
  if (x.r != y.r) throw std::invalid_argument("U_r product across different r");
  if (!ur_member(x) || !ur_member(y)) throw std::invalid_argument("factor outside U_r");
  return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b, x.r};
}

QVec random_interior_vector(const som::SOModel& m, RatRng& rng) {
  QVec v(m.q - 1);
  v[0] = rng.positive();
  Rat sq = 0;
  for (int i = 1; i <= m.q - 3; ++i) {
    v[i] = rng.rational(3, 3);
    sq += v[i] * v[i];
  }
  // pick the last coordinate so that q_J = delta > 0 exactly
  Rat delta = rng.positive();
  v[m.q - 2] = (delta + sq / 2) / v[0];
  return v;
}

QVec random_boundary_vector(const som::SOModel& m, RatRng& rng) {
  QVec v(m.q - 1);
  v[0] = rng.positive();
  Rat sq = 0;
  for (int i = 1; i <= m.q - 3; ++i) {
    v[i] = rng.rational(3, 3);
    sq += v[i] * v[i];
  }
  v[m.q - 2] = sq / 2 / v[0];  // q_J = 0 exactly
  return v;
}

UCoord random_positive_coords(const som::SOModel& m, RatRng& rng) {
  UCoord c;
  c.order = Order::O1212;
  c.s1 = rng.positive();
  c.s2 = rng.positive();
  c.v1 = random_interior_vector(m, rng);
  c.v2 = random_interior_vector(m, rng);
  return c;
}

int braid_identity_sweep(const som::SOModel& m, int count, std::uint64_t seed, Exec exec) {
  // Samples are drawn serially so both execution modes verify the same batch.
  RatRng rng(seed);
  std::vector<UCoord> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) samples.push_back(random_positive_coords(m, rng));

  auto check_one = [&m](const UCoord& c) -> bool {
    UCoord t = braid_change(m, c);
    if (F_gamma(m, c).g != F_gamma(m, t).g) return false;
    if (!braid_relations_failures(m, c, t).empty()) return false;
    if (sgn(t.s1) <= 0 || sgn(t.s2) <= 0) return false;
    if (cone_status(m, t.v1) != ConeStatus::Interior) return false;
    if (cone_status(m, t.v2) != ConeStatus::Interior) return false;
    return true;
  };

  int failures = 0;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
    for (int i = 0; i < count; ++i)
      if (!check_one(samples[i])) ++failures;
    return failures;
  }
#endif
  for (int i = 0; i < count; ++i)
    if (!check_one(samples[i])) ++failures;
  return failures;
}

}  // namespace thetapos::sg
