#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetapos/linalg.hpp"

namespace thetapos::som {

/// A matrix in so(b_Q): satisfies ^t M Q + Q M = 0.
struct LieElem {
  QMat m;
};

/// A matrix in SO(b_Q): satisfies ^t g Q g = Q, det g = 1.
struct GroupElem {
  QMat g;
};

/// Exact rational model of SO(3,q) = SO(b_Q), q >= 4, n = q + 3, with
/// b_Q(v,w) = ^t v Q w for the block form
///   Q = [[0,0,K],[0,J,0],[-K,0,0]],  K = [[0,1],[-1,0]],
///   J = [[0,0,1],[0,-id_{q-3},0],[1,0,0]],
/// in the basis (e1, e2, e3, g1..g_{q-3}, f3, f2, f1).
struct SOModel {
  int q = 0;
  int n = 0;  // q + 3
  QMat Q;     // n x n
  QMat J;     // (q-1) x (q-1) middle block
  QMat K;     // 2 x 2
  std::vector<std::string> basis_labels;

  // index helpers (0-based)
  int e(int i) const { return i - 1; }      // e1,e2,e3 -> 0,1,2
  int f(int i) const { return n - i; }      // f1,f2,f3 -> n-1,n-2,n-3
  int mid_lo() const { return 2; }          // first middle coordinate (e3)
  int mid_hi() const { return q; }          // last middle coordinate (f3)
};

SOModel model(int q);

/// b_J(x,y) = 1/2 ^t x J y on Q^{q-1}; q_J(x) = b_J(x,x).
Rat b_J(const SOModel& m, const QVec& x, const QVec& y);
Rat q_J(const SOModel& m, const QVec& x);

Rat b_Q(const SOModel& m, const QVec& v, const QVec& w);

bool in_so(const SOModel& m, const QMat& x);     // Lie algebra membership
bool in_group(const SOModel& m, const QMat& g);  // isometry with det 1

/// x_1(s) = exp of the alpha_1 generator; one-parameter subgroup.
GroupElem x1(const SOModel& m, const Rat& s);
/// x_2(v) = exp of the alpha_2-space element with parameter v in Q^{q-1}.
GroupElem x2(const SOModel& m, const QVec& v);

LieElem x1_generator(const SOModel& m, const Rat& s);
LieElem x2_generator(const SOModel& m, const QVec& v);

/// Exact exponential of a nilpotent element; throws "series does not
/// terminate" when X^n != 0.
GroupElem exp_nilpotent(const LieElem& x);

/// Exact logarithm of a unipotent element (Mercator series, degree < n).
LieElem log_unipotent(const GroupElem& g);

/// Cartan involution tau(X) = -^t X (the basis is maximal-compact adapted:
/// Q^2 = id, so transposition preserves so(b_Q)).
LieElem cartan_involution(const SOModel& m, const LieElem& x);

/// Weight-space decomposition under the diagonal Cartan subspace
/// a = {diag(t1,t2,t3,0,...,0,-t3,-t2,-t1)}. Keys are the weights as
/// (coefficient of e1, e2, e3); the zero key holds m + a.
std::map<QVec, std::vector<QMat>> weight_spaces(const SOModel& m);

/// Basis of so(b_Q).
std::vector<QMat> so_basis(const SOModel& m);

/// Basis of u_Theta (resp. its opposite) for Theta = {alpha_1, alpha_2}.
std::vector<QMat> u_theta_basis(const SOModel& m);
std::vector<QMat> u_theta_opp_basis(const SOModel& m);

bool in_u_theta(const SOModel& m, const QMat& x);
/// Unipotent radical membership of a group element.
bool in_U_theta(const SOModel& m, const QMat& g);

/// Rational lift of the simple Weyl reflection s_i (i = 1,2,3) to SO(b_Q),
/// built from the sl2-triple of a simple root vector.
QMat simple_lift(const SOModel& m, int i);

/// Lift of the longest Weyl element w_Delta.
QMat w_delta_lift(const SOModel& m);

/// The Theta-base of Def. "theta base": sl2-triples (E,F,D) for alpha_1 and
/// alpha_2, with E_{alpha_2} = Z0 + Z1 summing the W_{Delta - Theta}-orbit.
struct ThetaBase {
  LieElem E1, F1, D1;
  LieElem E2, F2, D2;
  LieElem Z0, Z1;
};

ThetaBase theta_base(const SOModel& m);

/// Coordinates of an element of u_{alpha_2} in the x2-parameter space,
/// i.e. the v with X = x2_generator(v); throws when X is outside u_{alpha_2}.
QVec u_alpha2_coordinates(const SOModel& m, const LieElem& x);

/// One named bracket identity of the Serre presentation check.
struct SerreLine {
  std::string id;
  std::string statement;
  bool pass = false;
};

struct SerreReport {
  std::vector<SerreLine> lines;
  bool all_pass = false;
  std::string conclusion;
};

/// Verifies the presentation relations for the Theta-base at d = 1; on
/// success the generated subalgebra is split of type B2.
SerreReport serre_check(const SOModel& m, const ThetaBase& base);

struct PrincipalSL2 {
  LieElem E, F, D;
  long q1 = 0, q2 = 0;  // D = q1 D1 + q2 D2
};

/// The principal sl2 of the split subalgebra: D = sum of positive-root
/// coroots of B2 expressed over the simple ones, E = q1 E1 + q2 E2, F = F1 + F2.
PrincipalSL2 principal_sl2(const SOModel& m, const ThetaBase& base);

}  // namespace thetapos::som
