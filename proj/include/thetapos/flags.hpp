#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetapos/semigroup.hpp"
#include "thetapos/somodel.hpp"

namespace thetapos::fl {

/// Isotropic (line in plane) flag in R^{3,q}, stored canonically: the plane
/// as reduced row-echelon 2 x n rows, the line scaled to leading coefficient 1.
struct Flag {
  QVec line;
  QMat plane;  // 2 x n, RREF rows spanning the plane

  friend bool operator==(const Flag& a, const Flag& b) {
    return a.line == b.line && a.plane == b.plane;
  }
  friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }
};

/// Builds the flag (span v1, span(v1, v2)); throws when the isotropy or
/// independence conditions fail.
Flag flag_from(const som::SOModel& m, const QVec& v1, const QVec& v2);

/// E+ = (e1, e1 + e2-plane), E- = (f1, f1 + f2-plane).
std::pair<Flag, Flag> standard_flags(const som::SOModel& m);

Flag act(const som::SOModel& m, const QMat& g, const Flag& f);

bool is_valid_flag(const som::SOModel& m, const Flag& f);

/// Transversality: nonzero line pairing and invertible plane Gram matrix;
/// calibrated to hold exactly on the open Bruhat class.
bool is_transverse(const som::SOModel& m, const Flag& f, const Flag& g);

/// Bruhat relative position among the 16 double-coset classes.
struct PairPosition {
  std::string label;
  std::array<int, 9> signature;
};

/// Signature: (rk Gram(P,P'), line pairing != 0, b(l,P') = 0, b(P,l') = 0,
/// dim(P cap P'), l in P', l' in P, dim(P cap P'^perp), dim(l cap l')).
std::array<int, 9> position_signature(const som::SOModel& m, const Flag& f, const Flag& g);

PairPosition relative_position(const som::SOModel& m, const Flag& f, const Flag& g);

/// The calibration constants: signature -> class label, and the representative
/// flags of the 16 classes measured against E- (regeneration data).
const std::map<std::array<int, 9>, std::string>& position_table();
std::vector<std::pair<std::string, Flag>> position_representatives(const som::SOModel& m);

/// The unique u in U_Theta with u . E- = x, for x transverse to E+;
/// throws "flag is not transverse to E+" otherwise.
som::GroupElem recover_unipotent(const som::SOModel& m, const Flag& x);

/// Positivity of the triple (E+, x, E-).
bool positive_triple_std(const som::SOModel& m, const Flag& x);

enum class DiamondSide { D, Dopp };

/// Membership of x in the standard diamond U^{>0}_Theta . E- or its opposite.
bool diamond_membership(const som::SOModel& m, const Flag& x, DiamondSide side);

/// Positivity of the quadruple (E+, x, E-, y).
bool positive_quadruple_axby(const som::SOModel& m, const Flag& x, const Flag& y);

/// Positivity of the quadruple (E+, x, y, E-).
bool positive_quadruple_axyb(const som::SOModel& m, const Flag& x, const Flag& y);

/// Positivity of the tuple (E+, fs[0], ..., fs[k-1], E-) via successive
/// unipotent ratios.
bool positive_tuple_std(const som::SOModel& m, const std::vector<Flag>& fs);

/// Point of the positive circle: exp(t F) . E+ for finite t, E- for t = infinity
/// (nullopt).
Flag circle_point(const som::SOModel& m, const som::PrincipalSL2& p,
                  const std::optional<Rat>& t);

// ---------------------------------------------------------------------------
// Float backend: best-effort positivity for arbitrary transverse pairs, where
// normalizing to the standard pair may require real square roots.

/// Triple positivity of (a, x, b) for a general transverse pair (a, b),
/// computed in double precision with the given zero tolerance.
bool positive_triple_general(const som::SOModel& m, const Flag& a, const Flag& x, const Flag& b,
                             double tol = 1e-9);

}  // namespace thetapos::fl
