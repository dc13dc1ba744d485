#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetapos/somodel.hpp"
#include "thetapos/weyl.hpp"  // Exec

namespace thetapos::sg {

enum class Order { O1212, O2121 };

/// Coordinates for the product-of-exponentials charts. For order 1212 the
/// element is x1(s1) x2(v1) x1(s2) x2(v2); for order 2121 it is
/// x2(v2) x1(s2) x2(v1) x1(s1).
struct UCoord {
  Rat s1, s2;
  QVec v1, v2;
  Order order = Order::O1212;
};

enum class ConeStatus { Interior, BoundaryNonzero, Zero, Outside };

/// Position of v relative to the invariant cone
/// c = closure{ q_J > 0, v_0 > 0 } in R^{1,q-2}.
ConeStatus cone_status(const som::SOModel& m, const QVec& v);
bool in_closed_cone(const som::SOModel& m, const QVec& v);

som::GroupElem F_gamma(const som::SOModel& m, const UCoord& u);

/// Entry map of the 1212 chart: where the decode-relevant quantities sit in
/// the matrix of x1(s1) x2(v1) x1(s2) x2(v2). Columns `col_*` refer to the
/// middle rows 2..q, which carry J times the stated vector.
struct ChartEntries {
  std::pair<int, int> s1s2_qJ_v1;  // = s1 s2 qJ(v1)
  std::pair<int, int> s2_qJ_v1;    // = s2 qJ(v1)
  int col_s2_v1;                   // middle of this column = J(s2 v1)
  std::pair<int, int> s_sum;       // = s1 + s2
  std::pair<int, int> qJ_vsum;     // = qJ(v1 + v2)
  int col_vsum;                    // middle of this column = J(v1 + v2)
  std::pair<int, int> mixed;       // = s1 qJ(v1+v2) + s2 qJ(v2)
};

/// The frozen entry positions for a model of size n = q + 3.
ChartEntries chart_entries(const som::SOModel& m);

/// Inverts F_gamma on the open chart of the given order; nullopt (not in
/// chart) when the defining denominators vanish or g is outside the image.
/// Throws when g is not in U_Theta.
std::optional<UCoord> decode(const som::SOModel& m, const som::GroupElem& g, Order order);

/// g in U_Theta^{>0}: decodes in the 1212 chart with s1, s2 > 0 and
/// v1, v2 interior. Throws when g is not in U_Theta.
bool is_positive(const som::SOModel& m, const som::GroupElem& g);

/// Change of coordinates between the two reduced-word charts. The closed
/// forms are involutive: applying them to the output returns the input.
/// Requires strictly interior input; throws on boundary degeneracies.
UCoord braid_change(const som::SOModel& m, const UCoord& u);

/// a(v1,v2) = q_J(v1+v2) v1 - q_J(v1)(v1+v2); maps interior pairs into the
/// interior cone.
QVec a_op(const som::SOModel& m, const QVec& v1, const QVec& v2);

/// Exact relation checks (the seven scalar/vector identities tying the two
/// charts together); returns the list of failures, empty when all hold.
std::vector<std::string> braid_relations_failures(const som::SOModel& m, const UCoord& c1212,
                                                  const UCoord& c2121);

/// One of the 16 double-coset strata of the nonnegative semigroup.
struct Stratum {
  std::string label;  // reduced-word label, e.g. "(s2s3s2)s1"
  UCoord coords;      // canonical parameters in D_w (order 1212)
};

/// Identifies the stratum of g inside U_Theta^{>=0}, or nullopt when g is not
/// nonnegative. Throws when g is not in U_Theta. With assert_unique set, all
/// recovery hypotheses are tried and uniqueness of the match is enforced.
std::optional<Stratum> stratify(const som::SOModel& m, const som::GroupElem& g,
                                bool assert_unique = false);

/// The 16 stratum labels in the order of the domain list.
const std::vector<std::string>& stratum_labels();

/// A point of the U_r counterexample family: unitriangular 3x3 with
/// a, b >= 0 and 0 <= c <= r a b.
struct UrElem {
  Rat a, b, c;
  Rat r;
};

bool ur_member(const UrElem& x);
/// Semigroup product; throws when the factors violate membership or mix r's.
UrElem ur_product(const UrElem& x, const UrElem& y);

// Seeded samplers used by the property tests and the acceptance suite.
QVec random_interior_vector(const som::SOModel& m, RatRng& rng);
QVec random_boundary_vector(const som::SOModel& m, RatRng& rng);
UCoord random_positive_coords(const som::SOModel& m, RatRng& rng);

/// Batch verification of the braid identity and relations on seeded random
/// interior samples; returns the number of failing samples (0 expected).
/// Serial and parallel execution produce identical results.
int braid_identity_sweep(const som::SOModel& m, int count, std::uint64_t seed,
                         Exec exec = Exec::Parallel);

}  // namespace thetapos::sg
