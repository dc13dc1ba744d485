#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thetapos/dynkin.hpp"
#include "thetapos/rootsys.hpp"

namespace thetapos {

/// Execution policy for the enumeration kernels. Parallel variants are
/// OpenMP-backed and return exactly the same (canonically ordered) results as
/// the serial reference implementations.
enum class Exec { Serial, Parallel };

/// Word in the simple generators; letters are 0-based node indices.
using WeylWord = std::vector<int>;

namespace weyl {

QMat simple_reflection(const RootSystem& rs, int i);
QMat word_matrix(const RootSystem& rs, const WeylWord& w);

/// Throws "not a Weyl element" when w does not permute the root set.
void check_weyl(const RootSystem& rs, const QMat& w);

/// Length as the inversion count #{alpha > 0 : w(alpha) < 0}.
int length(const RootSystem& rs, const QMat& w);

/// Reduced word by greedy descent; multiplies back to w.
WeylWord reduced_word(const RootSystem& rs, const QMat& w);

/// Longest element of the standard parabolic W_S (S = node indices).
QMat longest_element(const RootSystem& rs, const std::vector<int>& S);

/// Order of the product of two group elements (throws beyond a safety cap).
int element_order(const QMat& m, int cap = 64);

/// Complete group enumeration by closure under the simple reflections;
/// result sorted canonically.
std::vector<QMat> enumerate_group(const RootSystem& rs, Exec exec = Exec::Parallel);
std::vector<QMat> enumerate_subgroup(const std::vector<QMat>& gens, Exec exec = Exec::Parallel,
                                     size_t cap = 2000000);

/// All reduced words of w, by breadth-first search over braid moves.
/// Throws "element too long" when length(w) exceeds cap.
std::set<WeylWord> all_reduced_words(const RootSystem& rs, const QMat& w, int cap = 12,
                                     Exec exec = Exec::Parallel);

}  // namespace weyl

/// A diagram together with an admissible Theta: carries the Theta-Weyl group
/// generators sigma_alpha as words and matrices.
struct ThetaStructure {
  DynkinDiagram diagram;
  RootSystem rs;
  std::vector<int> theta;               // sorted node indices
  std::optional<int> special_root;      // absent when Theta = Delta
  std::map<int, WeylWord> sigma_words;  // node -> reduced word of sigma
  std::map<int, QMat> sigma_elems;

  std::vector<int> complement() const;  // Delta \ Theta
  bool in_theta(int node) const;
};

namespace weyl {

/// Validates (d, Theta) via the classification and builds the generators
/// sigma_alpha; sigma of the special root is w_{{a}+complement} * w_complement.
ThetaStructure theta_structure(const DynkinDiagram& d, const std::vector<int>& theta);

/// w_max^Theta = w_Delta * w_{Delta \ Theta}.
QMat w_max_theta(const ThetaStructure& ts);

/// One of "same-as-G", "A1", "B<p>", "G2".
std::string coxeter_type_of_wtheta(const ThetaStructure& ts);

/// Number of Theta-letters in a reduced word of w.
int theta_length(const ThetaStructure& ts, const QMat& w);

/// Expands a word over R(Theta) (letters = Theta node indices) to a word over
/// Delta; throws when the input is not reduced in (W(Theta), R(Theta)).
WeylWord expand_theta_word(const ThetaStructure& ts, const std::vector<int>& theta_word);

/// Length table of W(Theta) in its own generating set R(Theta).
std::map<QMat, int> wtheta_length_table(const ThetaStructure& ts);

}  // namespace weyl

}  // namespace thetapos
