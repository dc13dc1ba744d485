#pragma once

#include <map>
#include <utility>
#include <vector>

#include "thetapos/dynkin.hpp"
#include "thetapos/linalg.hpp"

namespace thetapos {

/// Finite root system realized as exact rational vectors. B and F types use
/// the explicit Euclidean coordinates of the longest-element fixtures; A, C, D, G use
/// Bourbaki coordinates; anything else falls back to the simple-root basis
/// with the symmetrized Cartan matrix as inner product.
struct RootSystem {
  int rank = 0;  // number of simple roots
  int dim = 0;   // dimension of the realization space
  std::vector<QVec> roots;
  std::vector<QVec> simple;    // simple[i] = root vector of diagram node i
  std::vector<bool> positive;  // parallel to roots
  QMat gram;                   // inner product on the realization space

  Rat inner(const QVec& u, const QVec& v) const;
  /// Cartan integer <u, v^vee> = 2 (u,v) / (v,v).
  Rat pairing(const QVec& u, const QVec& v) const;
  QVec reflect(const QVec& root, const QVec& v) const;  // reflection in `root`

  bool is_root(const QVec& v) const;
  int root_index(const QVec& v) const;  // -1 when absent
  int num_positive() const;

  /// Expansion of a root in the simple basis (exact).
  QVec simple_coefficients(const QVec& root) const;

  /// Positive roots outside Span(Delta \ Theta); Theta as node indices.
  std::vector<QVec> sigma_theta_plus(const std::vector<int>& theta) const;

 private:
  mutable std::map<QVec, int> index_;
  void build_index() const;
};

/// Generates the full root system by closing the simple roots under the
/// simple reflections. Throws "infinite-type diagram" for non-finite input
/// and rejects non-reduced (BC) diagrams.
RootSystem roots_from_diagram(const DynkinDiagram& d);

/// p = max{n : beta - n*alpha is a root}, q = max{n : beta + n*alpha is a root}.
/// Both arguments must be roots.
std::pair<int, int> alpha_chain(const RootSystem& rs, const QVec& alpha, const QVec& beta);

}  // namespace thetapos
