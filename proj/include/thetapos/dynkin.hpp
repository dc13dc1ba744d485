#pragma once

#include <string>
#include <vector>

#include "thetapos/linalg.hpp"

namespace thetapos {

struct DynkinEdge {
  int from = -1;
  int to = -1;
  int bond = 1;          // 1, 2, or 3
  int arrow_toward = -1; // node index of the shorter root; -1 for single bonds
};

/// Dynkin diagram of a system of restricted roots, with root-space
/// multiplicities attached to the nodes.
struct DynkinDiagram {
  std::string name;
  std::vector<std::string> nodes;  // labels, e.g. "a1".."an"
  std::vector<int> mult;           // dim of the restricted root space per node
  std::vector<DynkinEdge> edges;
  bool non_reduced = false;  // BC-type systems

  int rank() const { return static_cast<int>(nodes.size()); }
  int index_of(const std::string& label) const;  // -1 when absent
  std::vector<std::vector<int>> adjacency() const;
  const DynkinEdge* edge_between(int i, int j) const;

  /// Throws std::invalid_argument on structural violations (disconnected,
  /// bad bond values, mult < 1, arrow inconsistencies).
  void validate() const;

  /// Cartan integers c[i][j] = <alpha_i, alpha_j^vee>.
  QMat cartan_matrix() const;

  /// Finite type <=> the symmetrized Cartan matrix is positive definite.
  bool is_finite_type() const;

  /// Norm-squared of each simple root up to global scale (long = 2).
  /// Throws when bond arrows are inconsistent.
  std::vector<Rat> norms() const;
};

/// The built-in diagram catalog (overridable via THETA_POS_CATALOG, a path to
/// a JSON file with the same schema).
std::vector<std::pair<std::string, DynkinDiagram>> catalog();

/// Catalog entry by name; throws std::invalid_argument when missing.
DynkinDiagram catalog_entry(const std::string& name);

/// The built-in catalog JSON text.
const char* builtin_catalog_json();

}  // namespace thetapos
