#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetapos/dynkin.hpp"

namespace thetapos {

enum class Reason {
  SplitTotalPositivity,
  ThetaPositive,
  NotProximal,
  NotEven,
  NonReducedSystem,
};

std::string reason_str(Reason r, const std::string& node = "");

/// Outcome of the positivity test for a pair (diagram, Theta).
struct Verdict {
  bool admits = false;
  std::optional<int> special_root;  // node index; set iff admits and Theta != Delta
  Reason reason = Reason::NotEven;
  int offending_node = -1;  // for NotProximal / NotEven

  std::string reason_string(const DynkinDiagram& d) const;
};

/// Decides whether (d, Theta) carries a Theta-positive structure, testing the
/// two diagram criteria: every Theta root space is one-dimensional, and every
/// bond from Theta into its complement is a double arrow pointing at the
/// complement. Theta is a set of node indices; empty Theta throws.
Verdict admits_theta_positive(const DynkinDiagram& d, const std::vector<int>& theta);

/// All nonempty admissible subsets, each sorted, in lexicographic order.
std::vector<std::vector<int>> enumerate_positive_thetas(const DynkinDiagram& d);

}  // namespace thetapos
