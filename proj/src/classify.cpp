#include "thetapos/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetapos {

std::string reason_str(Reason r, const std::string& node) {
  switch (r) {
    case Reason::SplitTotalPositivity:
      return "split-total-positivity";
    case Reason::ThetaPositive:
      return "theta-positive";
    case Reason::NotProximal:
      return "not-proximal(" + node + ")";
    case Reason::NotEven:
      return "not-even(" + node + ")";
    case Reason::NonReducedSystem:
      return "non-reduced-system";
  }
  return "?";
}

std::string Verdict::reason_string(const DynkinDiagram& d) const {
  std::string node = offending_node >= 0 ? d.nodes[offending_node] : "";
  return reason_str(reason, node);
}

Verdict admits_theta_positive(const DynkinDiagram& d, const std::vector<int>& theta) {
  d.validate();
  if (theta.empty()) throw std::invalid_argument("Theta must be nonempty");
  std::vector<bool> in_theta(d.rank(), false);
  for (int t : theta) {
    if (t < 0 || t >= d.rank()) throw std::invalid_argument("Theta node index out of range");
    in_theta[t] = true;
  }

  Verdict v;
  if (d.non_reduced) {
    v.reason = Reason::NonReducedSystem;
    return v;
  }
  for (int t = 0; t < d.rank(); ++t) {
    if (!in_theta[t]) continue;
    if (d.mult[t] != 1) {
      v.reason = Reason::NotProximal;
      v.offending_node = t;
      return v;
    }
  }
  for (int t = 0; t < d.rank(); ++t) {
    if (!in_theta[t]) continue;
    for (const auto& e : d.edges) {
      int other = -1;
      if (e.from == t)
        other = e.to;
      else if (e.to == t)
        other = e.from;
      else
        continue;
      if (in_theta[other]) continue;
      // bond from Theta into the complement: must be a double arrow aimed there
      if (e.bond != 2 || e.arrow_toward != other) {
        v.reason = Reason::NotEven;
        v.offending_node = t;
        return v;
      }
    }
  }

  bool full = std::all_of(in_theta.begin(), in_theta.end(), [](bool b) { return b; });
  v.admits = true;
  if (full) {
    v.reason = Reason::SplitTotalPositivity;
    return v;
  }
  v.reason = Reason::ThetaPositive;
  int special = -1;
  for (int t = 0; t < d.rank(); ++t) {
    if (!in_theta[t]) continue;
    for (const auto& e : d.edges) {
      int other = (e.from == t) ? e.to : (e.to == t ? e.from : -1);
      if (other >= 0 && !in_theta[other]) {
        special = t;
        break;
      }
    }
  }
  if (special < 0) throw std::logic_error("accepted Theta without a special root");
  v.special_root = special;
  return v;
}

std::vector<std::vector<int>> enumerate_positive_thetas(const DynkinDiagram& d) {
  std::vector<std::vector<int>> out;
  const int n = d.rank();
  if (n > 24) throw std::invalid_argument("diagram too large for subset enumeration");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) theta.push_back(i);
    if (admits_theta_positive(d, theta).admits) out.push_back(theta);
  }
  return out;
}

}  // namespace thetapos
