#include "thetapos/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thetapos::sweep {

std::vector<int> theta_lengths(const ThetaStructure& ts, const std::vector<QMat>& elems, Exec exec) {
  std::vector<int> out(elems.size());
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < elems.size(); ++i) out[i] = weyl::theta_length(ts, elems[i]);
    return out;
  }
#endif
  for (size_t i = 0; i < elems.size(); ++i) out[i] = weyl::theta_length(ts, elems[i]);
  return out;
}

size_t theta_length_invariance_violations(const ThetaStructure& ts, Exec exec) {
  std::vector<QMat> group = weyl::enumerate_group(ts.rs, exec);
  std::vector<QMat> levi;
  {
    std::vector<QMat> gens;
    for (int i : ts.complement()) gens.push_back(weyl::simple_reflection(ts.rs, i));
    levi = gens.empty() ? std::vector<QMat>{QMat::identity(ts.rs.dim)}
                        : weyl::enumerate_subgroup(gens, exec);
  }

  size_t bad = 0;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
    for (size_t i = 0; i < group.size(); ++i) {
      int base = weyl::theta_length(ts, group[i]);
      for (const auto& x : levi) {
        if (weyl::theta_length(ts, x * group[i]) != base) ++bad;
        if (weyl::theta_length(ts, group[i] * x) != base) ++bad;
      }
    }
    return bad;
  }
#endif
  for (const auto& w : group) {
    int base = weyl::theta_length(ts, w);
    for (const auto& x : levi) {
      if (weyl::theta_length(ts, x * w) != base) ++bad;
      if (weyl::theta_length(ts, w * x) != base) ++bad;
    }
  }
  return bad;
}

}  // namespace thetapos::sweep
