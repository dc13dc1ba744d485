#pragma once

#include <cstdint>
#include <vector>

#include "thetapos/weyl.hpp"

namespace thetapos::sweep {

/// Theta-lengths of a batch of elements; order matches the input.
std::vector<int> theta_lengths(const ThetaStructure& ts, const std::vector<QMat>& elems,
                               Exec exec = Exec::Parallel);

/// Counts violations of l_Theta(xw) = l_Theta(wx) = l_Theta(w) over the whole
/// group W and all x in W_{Delta \ Theta}. Zero on Theta-positive structures.
size_t theta_length_invariance_violations(const ThetaStructure& ts, Exec exec = Exec::Parallel);

}  // namespace thetapos::sweep
