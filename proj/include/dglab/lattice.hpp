#pragma once

#include <vector>

#include "dglab/numeric.hpp"

namespace dglab {

// Rounds a real point to nearby lattice points. The lattice is generated by
// integer combinations of the given columns (vectors in R^m); the target is a
// point of R^m. Returns integer coefficient vectors with respect to the
// ORIGINAL columns, best candidate first: the Babai nearest-plane rounding
// against an LLL-reduced basis, followed by small perturbations along the
// shortest reduced vectors. Fully deterministic.
std::vector<std::vector<Int>> lattice_round(const std::vector<std::vector<double>>& columns,
                                            const std::vector<double>& target);

}  // namespace dglab
