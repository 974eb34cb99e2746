#pragma once

#include <map>
#include <string>
#include <vector>

#include "toroidal/induction.hpp"

namespace toroidal {

/// Z x Lambda-graded Lie algebra spanned by matrices: the d0-degree goes in k0 (and is
/// the depth), the Lambda tag in k. Structure constants are solved from commutators.
FiniteLieView graded_matrix_algebra(int order, const std::vector<Matrix>& basis, const std::vector<std::string>& labels,
                                    const std::vector<long>& degree, const std::vector<std::vector<long>>& tags,
                                    const std::vector<long>& modulus);

/// Subspaces N_k of N indexed by Lambda tags.
using CoverFamily = std::map<std::vector<long>, std::vector<Vector>>;

struct ThinCoverExample {
  std::string name;
  FiniteLieView g;
  WeightModule n;  // module for the degree-0 part, one key, no tags
  CoverFamily cover;
};
/// x+ = E12 (even), x- = E23 (odd), z = E13 (odd), d0 = diag(1,0,1); N: z = 1, d0 = 0.
ThinCoverExample heisenberg_example();
/// sl3 graded by diag(1,1,-2)/3 and by Ad diag(1,-1,1); N the natural gl2 module split as e1 | e2.
ThinCoverExample sl3_gl2_example();

struct Decomposition {
  std::vector<std::vector<Vector>> summands;
  /// false when some summand has a commutant we could not split over the field
  bool split = true;
};
/// Irreducible summands of a completely reducible module given by action matrices.
Decomposition decompose_module(const std::vector<Matrix>& ops, int order, std::size_t dim);

/// Builds N_gr from the family, lifts it to L(N_gr) -> L(N) on d0-depths 0..-depth and
/// checks complete reducibility, the covering axioms of the images and the restriction
/// to the top.
Report thin_cover_lift_restrict(const FiniteLieView& g, const WeightModule& n, const CoverFamily& cover, long depth);

}  // namespace toroidal
