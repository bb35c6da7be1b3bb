#pragma once

#include "liecoh/lambda_ring.hpp"

#include <map>
#include <tuple>

namespace liecoh {

// restriction homomorphism R(G) -> R(K) for one of the three embeddings
struct RestrictionMap {
  GroupSpec source;  // G
  GroupSpec target;  // K

  // explicit route: image of each source fundamental as a polynomial over the
  // target fundamentals (empty when the lambda route is used)
  std::vector<FundPoly> generator_images;

  // lambda route: only the image of the generating representation u is known;
  // everything else is derived through the lambda powers of u
  VirtualRep u;        // source rep generating V(G) tensor Q
  VirtualRep u_image;  // its image over the target

  // column order of the published matrix, as 0-based source fundamental indices
  std::vector<int> display_columns;
};

RestrictionMap restriction_spin10_e6();
RestrictionMap restriction_spin12_e7();
RestrictionMap restriction_spin16_e8();
RestrictionMap restriction_by_name(const std::string& pair);  // "spin10-e6" etc.

struct InducedVMap {
  RatMat fund;                       // columns indexed by source fundamentals
  RatMat display;                    // columns permuted to the published order
  std::vector<int> display_columns;  // fund column index per display column
};

// ring-homomorphism image of p, only available on the explicit route
FundPoly restrict_poly(const FundPoly& p, const RestrictionMap& m);

InducedVMap induced_v_matrix(const RestrictionMap& m, LambdaRing& src, LambdaRing& tgt);

// (rank, nullity, transpose nullity)
std::tuple<int, int, int> rank_nullity(const RatMat& m);

// per psi^2-weight r: (kernel, cokernel) dimensions of the dualized map
// V*(K)_r -> V*(G)_r; computed from the simultaneous eigenspace blocks
std::map<int, std::pair<int, int>> weight_kernel_dims(const RestrictionMap& m,
                                                      LambdaRing& src, LambdaRing& tgt);

}  // namespace liecoh
