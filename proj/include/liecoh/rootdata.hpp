#pragma once

#include "liecoh/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liecoh {

enum class Series { A, B, C, D, G2, F4, E6, E7, E8, Torus };

struct Factor {
  Series series;
  int rank;
  bool operator==(const Factor&) const = default;
};

struct GroupSpec {
  std::vector<Factor> factors;
  std::string annotation;  // e.g. "hspin"; metadata only

  int rank() const;
  std::string name() const;  // canonical form, e.g. "D6xA1"

  // parses "E8", "D8", "D6xA1", "D5xT1", also "Spin10", "HSpin16", "SU2", "Sp3"
  static GroupSpec parse(const std::string& s);

  bool operator==(const GroupSpec& o) const { return factors == o.factors; }
};

// weight in fundamental-weight coordinates
using Weight = std::vector<long long>;

class RootSystem {
 public:
  explicit RootSystem(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  int rank() const { return rank_; }

  // indices of coordinates carrying simple roots (torus coordinates excluded)
  const std::vector<int>& simple_positions() const { return simple_; }
  bool is_torus_coord(int i) const { return torus_coord_[i]; }

  // cartan(i,j) = 2(alpha_i, alpha_j)/(alpha_i, alpha_i) over simple-root indices,
  // so column j holds the fundamental-weight coordinates of alpha_j
  long long cartan(int i, int j) const { return cartan_[size_t(i) * simple_.size() + j]; }
  int num_simple() const { return static_cast<int>(simple_.size()); }

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  // same roots in simple-root coordinates
  const std::vector<std::vector<long long>>& positive_roots_alpha() const {
    return positive_roots_alpha_;
  }
  const Weight& rho() const { return rho_; }
  long long dim_group() const;  // rank + 2 * #positive roots

  // scaled half-lengths d_i = (alpha_i, alpha_i)/2, integer after a global scaling
  long long dscaled(int simple_idx) const { return dsc_[simple_idx]; }

  // (w, alpha) for alpha given in simple-root coordinates, in the scaled form
  Int form_with_root(const Weight& w, const std::vector<long long>& alpha_coords) const;

  // strictly positive functional with integer values, positive on positive roots
  Int height_functional(const Weight& w) const;

  bool is_dominant(const Weight& w) const;
  // unique dominant Weyl conjugate with the sign of the folding word; sign 0 on a wall
  std::pair<Weight, int> dominant_representative(Weight w) const;
  std::vector<Weight> weyl_orbit(const Weight& dominant) const;
  Int weyl_order() const;
  Int orbit_size(const Weight& dominant) const;  // |W| / |stabilizer|

 private:
  GroupSpec spec_;
  int rank_;
  std::vector<int> simple_;        // coordinate index of each simple root
  std::vector<bool> torus_coord_;  // per coordinate
  std::vector<long long> cartan_;  // num_simple x num_simple
  std::vector<long long> dsc_;
  std::vector<Int> hfun_;  // height functional coefficients per coordinate
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<long long>> positive_roots_alpha_;
  Weight rho_;

  void build();
};

// Weyl group order of a Coxeter diagram component given by nodes of the ambient
// cartan matrix; exposed for the stabilizer computation
Int coxeter_component_order(const std::vector<int>& nodes,
                            const RootSystem& rs);

}  // namespace liecoh
