#pragma once

#include "liecoh/numeric.hpp"
#include "liecoh/rootdata.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace liecoh {

// virtual character: weight -> multiplicity, zero entries dropped
struct WeightMultiset {
  GroupSpec group;
  std::unordered_map<Weight, Int, VecHash> entries;

  void add(const Weight& w, const Int& m) {
    if (m == 0) return;
    auto it = entries.emplace(w, 0).first;
    it->second += m;
    if (it->second == 0) entries.erase(it);
  }
  Int virtual_dim() const {
    Int d = 0;
    for (auto& [w, m] : entries) d += m;
    return d;
  }
};

// virtual representation: dominant highest weight -> multiplicity
struct VirtualRep {
  GroupSpec group;
  std::map<Weight, Int> entries;

  void add(const Weight& w, const Int& m) {
    if (m == 0) return;
    auto it = entries.emplace(w, 0).first;
    it->second += m;
    if (it->second == 0) entries.erase(it);
  }
  VirtualRep& operator+=(const VirtualRep& o) {
    for (auto& [w, m] : o.entries) add(w, m);
    return *this;
  }
  bool operator==(const VirtualRep& o) const {
    return group == o.group && entries == o.entries;
  }
};

// Character engine for one group: Freudenthal tables, decomposition, tensor
// products, Adams and lambda operations. Owns the memo caches, so reuse one
// context per group.
class CharContext {
 public:
  explicit CharContext(GroupSpec g);

  const RootSystem& rs() const { return *rs_; }
  const GroupSpec& group() const { return rs_->spec(); }
  void set_cache_dir(std::string dir) { cache_dir_ = std::move(dir); }

  Int weyl_dim(const Weight& lam) const;
  Int dim(const VirtualRep& x) const;

  // Freudenthal: multiplicities of the dominant weights of V_lam
  const std::map<Weight, Int>& dominant_character(const Weight& lam);

  WeightMultiset full_character(const VirtualRep& x);
  bool is_weyl_invariant(const WeightMultiset& chi) const;

  VirtualRep irreducible(const Weight& lam) const;
  VirtualRep decompose(const WeightMultiset& chi);
  VirtualRep decompose_dominant(std::map<Weight, Int> dom);

  VirtualRep tensor(const VirtualRep& a, const VirtualRep& b);
  // Klimyk: sum of x's constituents against an explicit Weyl-invariant character
  VirtualRep tensor_with_char(const VirtualRep& x, const WeightMultiset& chi) const;

  VirtualRep adams(long k, const VirtualRep& x);
  VirtualRep lambda_k(long k, const VirtualRep& x);
  // lambda^0..lambda^kmax of an actual rep whose full character is affordable;
  // Newton recursion over scaled characters, no Freudenthal on the results
  std::vector<VirtualRep> lambda_powers(const VirtualRep& u, int kmax);

 private:
  std::unique_ptr<RootSystem> rs_;
  std::string cache_dir_;
  std::unordered_map<Weight, std::map<Weight, Int>, VecHash> freudenthal_;

  std::map<Weight, Int> freudenthal_compute(const Weight& lam) const;
  std::vector<VirtualRep> lambda_series_of_constituent(const Weight& lam, long kmax);
};

}  // namespace liecoh
