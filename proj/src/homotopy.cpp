#include "liecoh/homotopy.hpp"

#include "liecoh/branching.hpp"

#include <stdexcept>

namespace liecoh {

GradedDims homotopy_of_quotient(const TypeOf& type_k, const TypeOf& type_g,
                                const std::map<int, std::pair<int, int>>& kernel_dims) {
  // exactness bookkeeping: summed over weights, kernel - cokernel dimensions
  // must account for the rank difference of the two groups
  long balance = 0;
  for (auto& [r, kc] : kernel_dims) balance += kc.first - kc.second;
  balance += static_cast<long>(type_g.odd_degrees.size()) -
             static_cast<long>(type_k.odd_degrees.size());
  if (balance != 0)
    throw std::runtime_error("four-term sequence dimensions are inconsistent");

  GradedDims out;
  for (auto& [r, kc] : kernel_dims) {
    if (kc.first) out[2 * r] += kc.first;
    if (kc.second) out[2 * r - 1] += kc.second;
  }
  return out;
}

GradedDims sphere_bundle_correction(int fiber_dim, const GradedDims& total) {
  GradedDims out = total;
  if (fiber_dim == 1) {
    auto it = out.find(1);
    if (it != out.end() && it->second >= 1) {
      // connecting map is zero; the fibre circle survives in pi_1(N)
      if (--it->second == 0) out.erase(it);
    } else {
      // pi_1(N) = 0 forces the fibre class to be hit from pi_2 of the base
      out[2] += 1;
    }
    return out;
  }
  if (fiber_dim == 3) {
    if (total.count(3))
      throw std::runtime_error("connecting map rank not forced by dimensions: "
                               "pi_3 of the total space is nonzero");
    GradedDims r = total;
    r[4] += 1;  // the fibre S^3 is hit from pi_4 of the base
    return r;
  }
  throw std::invalid_argument("sphere_bundle_correction supports fibres S^1 and S^3 only");
}

EllipticProfile elliptic_profile(const GradedDims& dims) {
  EllipticProfile p;
  for (auto& [deg, n] : dims)
    for (int i = 0; i < n; i++)
      (deg % 2 == 0 ? p.even_degrees : p.odd_degrees).push_back(deg);
  if (p.even_degrees.size() != p.odd_degrees.size())
    throw std::invalid_argument("elliptic profile needs equally many even and odd degrees");

  // P(t) = prod (1 - t^(odd_i + 1)) / prod (1 - t^(even_i))
  std::vector<Int> num{1};
  for (int d : p.odd_degrees) {
    std::vector<Int> next(num.size() + static_cast<size_t>(d) + 1, Int(0));
    for (size_t i = 0; i < num.size(); i++) {
      next[i] += num[i];
      next[i + static_cast<size_t>(d) + 1] -= num[i];
    }
    num = std::move(next);
  }
  for (int d : p.even_degrees) {
    // exact division by 1 - t^d
    std::vector<Int> q(num.size() - static_cast<size_t>(d), Int(0));
    for (size_t i = 0; i + static_cast<size_t>(d) < num.size(); i++) {
      q[i] = num[i];
      num[i + static_cast<size_t>(d)] += num[i];
    }
    for (size_t i = q.size(); i < num.size(); i++)
      if (num[i] != 0)
        throw std::runtime_error("Poincare series is not a polynomial: inconsistent input");
    num = std::move(q);
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  p.poincare = num;
  for (auto& c : p.poincare)
    if (c < 0) throw std::runtime_error("Poincare polynomial has a negative coefficient");

  // Euler characteristic from the degree products, cross-checked against P(1)
  Int chi_num = 1, chi_den = 1;
  for (int d : p.odd_degrees) chi_num *= d + 1;
  for (int d : p.even_degrees) chi_den *= d;
  if (chi_num % chi_den != 0)
    throw std::runtime_error("Euler characteristic is not an integer");
  p.euler = chi_num / chi_den;
  Int p1 = 0;
  for (auto& c : p.poincare) p1 += c;
  if (p1 != p.euler)
    throw std::runtime_error("Euler characteristic mismatch between product formula and P(1)");
  return p;
}

GradedDims space_homotopy(const std::string& space, const std::string& cache_dir) {
  std::string pair;
  int fiber = 0;
  if (space == "N5" || space == "R5") {
    pair = "spin10-e6";
    if (space == "R5") fiber = 1;
  } else if (space == "N6" || space == "R6") {
    pair = "spin12-e7";
    if (space == "R6") fiber = 3;
  } else if (space == "R7") {
    pair = "spin16-e8";
  } else {
    throw std::invalid_argument("unknown space " + space +
                                " (expected R5, R6, R7, N5 or N6)");
  }
  auto m = restriction_by_name(pair);
  LambdaRing src(m.source), tgt(m.target);
  if (!cache_dir.empty()) {
    src.ctx().set_cache_dir(cache_dir);
    tgt.ctx().set_cache_dir(cache_dir);
  }
  auto kd = weight_kernel_dims(m, src, tgt);
  GradedDims pi = homotopy_of_quotient(tgt.type_of(), src.type_of(), kd);
  if (fiber) pi = sphere_bundle_correction(fiber, pi);
  return pi;
}

}  // namespace liecoh
