#include "liecoh/charlib.hpp"
#include "liecoh/cache.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

CharContext::CharContext(GroupSpec g) : rs_(std::make_unique<RootSystem>(std::move(g))) {}

Int CharContext::weyl_dim(const Weight& lam) const {
  if (!rs_->is_dominant(lam)) throw std::invalid_argument("weyl_dim needs a dominant weight");
  Weight lr(lam);
  for (int i = 0; i < rs_->rank(); i++) lr[i] += rs_->rho()[i];
  Int num = 1, den = 1;
  for (auto& a : rs_->positive_roots_alpha()) {
    num *= rs_->form_with_root(lr, a);
    den *= rs_->form_with_root(rs_->rho(), a);
  }
  return num / den;
}

Int CharContext::dim(const VirtualRep& x) const {
  Int d = 0;
  for (auto& [w, m] : x.entries) d += m * weyl_dim(w);
  return d;
}

VirtualRep CharContext::irreducible(const Weight& lam) const {
  if (!rs_->is_dominant(lam)) throw std::invalid_argument("not a dominant weight");
  VirtualRep v{group(), {}};
  v.add(lam, 1);
  return v;
}

std::map<Weight, Int> CharContext::freudenthal_compute(const Weight& lam) const {
  const auto& rs = *rs_;
  int rank = rs.rank();
  const auto& pos_alpha = rs.positive_roots_alpha();
  const auto& pos_omega = rs.positive_roots();

  // all dominant weights below lam in the root-lattice coset, found by
  // subtracting positive roots within the dominant chamber; track lam - mu
  // in simple-root coordinates for the denominator of the recursion
  std::unordered_map<Weight, std::vector<long long>, VecHash> below;
  below.emplace(lam, std::vector<long long>(rs.num_simple(), 0));
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (auto& mu : frontier) {
      const auto& acc = below.at(mu);
      for (size_t r = 0; r < pos_alpha.size(); r++) {
        Weight v(mu);
        bool dom = true;
        for (int i = 0; i < rank; i++) {
          v[i] -= pos_omega[r][i];
          if (v[i] < 0 && !rs.is_torus_coord(i)) dom = false;
        }
        if (!dom || below.count(v)) continue;
        auto nacc = acc;
        for (size_t j = 0; j < pos_alpha[r].size(); j++) nacc[j] += pos_alpha[r][j];
        below.emplace(v, std::move(nacc));
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }

  // process by descending height so every mu + k*alpha is already done
  std::vector<const Weight*> order;
  order.reserve(below.size());
  for (auto& [w, acc] : below) order.push_back(&w);
  std::unordered_map<Weight, Int, VecHash> hcache;
  auto height = [&](const Weight& w) -> const Int& {
    auto it = hcache.find(w);
    if (it == hcache.end()) it = hcache.emplace(w, rs.height_functional(w)).first;
    return it->second;
  };
  std::sort(order.begin(), order.end(), [&](const Weight* a, const Weight* b) {
    const Int &ha = height(*a), &hb = height(*b);
    if (ha != hb) return ha > hb;
    return *a > *b;
  });

  std::unordered_map<Weight, Int, VecHash> mult;
  mult[lam] = 1;
  Weight two_rho(rs.rho());
  for (auto& c : two_rho) c *= 2;
  for (auto* pmu : order) {
    const Weight& mu = *pmu;
    if (mu == lam) continue;
    Int num = 0;
    for (size_t r = 0; r < pos_alpha.size(); r++) {
      Weight v(mu);
      for (long k = 1;; k++) {
        for (int i = 0; i < rank; i++) v[i] += pos_omega[r][i];
        auto [d, s] = rs.dominant_representative(v);
        (void)s;
        auto it = mult.find(d);
        if (it == mult.end()) break;
        num += it->second * rs.form_with_root(v, pos_alpha[r]);
      }
    }
    if (num == 0) {
      mult[mu] = 0;  // cannot happen for true weights; keep table total exact
      continue;
    }
    Weight sum(mu);
    for (int i = 0; i < rank; i++) sum[i] += lam[i] + two_rho[i];
    Int den = rs.form_with_root(sum, below.at(mu));
    Int m = 2 * num;
    if (!mpz_divisible_p(m.get_mpz_t(), den.get_mpz_t()))
      throw std::runtime_error("Freudenthal recursion produced a non-integer multiplicity");
    mult[mu] = m / den;
  }

  std::map<Weight, Int> out;
  for (auto& [w, m] : mult)
    if (m != 0) out.emplace(w, m);
  return out;
}

const std::map<Weight, Int>& CharContext::dominant_character(const Weight& lam) {
  auto it = freudenthal_.find(lam);
  if (it != freudenthal_.end()) return it->second;
  if (!cache_dir_.empty()) {
    auto loaded = cache_load(cache_dir_, group().name(), lam);
    if (loaded) return freudenthal_.emplace(lam, std::move(*loaded)).first->second;
  }
  auto table = freudenthal_compute(lam);
  if (!cache_dir_.empty() && table.size() >= 100)
    cache_store(cache_dir_, group().name(), lam, table);
  return freudenthal_.emplace(lam, std::move(table)).first->second;
}

WeightMultiset CharContext::full_character(const VirtualRep& x) {
  WeightMultiset chi{group(), {}};
  for (auto& [lam, c] : x.entries)
    for (auto& [mu, m] : dominant_character(lam))
      for (auto& w : rs_->weyl_orbit(mu)) chi.add(w, c * m);
  return chi;
}

bool CharContext::is_weyl_invariant(const WeightMultiset& chi) const {
  for (auto& [w, m] : chi.entries) {
    auto d = rs_->dominant_representative(w).first;
    auto it = chi.entries.find(d);
    if (it == chi.entries.end() || it->second != m) return false;
  }
  return true;
}

VirtualRep CharContext::decompose(const WeightMultiset& chi) {
  if (!is_weyl_invariant(chi))
    throw std::invalid_argument("decompose needs a Weyl-invariant character");
  std::map<Weight, Int> dom;
  for (auto& [w, m] : chi.entries)
    if (rs_->is_dominant(w)) dom.emplace(w, m);
  return decompose_dominant(std::move(dom));
}

VirtualRep CharContext::decompose_dominant(std::map<Weight, Int> dom) {
  VirtualRep out{group(), {}};
  while (!dom.empty()) {
    // peel the highest remaining weight
    auto best = dom.begin();
    Int best_h = rs_->height_functional(best->first);
    for (auto it = std::next(dom.begin()); it != dom.end(); ++it) {
      Int h = rs_->height_functional(it->first);
      if (h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    Weight mu = best->first;
    Int c = best->second;
    out.add(mu, c);
    for (auto& [w, m] : dominant_character(mu)) {
      auto it = dom.emplace(w, 0).first;
      it->second -= c * m;
      if (it->second == 0) dom.erase(it);
    }
  }
  return out;
}

VirtualRep CharContext::tensor_with_char(const VirtualRep& x, const WeightMultiset& chi) const {
  VirtualRep out{group(), {}};
  const auto& rho = rs_->rho();
  int rank = rs_->rank();
  for (auto& [lam, c] : x.entries) {
    Weight base(lam);
    for (int i = 0; i < rank; i++) base[i] += rho[i];
    for (auto& [w, m] : chi.entries) {
      Weight v(base);
      for (int i = 0; i < rank; i++) v[i] += w[i];
      auto [d, s] = rs_->dominant_representative(std::move(v));
      if (s == 0) continue;
      for (int i = 0; i < rank; i++) d[i] -= rho[i];
      out.add(d, c * m * s);
    }
  }
  return out;
}

VirtualRep CharContext::tensor(const VirtualRep& a, const VirtualRep& b) {
  if (!(a.group == b.group)) throw std::invalid_argument("tensor across different groups");
  // expand the cheaper factor to its full character
  Int da = 0, db = 0;
  for (auto& [w, m] : a.entries) da += abs(m) * weyl_dim(w);
  for (auto& [w, m] : b.entries) db += abs(m) * weyl_dim(w);
  const VirtualRep& small = (da <= db) ? a : b;
  const VirtualRep& large = (da <= db) ? b : a;
  return tensor_with_char(large, full_character(small));
}

VirtualRep CharContext::adams(long k, const VirtualRep& x) {
  if (k < 1) throw std::invalid_argument("adams needs k >= 1");
  if (k == 1) return x;
  // the dominant part of the k-scaled character is the k-scaled dominant part
  std::map<Weight, Int> dom;
  for (auto& [lam, c] : x.entries)
    for (auto& [mu, m] : dominant_character(lam)) {
      Weight s(mu);
      for (auto& v : s) v *= k;
      auto it = dom.emplace(std::move(s), 0).first;
      it->second += c * m;
      if (it->second == 0) dom.erase(it);
    }
  return decompose_dominant(std::move(dom));
}

std::vector<VirtualRep> CharContext::lambda_powers(const VirtualRep& u, int kmax) {
  WeightMultiset chi = full_character(u);
  std::vector<VirtualRep> lam(kmax + 1, VirtualRep{group(), {}});
  lam[0].add(Weight(rs_->rank(), 0), 1);
  std::vector<WeightMultiset> scaled(kmax + 1, WeightMultiset{group(), {}});
  for (int i = 1; i <= kmax; i++)
    for (auto& [w, m] : chi.entries) {
      Weight s(w);
      for (auto& v : s) v *= i;
      scaled[i].add(s, m);
    }
  for (int k = 1; k <= kmax; k++) {
    // Newton: k lambda^k = sum_{i=1..k} (-1)^{i-1} psi^i lambda^{k-i}
    VirtualRep acc{group(), {}};
    for (int i = 1; i <= k; i++) {
      VirtualRep t = tensor_with_char(lam[k - i], scaled[i]);
      if (i % 2 == 0)
        for (auto& [w, m] : t.entries) acc.add(w, -m);
      else
        acc += t;
    }
    for (auto& [w, m] : acc.entries) {
      if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(k)))
        throw std::runtime_error("lambda power recursion produced a non-integer coefficient");
      lam[k].add(w, m / k);
    }
  }
  return lam;
}

std::vector<VirtualRep> CharContext::lambda_series_of_constituent(const Weight& lam, long kmax) {
  return lambda_powers(irreducible(lam), static_cast<int>(kmax));
}

VirtualRep CharContext::lambda_k(long k, const VirtualRep& x) {
  if (k < 1) throw std::invalid_argument("lambda_k needs k >= 1");
  // truncated lambda-series product over the constituents of x
  std::vector<VirtualRep> series(k + 1, VirtualRep{group(), {}});
  series[0].add(Weight(rs_->rank(), 0), 1);
  auto mul = [&](std::vector<VirtualRep>& s, const std::vector<VirtualRep>& t) {
    std::vector<VirtualRep> r(k + 1, VirtualRep{group(), {}});
    for (long i = 0; i <= k; i++) {
      if (s[i].entries.empty()) continue;
      for (long j = 0; i + j <= k; j++) {
        if (t[j].entries.empty()) continue;
        r[i + j] += tensor(s[i], t[j]);
      }
    }
    s = std::move(r);
  };
  for (auto& [w, c] : x.entries) {
    auto t = lambda_series_of_constituent(w, k);
    if (c > 0) {
      for (Int n = 0; n < c; n++) mul(series, t);
    } else {
      // inverse series: u0 = 1, u_j = -sum_{i=1..j} t_i u_{j-i}
      std::vector<VirtualRep> u(k + 1, VirtualRep{group(), {}});
      u[0].add(Weight(rs_->rank(), 0), 1);
      for (long j = 1; j <= k; j++)
        for (long i = 1; i <= j; i++) {
          VirtualRep p = tensor(t[i], u[j - i]);
          for (auto& [ww, mm] : p.entries) u[j].add(ww, -mm);
        }
      for (Int n = 0; n < -c; n++) mul(series, u);
    }
  }
  return series[k];
}

}  // namespace liecoh
