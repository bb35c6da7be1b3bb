#include "liecoh/lambda_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

namespace {

// affine product rule in S(G): s(xy) = eps_y s(x) + eps_x s(y) - eps_x eps_y
SClass s_product(const SClass& a, const Int& ea, const SClass& b, const Int& eb) {
  SClass r;
  r.constant = eb * a.constant + ea * b.constant - ea * eb;
  r.linear.resize(a.linear.size());
  for (size_t i = 0; i < a.linear.size(); i++)
    r.linear[i] = eb * a.linear[i] + ea * b.linear[i];
  return r;
}

}  // namespace

Int LambdaRing::generator_dim(int i) const {
  if (cx_.rs().is_torus_coord(i)) return 1;
  Weight w(rank(), 0);
  w[i] = 1;
  return cx_.weyl_dim(w);
}

SClass LambdaRing::s_generator(int coord, bool inverse) const {
  SClass s;
  s.constant = 0;
  s.linear.assign(rank(), Int(0));
  s.linear[coord] = 1;
  if (inverse) {
    if (!cx_.rs().is_torus_coord(coord))
      throw std::invalid_argument("negative exponent on a non-torus generator");
    // xi^-1 = 2 - xi mod I^2, from (xi - 1)(xi^-1 - 1) in I^2
    s.constant = 2;
    s.linear[coord] = -1;
  }
  return s;
}

SClass LambdaRing::s_of_weight(const Weight& lam) {
  auto it = s_memo_.find(lam);
  if (it != s_memo_.end()) return it->second;

  SClass result;
  bool zero = std::all_of(lam.begin(), lam.end(), [](long long c) { return c == 0; });
  if (zero) {
    result.constant = 1;
    result.linear.assign(rank(), Int(0));
    s_memo_.emplace(lam, result);
    return result;
  }

  // a torus charge is a character twist: V_lam = V_mu (x) xi^(+-1) exactly
  for (int t = 0; t < rank(); t++) {
    if (!cx_.rs().is_torus_coord(t) || lam[t] == 0) continue;
    Weight mu(lam);
    bool inv = lam[t] < 0;
    mu[t] += inv ? 1 : -1;
    Int emu = cx_.weyl_dim(mu);
    SClass smu = s_of_weight(mu);
    result = s_product(smu, emu, s_generator(t, inv), 1);
    s_memo_.emplace(lam, result);
    return result;
  }

  int nonzero = 0, gen = -1;
  for (int i = 0; i < rank(); i++)
    if (lam[i] != 0) {
      nonzero += static_cast<int>(lam[i]);
      if (gen < 0 || generator_dim(i) < generator_dim(gen)) gen = i;
    }
  if (nonzero == 1) {
    // fundamental generator itself
    result = s_generator(gen, false);
    s_memo_.emplace(lam, result);
    return result;
  }

  // peel the cheapest fundamental: V_lam = V_mu (x) rho_gen minus lower terms
  Weight mu(lam);
  mu[gen] -= 1;
  Weight wgen(rank(), 0);
  wgen[gen] = 1;
  VirtualRep prod = cx_.tensor(cx_.irreducible(mu), cx_.irreducible(wgen));
  Int emu = cx_.weyl_dim(mu);
  result = s_product(s_of_weight(mu), emu, s_generator(gen, false), generator_dim(gen));
  for (auto& [nu, c] : prod.entries) {
    if (nu == lam) continue;
    SClass snu = s_of_weight(nu);
    result.constant -= c * snu.constant;
    for (int i = 0; i < rank(); i++) result.linear[i] -= c * snu.linear[i];
  }
  s_memo_.emplace(lam, result);
  return result;
}

SClass LambdaRing::s_class(const VirtualRep& x) {
  SClass acc;
  acc.constant = 0;
  acc.linear.assign(rank(), Int(0));
  for (auto& [lam, c] : x.entries) {
    SClass s = s_of_weight(lam);
    acc.constant += c * s.constant;
    for (int i = 0; i < rank(); i++) acc.linear[i] += c * s.linear[i];
  }
  return acc;
}

SClass LambdaRing::s_reduce(const FundPoly& p) {
  SClass acc;
  acc.constant = 0;
  acc.linear.assign(rank(), Int(0));
  for (auto& [expo, coeff] : p.terms) {
    SClass s;
    s.constant = 1;
    s.linear.assign(rank(), Int(0));
    Int eps = 1;
    for (int i = 0; i < rank(); i++) {
      if (expo[i] == 0) continue;
      bool inv = expo[i] < 0;
      SClass g = s_generator(i, inv);
      Int eg = generator_dim(i);
      for (long long rep = 0; rep < std::abs(expo[i]); rep++) {
        s = s_product(s, eps, g, eg);
        eps *= eg;
      }
    }
    acc.constant += coeff * s.constant;
    for (int i = 0; i < rank(); i++) acc.linear[i] += coeff * s.linear[i];
  }
  return acc;
}

std::vector<Rat> LambdaRing::v_class(const SClass& s) const {
  std::vector<Rat> v(s.linear.size());
  for (size_t i = 0; i < s.linear.size(); i++) v[i] = Rat(s.linear[i]);
  return v;
}

VirtualRep LambdaRing::evaluate(const FundPoly& p) {
  VirtualRep out{group(), {}};
  for (auto& [expo, coeff] : p.terms) {
    VirtualRep m = cx_.irreducible(Weight(rank(), 0));
    for (int i = 0; i < rank(); i++) {
      if (expo[i] == 0) continue;
      Weight g(rank(), 0);
      if (expo[i] < 0 && !cx_.rs().is_torus_coord(i))
        throw std::invalid_argument("negative exponent on a non-torus generator");
      g[i] = expo[i] > 0 ? 1 : -1;
      VirtualRep gen = cx_.irreducible(g);
      for (long long rep = 0; rep < std::abs(expo[i]); rep++) m = cx_.tensor(m, gen);
    }
    for (auto& [w, c] : m.entries) out.add(w, coeff * c);
  }
  return out;
}

FundPoly LambdaRing::to_fund_poly(const VirtualRep& x) {
  FundPoly out{group(), {}};
  for (auto& [lam, c] : x.entries) {
    auto it = poly_memo_.find(lam);
    if (it == poly_memo_.end()) {
      // V_lam = monomial prod w_i^(lam_i) minus the lower constituents
      FundPoly mono{group(), {}};
      mono.add(std::vector<long long>(lam.begin(), lam.end()), 1);
      VirtualRep prod = evaluate(mono);
      FundPoly poly = mono;
      for (auto& [nu, m] : prod.entries) {
        if (nu == lam) continue;
        VirtualRep vnu{group(), {}};
        vnu.add(nu, m);
        FundPoly pnu = to_fund_poly(vnu);
        for (auto& [e, cc] : pnu.terms) poly.add(e, -cc);
      }
      it = poly_memo_.emplace(lam, std::move(poly)).first;
    }
    for (auto& [e, cc] : it->second.terms) out.add(e, c * cc);
  }
  return out;
}

RatMat LambdaRing::adams_matrix_on_V(long k) {
  if (k < 1) throw std::invalid_argument("adams_matrix_on_V needs k >= 1");
  int n = rank();
  RatMat m(n, n);
  for (int j = 0; j < n; j++) {
    if (cx_.rs().is_torus_coord(j)) {
      m(j, j) = static_cast<long>(k);  // psi^k(xi) = xi^k = k [xi] mod constants
      continue;
    }
    Weight w(n, 0);
    w[j] = 1;
    auto col = v_class(s_class(cx_.adams(k, cx_.irreducible(w))));
    for (int i = 0; i < n; i++) m(i, j) = col[i];
  }
  return m;
}

TypeOf LambdaRing::type_of() {
  RatMat m2 = adams_matrix_on_V(2);
  auto poly = m2.charpoly();
  // peel roots 2^r by exact synthetic division
  std::vector<int> rs;
  long dim_bound = cx_.rs().dim_group();
  int degree = static_cast<int>(poly.size()) - 1;
  for (long r = 1; degree > 0 && r <= dim_bound; r++) {
    Rat root = Rat(Int(1) << static_cast<unsigned>(r));
    while (degree > 0) {
      std::vector<Rat> q(degree);
      Rat carry = poly[degree];
      for (int i = degree - 1; i >= 0; i--) {
        q[i] = carry;
        carry = poly[i] + carry * root;
      }
      if (carry != 0) break;
      poly = q;
      poly.resize(degree);
      degree--;
      rs.push_back(static_cast<int>(r));
    }
  }
  if (degree > 0)
    throw std::runtime_error("psi^2 eigenvalue is not a power of 2: characteristic polynomial "
                             "did not factor; this indicates a bug upstream");
  TypeOf t;
  for (int r : rs) t.odd_degrees.push_back(2 * r - 1);
  std::sort(t.odd_degrees.begin(), t.odd_degrees.end());
  return t;
}

std::pair<RatMat, Int> LambdaRing::cyclic_matrix(const VirtualRep& u) {
  int n = rank();
  auto pows = cx_.lambda_powers(u, n);
  RatMat m(n, n);
  for (int j = 0; j < n; j++) {
    auto col = v_class(s_class(pows[j + 1]));
    for (int i = 0; i < n; i++) m(i, j) = col[i];
  }
  if (!m.is_integral())
    throw std::runtime_error("cyclic matrix has a non-integral entry; upstream bug");
  Rat d = m.det();
  return {m, Int(d)};
}

ExteriorModel LambdaRing::exterior_model() {
  ExteriorModel em;
  for (int t : type_of().odd_degrees) em.weights.push_back((t + 1) / 2);
  return em;
}

VirtualRep LambdaRing::minimal_rep() {
  int n = rank();
  int best = -1;
  for (int i = 0; i < n; i++) {
    if (cx_.rs().is_torus_coord(i)) continue;
    if (best < 0 || generator_dim(i) < generator_dim(best)) best = i;
  }
  if (best < 0) throw std::invalid_argument("no fundamental representation (pure torus)");
  Weight w(n, 0);
  w[best] = 1;
  return cx_.irreducible(w);
}

}  // namespace liecoh
