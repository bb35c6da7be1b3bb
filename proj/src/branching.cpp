#include "liecoh/branching.hpp"

#include <set>
#include <stdexcept>

namespace liecoh {

namespace {

FundPoly mono(const GroupSpec& g, int rank, std::initializer_list<std::pair<int, long long>> exps,
              long long coeff = 1) {
  FundPoly p{g, {}};
  std::vector<long long> e(rank, 0);
  for (auto& [i, a] : exps) e[i] = a;
  p.add(e, static_cast<long>(coeff));
  return p;
}

}  // namespace

RestrictionMap restriction_spin10_e6() {
  RestrictionMap m;
  m.source = GroupSpec::parse("E6");
  m.target = GroupSpec::parse("Spin10");
  auto& d5 = m.target;
  // target fundamentals: v1, v2, v3, delta-, delta+
  auto one = mono(d5, 5, {});
  auto v1 = mono(d5, 5, {{0, 1}});
  auto v2 = mono(d5, 5, {{1, 1}});
  auto v3 = mono(d5, 5, {{2, 1}});
  auto dm = mono(d5, 5, {{3, 1}});
  auto dp = mono(d5, 5, {{4, 1}});
  m.generator_images.resize(6, FundPoly{d5, {}});
  m.generator_images[0] = v1 + dm + one;                    // rho1
  m.generator_images[1] = v2 + dp + dm + one;               // adjoint
  m.generator_images[2] = v1 + v2 + v3 + dm + v1 * dm;      // lambda^2 rho1
  m.generator_images[3] = v2 + v3 + v3 + v2 * dp + v2 * dm + v1 * v3;  // lambda^3 rho1
  m.generator_images[4] = v1 + v2 + v3 + dp + v1 * dp;      // lambda^2 rho2
  m.generator_images[5] = v1 + dp + one;                    // rho2
  // published column order: a, rho1, rho2, lambda^2 rho1, lambda^2 rho2, lambda^3 rho1
  m.display_columns = {1, 0, 5, 2, 4, 3};
  return m;
}

RestrictionMap restriction_spin12_e7() {
  RestrictionMap m;
  m.source = GroupSpec::parse("E7");
  m.target = GroupSpec::parse("Spin12");
  // u = 56-dim rep; image rho12 (x) zeta + delta+ evaluated on the Spin factor
  // (zeta -> 2), so 2 v1 + delta+
  m.u = VirtualRep{m.source, {{{0, 0, 0, 0, 0, 0, 1}, 1}}};
  m.u_image = VirtualRep{m.target, {{{1, 0, 0, 0, 0, 0}, 2}, {{0, 0, 0, 0, 0, 1}, 1}}};
  m.display_columns = {0, 1, 2, 3, 4, 5, 6};
  return m;
}

RestrictionMap restriction_spin16_e8() {
  RestrictionMap m;
  m.source = GroupSpec::parse("E8");
  m.target = GroupSpec::parse("HSpin16");
  // u = adjoint; image lambda^2 rho16 + delta16+
  m.u = VirtualRep{m.source, {{{0, 0, 0, 0, 0, 0, 0, 1}, 1}}};
  m.u_image = VirtualRep{m.target, {{{0, 1, 0, 0, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 0, 0, 0, 1}, 1}}};
  m.display_columns = {0, 1, 2, 3, 4, 5, 6, 7};
  return m;
}

RestrictionMap restriction_by_name(const std::string& pair) {
  if (pair == "spin10-e6") return restriction_spin10_e6();
  if (pair == "spin12-e7") return restriction_spin12_e7();
  if (pair == "spin16-e8") return restriction_spin16_e8();
  throw std::invalid_argument("unknown restriction pair: " + pair +
                              " (expected spin10-e6, spin12-e7 or spin16-e8)");
}

FundPoly restrict_poly(const FundPoly& p, const RestrictionMap& m) {
  if (m.generator_images.empty())
    throw std::runtime_error("restriction image not derivable: only the generating "
                             "representation's image is known for this embedding");
  FundPoly out{m.target, {}};
  for (auto& [expo, coeff] : p.terms) {
    FundPoly term{m.target, {}};
    term.add(std::vector<long long>(m.target.rank(), 0), 1);
    for (size_t i = 0; i < expo.size(); i++) {
      if (expo[i] < 0) throw std::invalid_argument("negative exponent in restriction input");
      for (long long k = 0; k < expo[i]; k++) term = term * m.generator_images[i];
    }
    for (auto& [e, c] : term.terms) out.add(e, coeff * c);
  }
  return out;
}

InducedVMap induced_v_matrix(const RestrictionMap& m, LambdaRing& src, LambdaRing& tgt) {
  int rk = tgt.rank(), rg = src.rank();
  InducedVMap out;
  out.display_columns = m.display_columns;
  out.fund = RatMat(rk, rg);
  if (!m.generator_images.empty()) {
    for (int j = 0; j < rg; j++) {
      auto col = tgt.v_class(tgt.s_reduce(m.generator_images[j]));
      for (int i = 0; i < rk; i++) out.fund(i, j) = col[i];
    }
  } else {
    // columns of the restriction relative to the lambda-power basis of V(G),
    // then change of basis through the cyclic matrix of u
    auto pows = tgt.ctx().lambda_powers(m.u_image, rg);
    RatMat B(rk, rg);
    for (int j = 0; j < rg; j++) {
      auto col = tgt.v_class(tgt.s_class(pows[j + 1]));
      for (int i = 0; i < rk; i++) B(i, j) = col[i];
    }
    auto [C, det] = src.cyclic_matrix(m.u);
    if (det == 0) throw std::runtime_error("cyclic matrix is singular; basis change impossible");
    out.fund = B * C.inverse();
  }
  out.display = RatMat(rk, static_cast<int>(out.display_columns.size()));
  for (size_t j = 0; j < out.display_columns.size(); j++)
    for (int i = 0; i < rk; i++) out.display(i, int(j)) = out.fund(i, out.display_columns[j]);
  return out;
}

std::tuple<int, int, int> rank_nullity(const RatMat& m) {
  int r = m.rank();
  return {r, m.cols() - r, m.rows() - r};
}

std::map<int, std::pair<int, int>> weight_kernel_dims(const RestrictionMap& m,
                                                      LambdaRing& src, LambdaRing& tgt) {
  RatMat J = induced_v_matrix(m, src, tgt).fund;
  RatMat MK = tgt.adams_matrix_on_V(2);
  RatMat MG = src.adams_matrix_on_V(2);

  auto eigenbasis = [](const RatMat& M, int r) {
    RatMat shifted = M;
    Rat ev = Rat(Int(1) << static_cast<unsigned>(r));
    for (int i = 0; i < M.rows(); i++) shifted(i, i) -= ev;
    return shifted.nullspace();
  };

  std::map<int, std::pair<int, int>> out;
  std::set<int> weights;
  for (int t : tgt.type_of().odd_degrees) weights.insert((t + 1) / 2);
  for (int t : src.type_of().odd_degrees) weights.insert((t + 1) / 2);
  for (int r : weights) {
    auto ek = eigenbasis(MK, r);
    auto eg = eigenbasis(MG, r);
    int rank_block = 0;
    if (!ek.empty() && !eg.empty()) {
      // rank of J restricted to the weight-r eigenspaces; the image of E_G(r)
      // lies in E_K(r) by functoriality, so the plain rank of J * basis works
      RatMat img(J.rows(), static_cast<int>(eg.size()));
      for (size_t c = 0; c < eg.size(); c++)
        for (int i = 0; i < J.rows(); i++) {
          Rat s = 0;
          for (int j = 0; j < J.cols(); j++) s += J(i, j) * eg[c][j];
          img(i, int(c)) = s;
        }
      rank_block = img.rank();
    }
    int ker = static_cast<int>(ek.size()) - rank_block;
    int coker = static_cast<int>(eg.size()) - rank_block;
    if (ker || coker) out[r] = {ker, coker};
  }
  return out;
}

}  // namespace liecoh
