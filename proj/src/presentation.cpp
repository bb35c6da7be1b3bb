#include "liecoh/presentation.hpp"

#include "liecoh/charclass.hpp"
#include "liecoh/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liecoh {

namespace {

// s_i -> e_1..e_k -> s_i for i > k via the Newton identities, everything as
// polynomials over the given ring
std::vector<GradedPoly> newton_extend(const std::vector<GradedPoly>& s_low, int k, int upto) {
  GenRingPtr ring = s_low[1].ring;
  std::vector<GradedPoly> e{GradedPoly::constant(ring, 1)};
  for (int j = 1; j <= k; j++) {
    GradedPoly acc = GradedPoly::zero(ring);
    for (int i = 1; i < j; i++) {
      GradedPoly t = e[j - i] * s_low[i];
      acc = (i % 2 ? acc + t : acc - t);
    }
    acc = (j % 2 ? acc + s_low[j] : acc - s_low[j]);
    e.push_back(Rat(1, j) * acc);
  }
  std::vector<GradedPoly> s = s_low;
  for (int i = k + 1; i <= upto; i++) {
    GradedPoly acc = GradedPoly::zero(ring);
    for (int j = 1; j <= k; j++) {
      GradedPoly t = e[j] * s[i - j];
      acc = (j % 2 ? acc + t : acc - t);
    }
    s.push_back(acc);
  }
  return s;
}

struct ThetaState {
  GenRingPtr source;
  GenRingPtr target;
  std::vector<GradedPoly> images;  // per source generator
  std::vector<bool> assigned;
};

// substitution step of the quotient pipeline for one homogeneous component
// of the vanishing chern character; returns the solved generator index or -1
int theta_step(ThetaState& st, const GradedPoly& wd, Presentation& pres,
               const std::set<long>& relation_degrees, long d) {
  int pending = -1;
  Rat pending_coeff;
  GradedPoly rest = GradedPoly::zero(st.source);
  for (auto& [m, c] : wd.terms) {
    int unassigned = -1;
    bool bare = true;
    for (size_t i = 0; i < m.size(); i++) {
      if (m[i] && !st.assigned[i]) {
        unassigned = static_cast<int>(i);
        bare = m[i] == 1;
        for (size_t j = 0; j < m.size(); j++)
          if (j != i && m[j]) bare = false;
      }
    }
    if (unassigned < 0) {
      rest.add(m, c);
      continue;
    }
    if (!bare || (pending >= 0 && pending != unassigned))
      throw std::runtime_error(
          "cannot isolate an image for " + st.source->names[static_cast<size_t>(unassigned)] +
          " in degree " + std::to_string(d) + "; bundle labeling convention mismatch");
    pending = unassigned;
    pending_coeff = c;
  }
  GradedPoly residue = rest.substitute(st.images);
  if (pending >= 0) {
    st.images[static_cast<size_t>(pending)] = (Rat(-1) / pending_coeff) * residue;
    st.assigned[static_cast<size_t>(pending)] = true;
    auto& nm = st.source->names[static_cast<size_t>(pending)];
    pres.solved.emplace_back(nm, st.images[static_cast<size_t>(pending)]);
    pres.notes.push_back("ch_" + std::to_string(d / 2) + " determines phi(" + nm + ")");
    return pending;
  }
  if (residue.is_zero()) {
    if (relation_degrees.count(d))
      throw std::runtime_error("expected relation in degree " + std::to_string(d) + " vanished");
    return -1;
  }
  if (relation_degrees.count(d)) {
    pres.relations.push_back(normalize_integral(residue));
    pres.notes.push_back("ch_" + std::to_string(d / 2) + " gives the degree " +
                         std::to_string(d) + " relation");
  } else if (d < *relation_degrees.begin()) {
    throw std::runtime_error("nonzero chern component below the first relation degree " +
                             std::to_string(d));
  }
  // components between relation degrees lie in the ideal already generated;
  // the hilbert series check certifies nothing further is needed
  return -1;
}

Presentation run_pipeline(GenRingPtr source, GenRingPtr target,
                          const std::vector<std::pair<int, int>>& pinned, const GradedPoly& w,
                          const std::set<long>& relation_degrees, long max_degree) {
  Presentation pres;
  pres.ring = target;
  ThetaState st{source, target, {}, std::vector<bool>(source->names.size(), false)};
  st.images.assign(source->names.size(), GradedPoly::zero(target));
  for (auto& [src_idx, tgt_idx] : pinned) {
    st.images[static_cast<size_t>(src_idx)] = GradedPoly::generator(target, tgt_idx);
    st.assigned[static_cast<size_t>(src_idx)] = true;
  }
  for (long d = 2; d <= max_degree; d += 2) {
    GradedPoly wd = w.homogeneous_part(d);
    if (wd.is_zero()) {
      if (relation_degrees.count(d))
        throw std::runtime_error("expected relation in degree " + std::to_string(d) + " vanished");
      continue;
    }
    theta_step(st, wd, pres, relation_degrees, d);
  }
  if (pres.relations.size() != relation_degrees.size())
    throw std::runtime_error("relation count mismatch in the quotient pipeline");
  return pres;
}

// lift a polynomial over pe_ring(n) into a larger ring containing the same
// generator names
GradedPoly lift(const GradedPoly& p, const GenRingPtr& ring) {
  std::vector<GradedPoly> images;
  for (auto& nm : p.ring->names) {
    int i = ring->index(nm);
    if (i < 0) throw std::logic_error("missing generator " + nm);
    images.push_back(GradedPoly::generator(ring, i));
  }
  return p.substitute(images);
}

// exp(q * c) for an abelian degree 2 class, truncated
GradedPoly exp_class(const GenRingPtr& ring, int gen, long q, long max_degree) {
  GradedPoly out = GradedPoly::constant(ring, 1);
  Rat coeff = 1;
  for (long m = 1; m * ring->degrees[static_cast<size_t>(gen)] <= max_degree; m++) {
    coeff = coeff * Rat(q) / Rat(m);
    out.add([&] {
      std::vector<int> mono(ring->names.size(), 0);
      mono[static_cast<size_t>(gen)] = static_cast<int>(m);
      return mono;
    }(), coeff);
  }
  return out;
}

}  // namespace

Presentation grassmannian_presentation(int k, int n) {
  if (k < 1 || k > n - k) throw std::invalid_argument("need 1 <= k <= n-k");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 1; i <= k; i++) {
    names.push_back("a" + std::to_string(2 * i));
    degrees.push_back(2 * i);
  }
  auto ring = make_ring(std::move(names), std::move(degrees));
  // power sums of the chern roots of the rank k bundle: s_i = i! ch_i
  std::vector<GradedPoly> s{GradedPoly::constant(ring, Rat(k))};
  Rat fact = 1;
  for (int i = 1; i <= k; i++) {
    fact *= i;
    s.push_back(fact * GradedPoly::generator(ring, i - 1));
  }
  s = newton_extend(s, k, n);
  // complementary bundle: first n-k chern characters are forced, the rest
  // follow from its rank
  std::vector<GradedPoly> t{GradedPoly::constant(ring, Rat(n - k))};
  for (int i = 1; i <= n - k; i++) t.push_back(Rat(-1) * s[i]);
  t = newton_extend(t, n - k, n);
  Presentation pres;
  pres.ring = ring;
  for (int i = n - k + 1; i <= n; i++) {
    pres.relations.push_back(normalize_integral(s[i] + t[i]));
    pres.notes.push_back("ch_" + std::to_string(i) + " of the full rank " + std::to_string(n) +
                         " bundle gives the degree " + std::to_string(2 * i) + " relation");
  }
  return pres;
}

Presentation rosenfeld_presentation(const std::string& which) {
  if (which == "R5") {
    long D = 24;
    auto ring = make_ring({"c1", "p1", "p2", "p3", "p4", "e"}, {2, 4, 8, 12, 16, 10});
    auto target = make_ring({"a2", "a8"}, {2, 8});
    // restriction of the 27 dimensional representation: a character of charge
    // four, the vector bundle at charge minus two, a half spin bundle at
    // charge one
    GradedPoly w = exp_class(ring, 0, 4, D) +
                   mul_trunc(lift(to_pe(ch_vector(5, D)), ring), exp_class(ring, 0, -2, D), D) +
                   mul_trunc(lift(to_pe(ch_spinor(5, -1, D)), ring), exp_class(ring, 0, 1, D), D);
    return run_pipeline(ring, target, {{0, 0}, {2, 1}}, w, {18, 24}, D);
  }
  if (which == "R6") {
    long D = 36;
    auto ring = make_ring({"c2", "p1", "p2", "p3", "p4", "p5", "e"}, {4, 4, 8, 12, 16, 20, 12});
    auto target = make_ring({"a4", "a8", "a12"}, {4, 8, 12});
    // ch of the 2 dimensional symplectic factor: 2 cosh(y) with y^2 = -c2
    GradedPoly chz = GradedPoly::constant(ring, 2);
    Rat c = 1;
    for (long m = 1; 4 * m <= D; m++) {
      c = c * Rat(-1) / Rat((2 * m - 1) * (2 * m));
      std::vector<int> mono(ring->names.size(), 0);
      mono[0] = static_cast<int>(m);
      chz.add(mono, 2 * c);
    }
    GradedPoly w = mul_trunc(lift(to_pe(ch_vector(6, D)), ring), chz, D) +
                   lift(to_pe(ch_spinor(6, +1, D)), ring);
    return run_pipeline(ring, target, {{1, 0}, {2, 1}, {3, 2}}, w, {24, 28, 36}, D);
  }
  if (which == "R7") {
    long D = 60;
    auto ring = pe_ring(8);
    auto target = make_ring({"a8", "a12", "a16", "a20"}, {8, 12, 16, 20});
    GradedPoly w = to_pe(ch_lambda2_vector(8, D)) + to_pe(ch_spinor(8, +1, D));
    return run_pipeline(ring, target, {{1, 0}, {2, 1}, {3, 2}, {4, 3}}, w, {36, 40, 48, 60}, D);
  }
  throw std::invalid_argument("unknown space " + which + " (expected R5, R6 or R7)");
}

HilbertReport hilbert_check(const Presentation& p, const EllipticProfile& expected) {
  HilbertReport rep;
  rep.pass = true;
  rep.first_mismatch = -1;
  rep.total = 0;
  long top = static_cast<long>(expected.poincare.size()) - 1;
  for (long d = 0; d <= top; d++) {
    auto basis = monomials_of_degree(*p.ring, d);
    std::map<std::vector<int>, int> col;
    for (size_t i = 0; i < basis.size(); i++) col[basis[i]] = static_cast<int>(i);
    std::vector<std::vector<Rat>> rows;
    for (auto& r : p.relations) {
      long rd = r.degree_if_homogeneous();
      if (rd > d || (d - rd) % 2) continue;
      for (auto& m : monomials_of_degree(*p.ring, d - rd)) {
        std::vector<Rat> row(basis.size(), Rat(0));
        for (auto& [rm, rc] : r.terms) {
          auto prod = rm;
          for (size_t i = 0; i < prod.size(); i++) prod[i] += m[i];
          row[static_cast<size_t>(col.at(prod))] = rc;
        }
        rows.push_back(std::move(row));
      }
    }
    Int dim = static_cast<long>(basis.size());
    if (!rows.empty()) {
      RatMat M(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
      for (size_t i = 0; i < rows.size(); i++)
        for (size_t j = 0; j < rows[i].size(); j++) M(int(i), int(j)) = rows[i][j];
      dim -= M.rank();
    }
    rep.computed.push_back(dim);
    rep.total += dim;
    Int want = expected.poincare[static_cast<size_t>(d)];
    if (dim != want && rep.pass) {
      rep.pass = false;
      rep.first_mismatch = d;
    }
  }
  return rep;
}

}  // namespace liecoh
