#include "liecoh/charclass.hpp"

#include <stdexcept>

namespace liecoh {

namespace {

// ring of power sums q_1..q_K of the squared roots, deg q_k = 4k
GenRingPtr q_ring(long max_degree) {
  long K = std::max<long>(1, max_degree / 4);
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (long k = 1; k <= K; k++) {
    names.push_back("q" + std::to_string(k));
    degrees.push_back(static_cast<int>(4 * k));
  }
  return make_ring(std::move(names), std::move(degrees));
}

GradedPoly exp_trunc(const GradedPoly& p, long max_deg) {
  GradedPoly out = GradedPoly::constant(p.ring, 1);
  GradedPoly pow = out;
  Rat fact = 1;
  for (long m = 1; ; m++) {
    pow = mul_trunc(pow, p, max_deg);
    if (pow.is_zero()) break;
    fact /= m;
    out = out + fact * pow;
  }
  return out;
}

// log of 1 + sum_{k>=1} c[k] z^k as a coefficient list
std::vector<Rat> log_series(const std::vector<Rat>& c) {
  std::vector<Rat> g(c.size(), Rat(0));
  for (size_t k = 1; k < c.size(); k++) {
    Rat s = c[k];
    for (size_t j = 1; j < k; j++) s -= Rat(static_cast<long>(j), static_cast<long>(k)) * g[j] * c[k - j];
    g[k] = s;
  }
  return g;
}

// prod_i f(z_i) = exp(sum_k g_k q_k) where g = log f
GradedPoly product_over_roots(const GenRingPtr& qr, const std::vector<Rat>& f, long max_deg) {
  auto g = log_series(f);
  GradedPoly lg = GradedPoly::zero(qr);
  for (size_t k = 1; k < g.size() && k <= static_cast<size_t>(qr->size()); k++)
    lg = lg + g[k] * GradedPoly::generator(qr, static_cast<int>(k - 1));
  return exp_trunc(lg, max_deg);
}

// elementary symmetric e_1..e_n of the z_i as q-polynomials
std::vector<GradedPoly> elementary_from_power_sums(const GenRingPtr& qr, int n, long max_deg) {
  std::vector<GradedPoly> e{GradedPoly::constant(qr, 1)};
  for (int j = 1; j <= n; j++) {
    GradedPoly ej = GradedPoly::zero(qr);
    for (int i = 1; i <= j && i <= qr->size(); i++) {
      GradedPoly t = mul_trunc(e[j - i], GradedPoly::generator(qr, i - 1), max_deg);
      ej = (i % 2 ? ej + t : ej - t);
    }
    e.push_back(Rat(1, j) * ej);
  }
  return e;
}

SymPoly make_sym(int n, long max_degree) {
  auto qr = q_ring(max_degree);
  return SymPoly{n, max_degree, GradedPoly::zero(qr), GradedPoly::zero(qr)};
}

SymPoly scale(const Rat& c, const SymPoly& s) {
  SymPoly r = s;
  r.A = c * r.A;
  r.B = c * r.B;
  return r;
}

}  // namespace

GenRingPtr pe_ring(int n) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 1; i < n; i++) {
    names.push_back("p" + std::to_string(i));
    degrees.push_back(4 * i);
  }
  names.push_back("e");
  degrees.push_back(2 * n);
  return make_ring(std::move(names), std::move(degrees));
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  SymPoly r = a;
  r.A = r.A + b.A;
  r.B = r.B + b.B;
  return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
  SymPoly r = a;
  r.A = r.A - b.A;
  r.B = r.B - b.B;
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.n != b.n || a.max_degree != b.max_degree)
    throw std::invalid_argument("SymPoly operands live in different rings");
  SymPoly r = make_sym(a.n, a.max_degree);
  long bmax = a.max_degree - 2 * a.n;
  r.A = mul_trunc(a.A, b.A, a.max_degree);
  if (!a.B.is_zero() && !b.B.is_zero() && a.max_degree >= 4 * a.n) {
    // (e / 2^n)^2 = e_n(z) / 4^n
    auto en = elementary_from_power_sums(a.A.ring, a.n, a.max_degree)[a.n];
    GradedPoly bb = mul_trunc(a.B, b.B, a.max_degree - 4 * a.n);
    r.A = r.A + Rat(1, Int(1) << static_cast<unsigned>(2 * a.n)) * mul_trunc(en, bb, a.max_degree);
  }
  if (bmax >= 0) r.B = mul_trunc(a.A, b.B, bmax) + mul_trunc(a.B, b.A, bmax);
  return r;
}

SymPoly ch_vector(int n, long max_degree) {
  SymPoly s = make_sym(n, max_degree);
  s.A = GradedPoly::constant(s.A.ring, 2 * n);
  Rat c = 2;
  for (int k = 1; k <= s.A.ring->size() && 4 * k <= max_degree; k++) {
    c /= (2 * k - 1) * (2 * k);
    s.A = s.A + c * GradedPoly::generator(s.A.ring, k - 1);
  }
  return s;
}

SymPoly ch_lambda2_vector(int n, long max_degree) {
  SymPoly v = ch_vector(n, max_degree);
  // Adams operation on the vector bundle doubles each root
  SymPoly psi2 = make_sym(n, max_degree);
  psi2.A = GradedPoly::constant(psi2.A.ring, 2 * n);
  Rat c = 2;
  for (int k = 1; k <= psi2.A.ring->size() && 4 * k <= max_degree; k++) {
    c /= (2 * k - 1) * (2 * k);
    psi2.A = psi2.A + (Rat(Int(1) << static_cast<unsigned>(2 * k)) * c) *
                          GradedPoly::generator(psi2.A.ring, k - 1);
  }
  return scale(Rat(1, 2), v * v - psi2);
}

SymPoly ch_spinor(int n, int sign, long max_degree) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("spinor sign must be +1 or -1");
  SymPoly s = make_sym(n, max_degree);
  size_t K = static_cast<size_t>(s.A.ring->size()) + 1;
  // cosh(x/2) and sinh(x/2)/(x/2) as series in z = x^2
  std::vector<Rat> ch(K, Rat(0)), sh(K, Rat(0));
  ch[0] = sh[0] = 1;
  for (size_t k = 1; k < K; k++) {
    ch[k] = ch[k - 1] / Rat(4 * (2 * k - 1) * (2 * k));
    sh[k] = sh[k - 1] / Rat(4 * (2 * k) * (2 * k + 1));
  }
  Rat half = Rat(Int(1) << static_cast<unsigned>(n - 1));
  s.A = half * product_over_roots(s.A.ring, ch, max_degree);
  long bmax = max_degree - 2 * n;
  if (bmax >= 0)
    s.B = (Rat(sign) * half) * product_over_roots(s.A.ring, sh, bmax);
  return s;
}

PEPoly to_pe(const SymPoly& s) {
  auto pe = pe_ring(s.n);
  auto qr = s.A.ring;
  // p_i images: full Pontryagin ring p_1..p_n with p_n sent to e^2
  std::vector<GradedPoly> pimg;
  for (int i = 1; i < s.n; i++) pimg.push_back(GradedPoly::generator(pe, i - 1));
  pimg.push_back(GradedPoly::generator(pe, s.n - 1, 2));
  // q_k in the p_i via the Newton recurrence, with p_j = 0 above j = n
  std::vector<GradedPoly> qk;  // q_1..q_K
  for (int k = 1; k <= qr->size(); k++) {
    GradedPoly acc = GradedPoly::zero(pe);
    for (int i = 1; i < k; i++) {
      if (k - i - 1 >= static_cast<int>(qk.size())) continue;
      GradedPoly t = (i <= s.n) ? mul_trunc(pimg[i - 1], qk[k - i - 1], s.max_degree)
                                : GradedPoly::zero(pe);
      acc = (i % 2 ? acc + t : acc - t);
    }
    if (k <= s.n) acc = (k % 2 ? acc + Rat(k) * pimg[k - 1] : acc - Rat(k) * pimg[k - 1]);
    qk.push_back(acc);
  }
  PEPoly out = s.A.substitute(qk, s.max_degree);
  if (!s.B.is_zero() && s.max_degree >= 2 * s.n) {
    PEPoly b = s.B.substitute(qk, s.max_degree - 2 * s.n);
    out = out + Rat(1, Int(1) << static_cast<unsigned>(s.n)) *
                    mul_trunc(b, GradedPoly::generator(pe, s.n - 1), s.max_degree);
  }
  return out;
}

SymPoly pe_to_sym(const PEPoly& p, int n, long max_degree) {
  SymPoly s = make_sym(n, max_degree);
  auto e = elementary_from_power_sums(s.A.ring, n, max_degree);
  Rat two_n = Rat(Int(1) << static_cast<unsigned>(n));
  for (auto& [mono, c] : p.terms) {
    int epow = mono[n - 1];
    GradedPoly t = GradedPoly::constant(s.A.ring, c);
    for (int i = 1; i < n; i++)
      for (int k = 0; k < mono[i - 1]; k++) t = mul_trunc(t, e[i], max_degree);
    for (int k = 0; k < epow / 2; k++) t = mul_trunc(t, e[n], max_degree);
    if (epow % 2 == 0)
      s.A = s.A + t;
    else
      s.B = s.B + two_n * t;
  }
  // enforce the B truncation window
  GradedPoly bt = GradedPoly::zero(s.B.ring);
  for (auto& [m, c] : s.B.terms)
    if (s.B.mono_degree(m) <= max_degree - 2 * n) bt.add(m, c);
  s.B = bt;
  return s;
}

}  // namespace liecoh
