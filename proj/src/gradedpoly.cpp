#include "liecoh/gradedpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace liecoh {

int GenRing::index(const std::string& n) const {
  for (size_t i = 0; i < names.size(); i++)
    if (names[i] == n) return static_cast<int>(i);
  return -1;
}

GenRingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees) {
  if (names.size() != degrees.size())
    throw std::invalid_argument("generator name and degree lists differ in length");
  auto r = std::make_shared<GenRing>();
  r->names = std::move(names);
  r->degrees = std::move(degrees);
  return r;
}

GradedPoly GradedPoly::constant(GenRingPtr r, const Rat& c) {
  GradedPoly p{std::move(r), {}};
  p.add(std::vector<int>(p.ring->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::generator(GenRingPtr r, int i, int power) {
  GradedPoly p{std::move(r), {}};
  std::vector<int> m(p.ring->size(), 0);
  m[i] = power;
  p.add(m, 1);
  return p;
}

void GradedPoly::add(const std::vector<int>& mono, const Rat& c) {
  if (c == 0) return;
  auto it = terms.emplace(mono, 0).first;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

long GradedPoly::mono_degree(const std::vector<int>& mono) const {
  long d = 0;
  for (size_t i = 0; i < mono.size(); i++) d += static_cast<long>(mono[i]) * ring->degrees[i];
  return d;
}

long GradedPoly::degree_if_homogeneous() const {
  long d = 0;
  bool first = true;
  for (auto& [m, c] : terms) {
    long md = mono_degree(m);
    if (first) {
      d = md;
      first = false;
    } else if (md != d) {
      return -1;
    }
  }
  return d;
}

GradedPoly GradedPoly::homogeneous_part(long d) const {
  GradedPoly out = zero(ring);
  for (auto& [m, c] : terms)
    if (mono_degree(m) == d) out.terms.emplace(m, c);
  return out;
}

long GradedPoly::max_degree() const {
  long d = 0;
  for (auto& [m, c] : terms) d = std::max(d, mono_degree(m));
  return d;
}

Rat GradedPoly::coefficient(const std::vector<int>& mono) const {
  auto it = terms.find(mono);
  return it == terms.end() ? Rat(0) : it->second;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r = a;
  for (auto& [m, c] : b.terms) r.add(m, c);
  return r;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r = a;
  for (auto& [m, c] : b.terms) r.add(m, -c);
  return r;
}

GradedPoly mul_trunc(const GradedPoly& a, const GradedPoly& b, long max_deg) {
  GradedPoly r = GradedPoly::zero(a.ring);
  std::vector<int> m(a.ring->size());
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) {
      for (size_t i = 0; i < m.size(); i++) m[i] = ma[i] + mb[i];
      if (max_deg >= 0 && r.mono_degree(m) > max_deg) continue;
      r.add(m, ca * cb);
    }
  return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return mul_trunc(a, b, -1); }

GradedPoly operator*(const Rat& c, const GradedPoly& a) {
  GradedPoly r = GradedPoly::zero(a.ring);
  if (c == 0) return r;
  for (auto& [m, x] : a.terms) r.terms.emplace(m, c * x);
  return r;
}

GradedPoly GradedPoly::substitute(const std::vector<GradedPoly>& images, long max_deg) const {
  if (images.size() != static_cast<size_t>(ring->size()))
    throw std::invalid_argument("substitute needs one image per generator");
  GenRingPtr target = images.empty() ? ring : images[0].ring;
  GradedPoly out = zero(target);
  for (auto& [m, c] : terms) {
    GradedPoly t = constant(target, c);
    for (size_t i = 0; i < m.size() && !t.is_zero(); i++)
      for (int k = 0; k < m[i]; k++) t = mul_trunc(t, images[i], max_deg);
    out = out + t;
  }
  return out;
}

std::string GradedPoly::str() const {
  if (terms.empty()) return "0";
  // highest degree first, then monomial order
  std::multimap<long, std::string> parts;
  for (auto& [m, c] : terms) {
    std::ostringstream os;
    Rat ac = c < 0 ? Rat(-c) : c;
    bool unit = ac == 1;
    if (!unit) os << ac.get_str();
    bool any = false;
    for (size_t i = 0; i < m.size(); i++) {
      if (!m[i]) continue;
      if (!unit || any) os << "*";
      os << ring->names[i];
      if (m[i] != 1) os << "^" << m[i];
      any = true;
    }
    if (!any && unit) os << "1";
    parts.emplace(-mono_degree(m), (c < 0 ? std::string("- ") : std::string("+ ")) + os.str());
  }
  std::string s;
  for (auto& [d, t] : parts) {
    if (s.empty())
      s = t[0] == '+' ? t.substr(2) : "-" + t.substr(2);
    else
      s += " " + t;
  }
  return s;
}

GradedPoly normalize_integral(const GradedPoly& p) {
  if (p.terms.empty()) return p;
  Int lcm = 1, gcd = 0;
  for (auto& [m, c] : p.terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (auto& [m, c] : p.terms) {
    Int n = c.get_num() * (lcm / c.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat scale(lcm, gcd);
  scale.canonicalize();
  return scale * p;
}

namespace {

void enumerate(const GenRing& ring, size_t i, long remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (i + 1 == cur.size()) {
    if (remaining % ring.degrees[i] == 0) {
      cur[i] = static_cast<int>(remaining / ring.degrees[i]);
      out.push_back(cur);
    }
    return;
  }
  for (long k = 0; k * ring.degrees[i] <= remaining; k++) {
    cur[i] = static_cast<int>(k);
    enumerate(ring, i + 1, remaining - k * ring.degrees[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(const GenRing& ring, long d) {
  std::vector<std::vector<int>> out;
  if (ring.size() == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(ring.size(), 0);
  enumerate(ring, 0, d, cur, out);
  return out;
}

}  // namespace liecoh
