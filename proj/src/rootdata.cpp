#include "liecoh/rootdata.hpp"
#include "liecoh/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace liecoh {

int GroupSpec::rank() const {
  int r = 0;
  for (auto& f : factors) r += f.rank;
  return r;
}

std::string GroupSpec::name() const {
  static const char* letter[] = {"A", "B", "C", "D", "G", "F", "E", "E", "E", "T"};
  std::string s;
  for (size_t i = 0; i < factors.size(); i++) {
    if (i) s += "x";
    s += letter[static_cast<int>(factors[i].series)];
    s += std::to_string(factors[i].rank);
  }
  return s;
}

namespace {

Factor parse_factor(std::string t) {
  for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto num_at = [&](size_t pos) {
    if (pos >= t.size()) throw std::invalid_argument("missing rank in group spec: " + t);
    for (size_t i = pos; i < t.size(); i++)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad group factor: " + t);
    return std::stoi(t.substr(pos));
  };
  Factor f{};
  if (t.rfind("HSPIN", 0) == 0 || t.rfind("SPIN", 0) == 0) {
    bool half = t[0] == 'H';
    int n = num_at(half ? 5 : 4);
    if (n < 5 || (half && n % 4 != 0)) throw std::invalid_argument("bad spin group: " + t);
    if (n % 2 == 0)
      f = {Series::D, n / 2};
    else
      f = {Series::B, (n - 1) / 2};
    return f;
  }
  if (t.rfind("SU", 0) == 0) {
    int n = num_at(2);
    if (n < 2) throw std::invalid_argument("bad SU rank: " + t);
    return {Series::A, n - 1};
  }
  if (t.rfind("SP", 0) == 0) {
    int n = num_at(2);
    if (n < 1) throw std::invalid_argument("bad Sp rank: " + t);
    return {Series::C, n};
  }
  int n = num_at(1);
  switch (t[0]) {
    case 'A': f = {Series::A, n}; if (n < 1) throw std::invalid_argument("A rank >= 1"); break;
    case 'B': f = {Series::B, n}; if (n < 1) throw std::invalid_argument("B rank >= 1"); break;
    case 'C': f = {Series::C, n}; if (n < 1) throw std::invalid_argument("C rank >= 1"); break;
    case 'D': f = {Series::D, n}; if (n < 2) throw std::invalid_argument("D rank >= 2"); break;
    case 'G': if (n != 2) throw std::invalid_argument("G2 only"); f = {Series::G2, 2}; break;
    case 'F': if (n != 4) throw std::invalid_argument("F4 only"); f = {Series::F4, 4}; break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E6/E7/E8 only");
      f = {n == 6 ? Series::E6 : n == 7 ? Series::E7 : Series::E8, n};
      break;
    case 'T': if (n < 1) throw std::invalid_argument("torus rank >= 1"); f = {Series::Torus, n}; break;
    default: throw std::invalid_argument("unknown group factor: " + t);
  }
  return f;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& s) {
  GroupSpec g;
  std::string up = s;
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up.rfind("HSPIN", 0) == 0) g.annotation = "hspin";
  size_t start = 0;
  while (start <= s.size()) {
    size_t pos = std::string::npos;
    // 'x' separates factors, but not the leading letter of a factor name
    for (size_t i = start + 1; i < s.size(); i++)
      if (s[i] == 'x' || s[i] == 'X') { pos = i; break; }
    std::string tok = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.empty()) throw std::invalid_argument("empty factor in group spec");
    g.factors.push_back(parse_factor(tok));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return g;
}

RootSystem::RootSystem(GroupSpec spec) : spec_(std::move(spec)) {
  rank_ = spec_.rank();
  build();
}

namespace {

struct SimpleData {
  // cartan[i][j] = 2(a_i,a_j)/(a_i,a_i) within one factor
  std::vector<std::vector<long long>> cartan;
  std::vector<long long> d;  // scaled (a_i,a_i)/2, long roots get 6
};

SimpleData simple_data(const Factor& f) {
  int n = f.rank;
  SimpleData sd;
  if (f.series == Series::Torus) return sd;
  sd.cartan.assign(n, std::vector<long long>(n, 0));
  sd.d.assign(n, 6);
  for (int i = 0; i < n; i++) sd.cartan[i][i] = 2;
  auto link = [&](int i, int j) { sd.cartan[i][j] = sd.cartan[j][i] = -1; };
  switch (f.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; i++) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; i++) link(i, i + 1);
      if (n >= 2) {
        sd.cartan[n - 1][n - 2] = -2;  // alpha_n short
        sd.d[n - 1] = 3;
      }
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; i++) link(i, i + 1);
      if (n >= 2) {
        sd.cartan[n - 2][n - 1] = -2;  // alpha_n long, others short
        for (int i = 0; i + 1 < n; i++) sd.d[i] = 3;
      }
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; i++) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      break;
    case Series::G2:
      sd.cartan[0][1] = -3;  // alpha_1 short
      sd.cartan[1][0] = -1;
      sd.d[0] = 2;
      break;
    case Series::F4:
      link(0, 1);
      link(2, 3);
      sd.cartan[1][2] = -1;
      sd.cartan[2][1] = -2;  // alpha_3, alpha_4 short
      sd.d[2] = sd.d[3] = 3;
      break;
    case Series::E6:
    case Series::E7:
    case Series::E8:
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
      link(0, 2);
      for (int i = 2; i + 1 < n; i++) link(i, i + 1);
      link(1, 3);
      break;
    default:
      break;
  }
  return sd;
}

}  // namespace

void RootSystem::build() {
  torus_coord_.assign(rank_, false);
  int coord = 0;
  std::vector<std::pair<int, SimpleData>> blocks;  // (first coord, data)
  for (auto& f : spec_.factors) {
    if (f.series == Series::Torus) {
      for (int i = 0; i < f.rank; i++) torus_coord_[coord + i] = true;
    } else {
      blocks.emplace_back(coord, simple_data(f));
      for (int i = 0; i < f.rank; i++) simple_.push_back(coord + i);
    }
    coord += f.rank;
  }
  int ns = num_simple();
  cartan_.assign(size_t(ns) * ns, 0);
  dsc_.assign(ns, 0);
  int base = 0;
  for (auto& [c0, sd] : blocks) {
    int m = static_cast<int>(sd.d.size());
    for (int i = 0; i < m; i++) {
      dsc_[base + i] = sd.d[i];
      for (int j = 0; j < m; j++) cartan_[size_t(base + i) * ns + (base + j)] = sd.cartan[i][j];
    }
    (void)c0;
    base += m;
  }

  simple_roots_.assign(ns, Weight(rank_, 0));
  for (int j = 0; j < ns; j++)
    for (int i = 0; i < ns; i++) simple_roots_[j][simple_[i]] = cartan(i, j);

  rho_.assign(rank_, 0);
  for (int i = 0; i < ns; i++) rho_[simple_[i]] = 1;

  // close the simple roots under root-string extension, height by height
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> frontier;
  for (int j = 0; j < ns; j++) {
    std::vector<long long> e(ns, 0);
    e[j] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  positive_roots_alpha_ = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (auto& b : frontier) {
      for (int j = 0; j < ns; j++) {
        // <beta, alpha_j^vee> from alpha-coordinates
        long long pairing = 0;
        for (int i = 0; i < ns; i++) pairing += b[i] * cartan(j, i);
        long long p = 0;
        auto down = b;
        while (true) {
          down[j] -= 1;
          bool nonneg = true;
          for (auto v : down)
            if (v < 0) { nonneg = false; break; }
          if (!nonneg || !seen.count(down)) break;
          p++;
        }
        if (p - pairing >= 1) {
          auto up = b;
          up[j] += 1;
          if (seen.insert(up).second) {
            next.push_back(up);
            positive_roots_alpha_.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(positive_roots_alpha_.begin(), positive_roots_alpha_.end(),
            [](const auto& a, const auto& b) {
              long long ha = 0, hb = 0;
              for (auto v : a) ha += v;
              for (auto v : b) hb += v;
              if (ha != hb) return ha < hb;
              return a < b;
            });
  for (auto& ac : positive_roots_alpha_) {
    Weight w(rank_, 0);
    for (int j = 0; j < ns; j++)
      if (ac[j])
        for (int i = 0; i < rank_; i++) w[i] += ac[j] * simple_roots_[j][i];
    positive_roots_.push_back(std::move(w));
  }

  // height functional: H = (C^T)^{-1} 1 cleared to integers, so f(alpha_j) > 0
  hfun_.assign(rank_, Int(0));
  if (ns > 0) {
    RatMat C(ns, ns);
    for (int i = 0; i < ns; i++)
      for (int j = 0; j < ns; j++) C(i, j) = static_cast<long>(cartan(j, i));
    std::vector<Rat> ones(ns, Rat(1));
    auto H = solve_linear(C, ones);
    Int den = 1;
    for (auto& h : H) den = lcm(den, Int(h.get_den()));
    for (int i = 0; i < ns; i++) hfun_[simple_[i]] = Int(H[i] * Rat(den));
  }
}

long long RootSystem::dim_group() const {
  return rank_ + 2LL * static_cast<long long>(positive_roots_.size());
}

Int RootSystem::form_with_root(const Weight& w, const std::vector<long long>& alpha_coords) const {
  // (w, sum n_j alpha_j) = sum n_j d_j w_j in the scaled form
  Int r = 0;
  for (int j = 0; j < num_simple(); j++)
    if (alpha_coords[j])
      r += Int(static_cast<long>(alpha_coords[j] * dsc_[j])) *
           static_cast<long>(w[simple_[j]]);
  return r;
}

Int RootSystem::height_functional(const Weight& w) const {
  Int r = 0;
  for (int i = 0; i < rank_; i++)
    if (w[i] != 0 && hfun_[i] != 0) r += hfun_[i] * static_cast<long>(w[i]);
  return r;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (int i : simple_)
    if (w[i] < 0) return false;
  return true;
}

std::pair<Weight, int> RootSystem::dominant_representative(Weight w) const {
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < num_simple(); j++) {
      long long c = w[simple_[j]];
      if (c < 0) {
        for (int i = 0; i < rank_; i++) w[i] -= c * simple_roots_[j][i];
        sign = -sign;
        moved = true;
      }
    }
  }
  for (int i : simple_)
    if (w[i] == 0) return {w, 0};
  return {w, sign};
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& dominant) const {
  if (!is_dominant(dominant)) throw std::invalid_argument("weyl_orbit needs a dominant weight");
  std::unordered_set<Weight, VecHash> seen;
  std::vector<Weight> out, frontier{dominant};
  seen.insert(dominant);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (auto& w : frontier) {
      out.push_back(w);
      for (int j = 0; j < num_simple(); j++) {
        long long c = w[simple_[j]];
        if (c == 0) continue;
        Weight v = w;
        for (int i = 0; i < rank_; i++) v[i] -= c * simple_roots_[j][i];
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Int coxeter_component_order(const std::vector<int>& nodes, const RootSystem& rs) {
  int n = static_cast<int>(nodes.size());
  auto fact = [](int m) { return factorial(m); };
  if (n == 1) return 2;
  // bond weights and degrees within the component
  int max_bond = 1, max_deg = 0;
  std::vector<int> deg(n, 0);
  int bond2_i = -1, bond2_j = -1;
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++) {
      long long m = rs.cartan(nodes[a], nodes[b]) * rs.cartan(nodes[b], nodes[a]);
      if (m > 0) {
        deg[a]++;
        deg[b]++;
        if (m > max_bond) max_bond = static_cast<int>(m);
        if (m == 2) { bond2_i = a; bond2_j = b; }
      }
    }
  for (int a = 0; a < n; a++) max_deg = std::max(max_deg, deg[a]);
  if (max_bond == 3) return 12;  // G2
  if (max_bond == 2) {
    if (n == 4 && deg[bond2_i] == 2 && deg[bond2_j] == 2) return 1152;  // F4
    Int r = fact(n);
    return r << n;  // B/C
  }
  if (max_deg <= 2) return fact(n + 1);  // A
  // one branch node; arm lengths decide D vs E
  int branch = -1;
  for (int a = 0; a < n; a++)
    if (deg[a] == 3) branch = a;
  std::vector<int> arms;
  for (int a = 0; a < n; a++) {
    if (a == branch) continue;
    long long m = rs.cartan(nodes[a], nodes[branch]) * rs.cartan(nodes[branch], nodes[a]);
    if (m == 0) continue;
    int len = 1, prev = branch, cur = a;
    while (true) {
      int nxt = -1;
      for (int b = 0; b < n; b++) {
        if (b == cur || b == prev) continue;
        long long mb = rs.cartan(nodes[b], nodes[cur]) * rs.cartan(nodes[cur], nodes[b]);
        if (mb > 0) { nxt = b; break; }
      }
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      len++;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return fact(n) << (n - 1);  // D
  if (arms == std::vector<int>{1, 2, 2}) return 51840;                              // E6
  if (arms == std::vector<int>{1, 2, 3}) return 2903040;                            // E7
  if (arms == std::vector<int>{1, 2, 4}) return 696729600;                          // E8
  throw std::runtime_error("unrecognized Coxeter diagram component");
}

Int RootSystem::weyl_order() const {
  std::vector<int> all(num_simple());
  for (int i = 0; i < num_simple(); i++) all[i] = i;
  // split into connected components, multiply orders
  Int order = 1;
  std::vector<bool> used(num_simple(), false);
  for (int s = 0; s < num_simple(); s++) {
    if (used[s]) continue;
    std::vector<int> comp{s};
    used[s] = true;
    for (size_t q = 0; q < comp.size(); q++)
      for (int t = 0; t < num_simple(); t++)
        if (!used[t] && cartan(comp[q], t) != 0) {
          used[t] = true;
          comp.push_back(t);
        }
    order *= coxeter_component_order(comp, *this);
  }
  return order;
}

Int RootSystem::orbit_size(const Weight& dominant) const {
  if (!is_dominant(dominant)) throw std::invalid_argument("orbit_size needs a dominant weight");
  // stabilizer is the parabolic generated by simple reflections fixing the weight
  std::vector<int> zero_nodes;
  for (int j = 0; j < num_simple(); j++)
    if (dominant[simple_[j]] == 0) zero_nodes.push_back(j);
  Int stab = 1;
  std::vector<bool> used(zero_nodes.size(), false);
  for (size_t s = 0; s < zero_nodes.size(); s++) {
    if (used[s]) continue;
    std::vector<int> comp{zero_nodes[s]};
    used[s] = true;
    for (size_t q = 0; q < comp.size(); q++)
      for (size_t t = 0; t < zero_nodes.size(); t++)
        if (!used[t] && cartan(comp[q], zero_nodes[t]) != 0) {
          used[t] = true;
          comp.push_back(zero_nodes[t]);
        }
    stab *= coxeter_component_order(comp, *this);
  }
  return weyl_order() / stab;
}

}  // namespace liecoh
