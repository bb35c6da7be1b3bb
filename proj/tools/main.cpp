#include "CLI11.hpp"
#include "json.hpp"

#include "liecoh/branching.hpp"
#include "liecoh/charclass.hpp"
#include "liecoh/golden.hpp"
#include "liecoh/homotopy.hpp"
#include "liecoh/lambda_ring.hpp"
#include "liecoh/presentation.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>

using namespace liecoh;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string cache_dir;
  long max_degree = 16;
  bool allow_long = false;
  bool verify = false;
};

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int mismatch(const std::string& msg) {
  std::cerr << "verify: " << msg << "\n";
  return 1;
}

void progress(const std::string& msg) { std::cerr << msg << "\n"; }

json matrix_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); i++) {
    json row = json::array();
    for (int j = 0; j < m.cols(); j++) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(const RatMat& m) {
  std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
  for (int j = 0; j < m.cols(); j++)
    for (int i = 0; i < m.rows(); i++)
      width[static_cast<size_t>(j)] =
          std::max(width[static_cast<size_t>(j)], m(i, j).get_str().size());
  for (int i = 0; i < m.rows(); i++) {
    for (int j = 0; j < m.cols(); j++)
      std::cout << (j ? " " : "") << std::setw(static_cast<int>(width[static_cast<size_t>(j)]))
                << m(i, j).get_str();
    std::cout << "\n";
  }
}

json poly_json(const GradedPoly& p) {
  json terms = json::array();
  for (auto& [m, c] : p.terms) {
    json mono = json::object();
    for (size_t i = 0; i < m.size(); i++)
      if (m[i]) mono[p.ring->names[i]] = m[i];
    terms.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
  }
  return terms;
}

VirtualRep parse_rep(const GroupSpec& g, const std::string& name, LambdaRing& lr) {
  int rank = lr.rank();
  if (name == "min") return lr.minimal_rep();
  std::string n = name == "std" ? "w1" : name;
  if (n == "adjoint") {
    static const std::map<std::string, int> adj{
        {"G2", 2}, {"F4", 1}, {"E6", 2}, {"E7", 1}, {"E8", 8}};
    auto it = adj.find(g.name());
    if (it == adj.end())
      throw std::invalid_argument("adjoint shorthand not available for " + g.name());
    n = "w" + std::to_string(it->second);
  }
  if (n.size() >= 2 && n[0] == 'w') {
    int k = std::stoi(n.substr(1));
    if (k < 1 || k > rank) throw std::invalid_argument("no fundamental weight " + n);
    Weight w(static_cast<size_t>(rank), 0);
    w[static_cast<size_t>(k - 1)] = 1;
    return VirtualRep{g, {{w, 1}}};
  }
  throw std::invalid_argument("unknown representation " + name +
                              " (use wK, adjoint, std or min)");
}

bool is_long_group(const std::string& name) { return name == "E7" || name == "E8"; }

int cmd_type(const std::string& group, const Options& opt) {
  LambdaRing lr(GroupSpec::parse(group));
  if (!opt.cache_dir.empty()) lr.ctx().set_cache_dir(opt.cache_dir);
  auto t = lr.type_of();
  if (opt.format == "json") {
    json out{{"group", lr.group().name()}, {"type", t.odd_degrees}};
    std::cout << out.dump() << "\n";
  } else {
    for (size_t i = 0; i < t.odd_degrees.size(); i++)
      std::cout << (i ? " " : "") << t.odd_degrees[i];
    std::cout << "\n";
  }
  if (opt.verify) {
    auto want = golden::group_type(lr.group().name());
    if (golden::group_type_flagged(lr.group().name())) {
      // published list has a spurious trailing entry
      auto trimmed = want;
      trimmed.pop_back();
      int sum = 0;
      for (int d : t.odd_degrees) sum += d;
      if (t.odd_degrees != trimmed || sum != 66)
        return mismatch("computed type disagrees with the published list even after "
                        "dropping its extra entry");
      std::cerr << "note: published type list for " << lr.group().name()
                << " carries an extra entry 23; computed entries sum to dim G = 66\n";
    } else if (t.odd_degrees != want) {
      return mismatch("computed type disagrees with the published list");
    }
  }
  return 0;
}

int cmd_cyclic(const std::string& group, const std::string& rep, const Options& opt) {
  auto g = GroupSpec::parse(group);
  if (is_long_group(g.name()) && !opt.allow_long)
    return fail("cyclic matrices for " + g.name() + " take minutes; rerun with --allow-long");
  LambdaRing lr(g);
  if (!opt.cache_dir.empty()) lr.ctx().set_cache_dir(opt.cache_dir);
  auto u = parse_rep(g, rep, lr);
  if (is_long_group(g.name())) progress("computing lambda powers over " + g.name());
  auto [m, det] = lr.cyclic_matrix(u);
  if (opt.format == "json") {
    json out{{"group", g.name()}, {"matrix", matrix_json(m)}, {"det", det.get_str()}};
    std::cout << out.dump() << "\n";
  } else {
    print_matrix(m);
    std::cout << "det " << det.get_str() << "\n";
  }
  if (opt.verify) {
    auto want = golden::cyclic(g.name());
    if (det != want.det) return mismatch("determinant " + det.get_str() + " != published " +
                                         want.det.get_str());
    if (static_cast<int>(want.matrix.size()) == m.rows())
      for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++)
          if (m(i, j) != Rat(want.matrix[size_t(i)][size_t(j)]))
            return mismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") differs from the published matrix");
  }
  return 0;
}

int cmd_restrict(const std::string& pair, const Options& opt) {
  if (pair == "spin16-e8" && !opt.allow_long)
    return fail("the spin16-e8 induced matrix takes a few minutes; rerun with --allow-long");
  auto m = restriction_by_name(pair);
  LambdaRing src(m.source), tgt(m.target);
  if (!opt.cache_dir.empty()) {
    src.ctx().set_cache_dir(opt.cache_dir);
    tgt.ctx().set_cache_dir(opt.cache_dir);
  }
  if (pair == "spin16-e8") progress("computing the induced map on V for " + pair);
  auto v = induced_v_matrix(m, src, tgt);
  auto [rank, nullity, tnullity] = rank_nullity(v.fund);
  if (opt.format == "json") {
    json out{{"pair", pair},
             {"matrix", matrix_json(v.display)},
             {"rank", rank},
             {"nullity", nullity},
             {"transpose_nullity", tnullity}};
    std::cout << out.dump() << "\n";
  } else {
    print_matrix(v.display);
    std::cout << "rank " << rank << " nullity " << nullity << " transpose-nullity " << tnullity
              << "\n";
  }
  if (opt.verify) {
    auto want = golden::restriction(pair);
    for (int i = 0; i < v.display.rows(); i++)
      for (int j = 0; j < v.display.cols(); j++)
        if (v.display(i, j) != Rat(want[size_t(i)][size_t(j)]))
          return mismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") differs from the published matrix");
  }
  return 0;
}

int cmd_homotopy(const std::string& space, const Options& opt) {
  if (space == "R7") progress("R7 needs the full E8 pipeline, expect a couple of minutes");
  auto pi = space_homotopy(space, opt.cache_dir);
  if (opt.format == "json") {
    json degs = json::array();
    for (auto& [d, n] : pi)
      for (int i = 0; i < n; i++) degs.push_back(d);
    std::cout << json{{"space", space}, {"degrees", degs}}.dump() << "\n";
  } else {
    std::cout << "Q at";
    for (auto& [d, n] : pi)
      for (int i = 0; i < n; i++) std::cout << " " << d;
    std::cout << "\n";
  }
  if (opt.verify) {
    GradedDims want;
    for (int d : golden::homotopy_degrees(space)) want[d]++;
    if (pi != want) return mismatch("homotopy degrees differ from the published list");
  }
  return 0;
}

int cmd_poincare(const std::string& space, const Options& opt) {
  if (space == "R7") progress("R7 needs the full E8 pipeline, expect a couple of minutes");
  auto profile = elliptic_profile(space_homotopy(space, opt.cache_dir));
  if (opt.format == "json") {
    json coeffs = json::array();
    for (auto& c : profile.poincare) coeffs.push_back(c.get_str());
    std::cout << json{{"space", space},
                      {"coefficients", coeffs},
                      {"euler", profile.euler.get_str()},
                      {"top_degree", profile.top_degree()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "euler " << profile.euler.get_str() << "\ntop " << profile.top_degree()
              << "\ncoefficients";
    for (auto& c : profile.poincare) std::cout << " " << c.get_str();
    std::cout << "\n";
  }
  if (opt.verify) {
    GradedDims want;
    for (int d : golden::homotopy_degrees(space)) want[d]++;
    auto expect = elliptic_profile(want);
    if (profile.poincare != expect.poincare || profile.euler != expect.euler)
      return mismatch("Poincare data differs from the published profile");
  }
  return 0;
}

int cmd_chern(const std::string& bundle, const Options& opt) {
  // bundle is vector<n>, lambda2<n>, spinor<n>+ or spinor<n>-
  std::string kind;
  int n = 0, sign = +1;
  std::string b = bundle;
  if (!b.empty() && (b.back() == '+' || b.back() == '-')) {
    sign = b.back() == '+' ? +1 : -1;
    b.pop_back();
  }
  for (auto& prefix : {"vector", "lambda2", "spinor"}) {
    if (b.rfind(prefix, 0) == 0) {
      kind = prefix;
      std::string rest = b.substr(std::string(prefix).size());
      if (!rest.empty() && rest[0] == '-') rest = rest.substr(1);
      if (!rest.empty()) n = std::stoi(rest) / 2;
    }
  }
  if (kind.empty() || n < 1)
    return fail("unknown bundle " + bundle + " (use vector16, lambda2-16, spinor16+ ...)");
  SymPoly s = kind == "vector"    ? ch_vector(n, opt.max_degree)
              : kind == "lambda2" ? ch_lambda2_vector(n, opt.max_degree)
                                  : ch_spinor(n, sign, opt.max_degree);
  auto pe = to_pe(s);
  if (opt.format == "json")
    std::cout << json{{"bundle", bundle}, {"max_degree", opt.max_degree}, {"terms", poly_json(pe)}}
                     .dump()
              << "\n";
  else
    std::cout << pe.str() << "\n";
  if (opt.verify) {
    std::string key = kind == "spinor" && n == 8 && sign > 0 ? "spinor16"
                      : kind == "lambda2" && n == 8          ? "lambda2-16"
                                                             : "";
    if (key.empty()) return mismatch("no published expansion for " + bundle);
    if (opt.max_degree < 16)
      return mismatch("published expansions go through degree 16, use --max-degree 16");
    GradedPoly want = golden::published_ch(key);
    GradedPoly got = pe;
    if (opt.max_degree > 16) {
      got = GradedPoly::zero(pe.ring);
      for (auto& [m, c] : pe.terms)
        if (pe.mono_degree(m) <= 16) got.add(m, c);
    }
    if (!(got.terms == want.terms))
      return mismatch("expansion differs from the published coefficients");
  }
  return 0;
}

int cmd_present(const std::string& space, const Options& opt) {
  auto p = rosenfeld_presentation(space);
  auto notes = golden::plane_discrepancies(space);
  if (opt.format == "json") {
    json gens = json::array();
    for (int i = 0; i < p.ring->size(); i++)
      gens.push_back({{"name", p.ring->names[size_t(i)]}, {"degree", p.ring->degrees[size_t(i)]}});
    json rels = json::array();
    for (auto& r : p.relations)
      rels.push_back({{"degree", r.degree_if_homogeneous()}, {"terms", poly_json(r)}});
    json solved = json::array();
    for (auto& [name, img] : p.solved)
      solved.push_back({{"generator", name}, {"image", poly_json(img)}});
    std::cout << json{{"space", space},
                      {"generators", gens},
                      {"relations", rels},
                      {"solved", solved},
                      {"published_discrepancies", notes}}
                     .dump()
              << "\n";
  } else {
    std::cout << "generators:";
    for (int i = 0; i < p.ring->size(); i++) std::cout << " " << p.ring->names[size_t(i)];
    std::cout << "\n";
    for (auto& [name, img] : p.solved) std::cout << "phi(" << name << ") = " << img.str() << "\n";
    for (auto& r : p.relations)
      std::cout << "r" << r.degree_if_homogeneous() << " = " << r.str() << "\n";
    for (auto& n : notes) std::cout << "note: " << n << "\n";
  }
  if (opt.verify) {
    auto want = golden::plane_relations(space);
    if (want.size() != p.relations.size()) return mismatch("relation count differs");
    for (size_t i = 0; i < want.size(); i++)
      if (!golden::same_relation(p.relations[i], want[i].poly))
        return mismatch("relation " + want[i].name + " differs from the published one");
    for (auto& [name, img] : golden::plane_images(space)) {
      bool found = false;
      for (auto& [n2, img2] : p.solved)
        if (n2 == name) found = img2.terms == img.terms;
      if (!found) return mismatch("image of " + name + " differs from the published formula");
    }
    GradedDims pi;
    for (int d : golden::homotopy_degrees(space)) pi[d]++;
    auto rep = hilbert_check(p, elliptic_profile(pi));
    if (!rep.pass)
      return mismatch("hilbert series mismatch first at degree " +
                      std::to_string(rep.first_mismatch));
    std::cerr << "hilbert check passed, total dimension " << rep.total.get_str() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const Options& base) {
  Options opt = base;
  opt.verify = true;
  opt.format = "text";
  int rc = 0;
  auto run = [&](const std::string& what, int r) {
    std::cout << (r == 0 ? "ok   " : "FAIL ") << what << "\n";
    if (r) rc = 1;
  };
  bool all = suite == "all";
  if (all || suite == "type")
    for (auto g : {"Spin10", "Spin12", "Spin16", "E6", "E7", "E8"})
      run(std::string("type ") + g, cmd_type(g, opt));
  if (all || suite == "cyclic") {
    run("cyclic F4 w4", cmd_cyclic("F4", "w4", opt));
    run("cyclic E6 min", cmd_cyclic("E6", "min", opt));
    if (opt.allow_long) {
      run("cyclic E7 min", cmd_cyclic("E7", "min", opt));
      run("cyclic E8 min", cmd_cyclic("E8", "min", opt));
    } else {
      std::cout << "skip cyclic E7/E8 (needs --allow-long)\n";
    }
  }
  if (all || suite == "restrict") {
    run("restrict spin10-e6", cmd_restrict("spin10-e6", opt));
    run("restrict spin12-e7", cmd_restrict("spin12-e7", opt));
    if (opt.allow_long)
      run("restrict spin16-e8", cmd_restrict("spin16-e8", opt));
    else
      std::cout << "skip restrict spin16-e8 (needs --allow-long)\n";
  }
  if (all || suite == "homotopy")
    for (auto s : {"N5", "R5", "N6", "R6", "R7"})
      run(std::string("homotopy ") + s, cmd_homotopy(s, opt));
  if (all || suite == "poincare")
    for (auto s : {"R5", "R6", "R7"}) run(std::string("poincare ") + s, cmd_poincare(s, opt));
  if (all || suite == "chern") {
    run("chern spinor16+", cmd_chern("spinor16+", opt));
    run("chern lambda2-16", cmd_chern("lambda2-16", opt));
  }
  if (all || suite == "present")
    for (auto s : {"R5", "R6", "R7"}) run(std::string("present ") + s, cmd_present(s, opt));
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic Lie theory: types, cyclic matrices, branching, "
               "homotopy and cohomology presentations"};
  app.require_subcommand(1);
  app.fallthrough();  // shared flags may follow the subcommand
  Options opt;
  if (const char* env = std::getenv("LIECOH_CACHE_DIR")) opt.cache_dir = env;
  app.add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", opt.cache_dir, "directory for character table caches");
  app.add_option("--max-degree", opt.max_degree, "truncation degree for chern expansions");
  app.add_flag("--allow-long", opt.allow_long, "permit computations that take minutes");
  app.add_flag("--verify", opt.verify, "compare the output against the published tables");

  std::string group, rep = "min", pair, space, bundle, suite = "all";
  auto* c_type = app.add_subcommand("type", "odd sphere degrees of a group");
  c_type->add_option("group", group)->required();
  auto* c_cyc = app.add_subcommand("cyclic", "lambda power matrix on V and its determinant");
  c_cyc->add_option("group", group)->required();
  c_cyc->add_option("rep", rep);
  auto* c_res = app.add_subcommand("restrict", "induced matrix on V for a spin inclusion");
  c_res->add_option("pair", pair)->required();
  auto* c_hom = app.add_subcommand("homotopy", "rational homotopy of a quotient space");
  c_hom->add_option("space", space)->required();
  auto* c_poi = app.add_subcommand("poincare", "Poincare polynomial and Euler characteristic");
  c_poi->add_option("space", space)->required();
  auto* c_ch = app.add_subcommand("chern", "chern character in Pontryagin and Euler classes");
  c_ch->add_option("bundle", bundle)->required();
  auto* c_pre = app.add_subcommand("present", "rational cohomology presentation");
  c_pre->add_option("space", space)->required();
  auto* c_ver = app.add_subcommand("verify", "run the published-table comparisons");
  c_ver->add_option("suite", suite);

  CLI11_PARSE(app, argc, argv);
  try {
    if (c_type->parsed()) return cmd_type(group, opt);
    if (c_cyc->parsed()) return cmd_cyclic(group, rep, opt);
    if (c_res->parsed()) return cmd_restrict(pair, opt);
    if (c_hom->parsed()) return cmd_homotopy(space, opt);
    if (c_poi->parsed()) return cmd_poincare(space, opt);
    if (c_ch->parsed()) return cmd_chern(bundle, opt);
    if (c_pre->parsed()) return cmd_present(space, opt);
    if (c_ver->parsed()) return cmd_verify(suite, opt);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no command");
}
