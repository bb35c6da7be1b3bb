#include "liecoh/golden.hpp"

#include <stdexcept>

namespace liecoh::golden {

namespace {

std::vector<std::vector<Int>> to_int_matrix(const std::vector<std::vector<long long>>& m) {
  std::vector<std::vector<Int>> out;
  for (auto& row : m) {
    std::vector<Int> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    out.push_back(std::move(r));
  }
  return out;
}

GradedPoly build(const GenRingPtr& ring,
                 std::initializer_list<std::pair<const char*, std::vector<int>>> terms) {
  GradedPoly p = GradedPoly::zero(ring);
  for (auto& [coeff, mono] : terms) p.add(mono, Rat(Int(coeff)));
  return p;
}

GradedPoly build_rat(const GenRingPtr& ring,
                     std::initializer_list<std::pair<Rat, std::vector<int>>> terms) {
  GradedPoly p = GradedPoly::zero(ring);
  for (auto& [coeff, mono] : terms) p.add(mono, coeff);
  return p;
}

}  // namespace

CyclicGolden cyclic(const std::string& group) {
  if (group == "F4")
    return {to_int_matrix({{0, 1, 26, 377}, {0, 0, 1, -1}, {0, 1, 0, 52}, {1, 0, 51, -52}}),
            Int(351)};
  if (group == "E6")
    return {to_int_matrix({{1, 0, 0, 1, -702, -3483},
                           {0, 0, 0, 351, 3834, 17496},
                           {0, 1, 0, -27, -77, -324},
                           {0, 0, 1, 0, -54, -236},
                           {0, 0, 0, 79, 756, 2511},
                           {0, 0, 0, -405, -2759, 2754}}),
            Int(-27208467)};
  if (group == "E7")
    return {to_int_matrix({{0, 0, 0, 0, -42504, -834648, -4655288},
                           {0, 0, 0, 0, 8645, 207424, 2129083},
                           {0, 0, 0, 0, 968, 20902, 166704},
                           {0, 0, 0, 1, 0, -267, -2848},
                           {0, 0, 1, 0, -132, -856, -5831},
                           {0, 1, 0, 1, 56, -14742, -179760},
                           {1, 0, 1, 0, -7371, -79648, -560651}}),
            Int("-1997102661696")};
  if (group == "E8")
    return {{{Int(0), Int(0), Int(0), Int(0), Int(0), Int("-401581533"), Int("-48147450080"),
              Int("-2346940420190")},
             {Int(0), Int(0), Int(0), Int(0), Int(0), Int("6661497"), Int("860320742"),
              Int("49370806120")},
             {Int(0), Int(0), Int(0), Int(0), Int(0), Int("185628"), Int("22371987"),
              Int("1105454390")},
             {Int(0), Int(0), Int(0), Int(0), Int(1), Int(-1), Int(-7999), Int(-514878)},
             {Int(0), Int(0), Int(0), Int(1), Int(0), Int(-3627), Int(-112746), Int(-2002508)},
             {Int(0), Int(0), Int(1), Int(0), Int(248), Int(34255), Int(-9767140),
              Int("-735062326")},
             {Int(0), Int(1), Int(0), Int(247), Int(-496), Int("-5059262"), Int("-205995340"),
              Int("-5451187498")},
             {Int(1), Int(1), Int(495), Int(30380), Int("2573495"), Int("304455619"),
              Int("12658360729"), Int("209067977980")}},
            Int("22804152835143344418390")};
  throw std::invalid_argument("no published cyclic matrix for " + group);
}

std::vector<std::vector<Int>> restriction(const std::string& pair) {
  if (pair == "spin10-e6")
    return to_int_matrix({{0, 1, 1, 17, 17, 120},
                          {1, 0, 0, 1, 1, 33},
                          {0, 0, 0, 1, 1, 12},
                          {1, 1, 0, 11, 0, 45},
                          {1, 0, 1, 0, 11, 45}});
  if (pair == "spin12-e7")
    return to_int_matrix({{0, 34, 220, 25840, 1890, 88, 2},
                          {1, 0, 66, 890, 56, 2, 0},
                          {0, 2, 12, 1320, 34, 0, 0},
                          {0, 0, 1, 145, 24, 1, 0},
                          {2, 12, 200, 9120, 220, 0, 0},
                          {0, 2, 0, 120, 210, 24, 1}});
  if (pair == "spin16-e8")
    return {{Int(160), Int(9056), Int(597840), Int("1005303376"), Int("13865488"), Int(125552),
             Int(560), Int(0)},
            {Int(-1), Int(-259), Int(-15473), Int("-49227299"), Int(-344942), Int(4241), Int(128),
             Int(1)},
            {Int(0), Int(144), Int(4480), Int("17099280"), Int(296400), Int(3168), Int(16),
             Int(0)},
            {Int(1), Int(-3), Int(1808), Int("-1025376"), Int(-23023), Int(-240), Int(-1), Int(0)},
            {Int(0), Int(16), Int(560), Int("2093696"), Int(22048), Int(112), Int(0), Int(0)},
            {Int(0), Int(-2), Int(-105), Int(-370711), Int(3367), Int(121), Int(1), Int(0)},
            {Int(16), Int(816), Int(58608), Int("94909584"), Int(920192), Int(4368), Int(0),
             Int(0)},
            {Int(-1), Int(15), Int(-5568), Int("-12391764"), Int(-22477), Int(4944), Int(119),
             Int(1)}};
  throw std::invalid_argument("no published restriction matrix for " + pair);
}

std::vector<int> group_type(const std::string& group) {
  if (group == "Spin10" || group == "D5") return {3, 7, 9, 11, 15};
  if (group == "E6") return {3, 9, 11, 15, 17, 23};
  // one entry too many as published
  if (group == "Spin12" || group == "D6") return {3, 7, 11, 11, 15, 19, 23};
  if (group == "E7") return {3, 11, 15, 19, 23, 27, 35};
  if (group == "Spin16" || group == "HSpin16" || group == "D8")
    return {3, 7, 11, 15, 15, 19, 23, 27};
  if (group == "E8") return {3, 15, 23, 27, 35, 39, 47, 59};
  throw std::invalid_argument("no published type for " + group);
}

bool group_type_flagged(const std::string& group) {
  return group == "Spin12" || group == "D6";
}

std::vector<int> homotopy_degrees(const std::string& space) {
  if (space == "R5") return {2, 8, 17, 23};
  if (space == "R6") return {4, 8, 12, 23, 27, 35};
  if (space == "R7") return {8, 12, 16, 20, 35, 39, 47, 59};
  if (space == "N5") return {8, 17, 23};
  if (space == "N6") return {8, 12, 23, 27, 35};
  throw std::invalid_argument("no published homotopy data for " + space);
}

GenRingPtr plane_ring(const std::string& space) {
  if (space == "R5") return make_ring({"a2", "a8"}, {2, 8});
  if (space == "R6") return make_ring({"a4", "a8", "a12"}, {4, 8, 12});
  if (space == "R7") return make_ring({"a8", "a12", "a16", "a20"}, {8, 12, 16, 20});
  throw std::invalid_argument("no published presentation for " + space);
}

std::vector<NamedPoly> plane_relations(const std::string& space) {
  auto ring = plane_ring(space);
  if (space == "R5")
    return {{"r18", build(ring, {{"-39936", {9, 0}}, {"1728", {5, 1}}, {"1", {1, 2}}})},
            {"r24", build(ring, {{"-50429952", {12, 0}},
                                 {"3068928", {8, 1}},
                                 {"-11808", {4, 2}},
                                 {"-1", {0, 3}}})}};
  if (space == "R6")
    return {{"r24", build(ring, {{"38367", {6, 0, 0}},
                                 {"-131436", {4, 1, 0}},
                                 {"88272", {2, 2, 0}},
                                 {"-1600", {0, 3, 0}},
                                 {"-273024", {3, 0, 1}},
                                 {"55296", {1, 1, 1}},
                                 {"-10368", {0, 0, 2}}})},
            {"r28", build(ring, {{"63", {7, 0, 0}},
                                 {"96", {5, 1, 0}},
                                 {"48", {3, 2, 0}},
                                 {"640", {1, 3, 0}},
                                 {"-1686", {4, 0, 1}},
                                 {"-4656", {2, 1, 1}},
                                 {"160", {0, 2, 1}},
                                 {"-1152", {1, 0, 2}}})},
            {"r36", build(ring, {{"19503", {9, 0, 0}},
                                 {"41184", {7, 1, 0}},
                                 {"-150816", {5, 2, 0}},
                                 {"-156672", {3, 3, 0}},
                                 {"19200", {1, 4, 0}},
                                 {"-127224", {6, 0, 1}},
                                 {"-908448", {4, 1, 1}},
                                 {"264576", {2, 2, 1}},
                                 {"12800", {0, 3, 1}},
                                 {"-1806336", {3, 0, 2}},
                                 {"36864", {1, 1, 2}},
                                 {"18432", {0, 0, 3}}})}};
  if (space == "R7")
    return {{"r36", build(ring, {{"275", {3, 1, 0, 0}},
                                 {"-6150", {2, 0, 0, 1}},
                                 {"5400", {1, 1, 1, 0}},
                                 {"-756", {0, 3, 0, 0}},
                                 {"-10800", {0, 0, 1, 1}}})},
            {"r40", build(ring, {{"275", {5, 0, 0, 0}},
                                 {"4080", {3, 0, 1, 0}},
                                 {"945", {2, 2, 0, 0}},
                                 {"-26460", {1, 1, 0, 1}},
                                 {"-25920", {1, 0, 2, 0}},
                                 {"27216", {0, 2, 1, 0}},
                                 {"26460", {0, 0, 0, 2}}})},
            {"r48", build(ring, {{"-225875", {6, 0, 0, 0}},
                                 {"-8037000", {4, 0, 1, 0}},
                                 {"4233600", {3, 2, 0, 0}},
                                 {"-23020200", {2, 1, 0, 1}},
                                 {"-29160000", {2, 0, 2, 0}},
                                 {"28576800", {1, 2, 1, 0}},
                                 {"-166698000", {1, 0, 0, 2}},
                                 {"3000564", {0, 4, 0, 0}},
                                 {"57153600", {0, 1, 1, 1}},
                                 {"46656000", {0, 0, 3, 0}}})},
            {"r60", build(ring, {{"-2868125", {6, 1, 0, 0}},
                                 {"22312500", {5, 0, 0, 1}},
                                 {"-36945000", {4, 1, 1, 0}},
                                 {"-3307500", {3, 3, 0, 0}},
                                 {"-390600000", {3, 0, 1, 1}},
                                 {"222264000", {2, 2, 0, 1}},
                                 {"-243000000", {2, 1, 2, 0}},
                                 {"71442000", {1, 3, 1, 0}},
                                 {"-972405000", {1, 1, 0, 2}},
                                 {"1360800000", {1, 0, 2, 1}},
                                 {"-18003384", {0, 5, 0, 0}},
                                 {"1000188000", {0, 2, 1, 1}},
                                 {"-699840000", {0, 1, 3, 0}},
                                 {"-463050000", {0, 0, 0, 3}}})}};
  throw std::invalid_argument("no published presentation for " + space);
}

std::vector<std::string> plane_discrepancies(const std::string& space) {
  if (space == "R6")
    return {"published r36 prints the coefficient -1806336 on a4^3*a8^2, a degree 28 monomial "
            "inside a degree 36 relation; the computed relation carries -1806336 on a4^3*a12^2"};
  if (space == "R7")
    return {"published r40 prints -26460 on a8*p12*p20, read as the degree 40 monomial "
            "a8*a12*a20",
            "published r40 prints -25920 on a8*a20^2, a degree 48 monomial inside a degree 40 "
            "relation; the computed relation carries -25920 on a8*a16^2"};
  return {};
}

std::vector<NamedPoly> plane_images(const std::string& space) {
  if (space != "R7") return {};
  auto ring = plane_ring(space);
  return {{"e", build_rat(ring, {{Rat(-1, 168), {2, 0, 0, 0}}, {Rat(-1, 14), {0, 0, 1, 0}}})},
          {"p6", build_rat(ring, {{Rat(13, 1512), {3, 0, 0, 0}},
                                  {Rat(3, 14), {1, 0, 1, 0}},
                                  {Rat(-1, 20), {0, 2, 0, 0}}})},
          {"p7", build_rat(ring, {{Rat(1, 168), {2, 1, 0, 0}},
                                  {Rat(-1, 12), {1, 0, 0, 1}},
                                  {Rat(1, 14), {0, 1, 1, 0}}})}};
}

GradedPoly published_ch(const std::string& which) {
  // ring layout of pe_ring(8): p1..p7 then e
  auto ring = make_ring({"p1", "p2", "p3", "p4", "p5", "p6", "p7", "e"},
                        {4, 8, 12, 16, 20, 24, 28, 16});
  auto mono = [](std::initializer_list<std::pair<int, int>> exps) {
    std::vector<int> m(8, 0);
    for (auto& [i, a] : exps) m[i] = a;
    return m;
  };
  if (which == "spinor16")
    return build_rat(ring, {{Rat(128), mono({})},
                            {Rat(16), mono({{0, 1}})},
                            {Rat(1, 3), mono({{0, 2}})},
                            {Rat(4, 3), mono({{1, 1}})},
                            {Rat(1, 360), mono({{0, 3}})},
                            {Rat(1, 30), mono({{0, 1}, {1, 1}})},
                            {Rat(2, 15), mono({{2, 1}})},
                            {Rat(1, 80640), mono({{0, 4}})},
                            {Rat(1, 3360), mono({{0, 2}, {1, 1}})},
                            {Rat(1, 315), mono({{0, 1}, {2, 1}})},
                            {Rat(1, 5040), mono({{1, 2}})},
                            {Rat(17, 1260), mono({{3, 1}})},
                            {Rat(1, 2), mono({{7, 1}})}});
  if (which == "lambda2-16")
    return build_rat(ring, {{Rat(120), mono({})},
                            {Rat(14), mono({{0, 1}})},
                            {Rat(7, 6), mono({{0, 2}})},
                            {Rat(-4, 3), mono({{1, 1}})},
                            {Rat(7, 180), mono({{0, 3}})},
                            {Rat(-1, 30), mono({{0, 1}, {1, 1}})},
                            {Rat(-2, 15), mono({{2, 1}})},
                            {Rat(1, 1440), mono({{0, 4}})},
                            {Rat(-1, 72), mono({{0, 1}, {2, 1}})},
                            {Rat(1, 360), mono({{1, 2}})},
                            {Rat(1, 45), mono({{3, 1}})}});
  throw std::invalid_argument("no published expansion for " + which);
}

bool same_relation(const GradedPoly& a, const GradedPoly& b) {
  if (a.terms == b.terms) return true;
  GradedPoly neg = Rat(-1) * a;
  return neg.terms == b.terms;
}

}  // namespace liecoh::golden
