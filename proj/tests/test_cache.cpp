#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liecoh/cache.hpp"
#include "liecoh/charlib.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace liecoh;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("liecoh-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("character table round trip") {
  TempDir tmp;
  std::map<Weight, Int> table{{{1, 0, 2}, Int(3)}, {{0, 1, 1}, Int("123456789012345678901")}};
  cache_store(tmp.path.string(), "F4", {1, 0, 2}, table);
  auto back = cache_load(tmp.path.string(), "F4", {1, 0, 2});
  REQUIRE(back.has_value());
  CHECK(*back == table);
  CHECK(!cache_load(tmp.path.string(), "F4", {0, 0, 1}).has_value());
}

TEST_CASE("tampering is detected") {
  TempDir tmp;
  std::map<Weight, Int> table{{{2, 1}, Int(7)}};
  cache_store(tmp.path.string(), "G2", {2, 1}, table);
  fs::path file;
  for (auto& e : fs::directory_iterator(tmp.path)) file = e.path();
  REQUIRE(!file.empty());
  std::string text;
  {
    std::ifstream in(file);
    std::getline(in, text, '\0');
  }
  auto pos = text.find(": 7");
  REQUIRE(pos != std::string::npos);
  text[pos + 2] = '8';
  std::ofstream(file) << text;
  CHECK_THROWS_WITH_AS(cache_load(tmp.path.string(), "G2", {2, 1}),
                       doctest::Contains("delete"), std::runtime_error);
}

TEST_CASE("character context reuses stored tables") {
  TempDir tmp;
  Weight lam{2, 1, 1, 2};  // large enough to cross the persistence threshold
  std::map<Weight, Int> first;
  {
    CharContext cx(GroupSpec::parse("F4"));
    cx.set_cache_dir(tmp.path.string());
    first = cx.dominant_character(lam);
  }
  auto stored = cache_load(tmp.path.string(), "F4", lam);
  REQUIRE(stored.has_value());
  CHECK(*stored == first);
  {
    CharContext cx(GroupSpec::parse("F4"));
    cx.set_cache_dir(tmp.path.string());
    CHECK(cx.dominant_character(lam) == first);
  }
}
