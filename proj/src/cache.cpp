#include "liecoh/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liecoh {

namespace {

std::string coords_csv(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); i++) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

Weight parse_coords(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(std::stoll(tok));
  return w;
}

std::string file_name(const std::string& group, const Weight& lam) {
  std::string s = group + "_";
  for (size_t i = 0; i < lam.size(); i++) {
    if (i) s += "_";
    s += std::to_string(lam[i]);
  }
  return s + ".lfc";
}

std::string checksum_hex(const std::string& body) {
  uint64_t h = fnv1a(body.data(), body.size());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::optional<std::map<Weight, Int>> cache_load(const std::string& dir,
                                                const std::string& group,
                                                const Weight& lam) {
  auto path = std::filesystem::path(dir) / file_name(group, lam);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string body, line;
  std::string checksum;
  while (std::getline(in, line)) {
    if (line.rfind("CHECKSUM ", 0) == 0) {
      checksum = line.substr(9);
      break;
    }
    body += line;
    body += "\n";
  }
  if (checksum.empty() || checksum_hex(body) != checksum)
    throw std::runtime_error("corrupt cache file " + path.string() +
                             "; delete it (or the whole cache directory) and retry");
  std::stringstream ss(body);
  std::getline(ss, line);
  std::stringstream hdr(line);
  std::string magic, version, g, coords;
  hdr >> magic >> version >> g >> coords;
  if (magic != "LFCACHE" || version != "v1")
    throw std::runtime_error("unsupported cache format in " + path.string());
  if (g != group || parse_coords(coords) != lam)
    throw std::runtime_error("cache key mismatch in " + path.string());
  std::map<Weight, Int> table;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    auto colon = line.find(" : ");
    if (colon == std::string::npos)
      throw std::runtime_error("malformed cache line in " + path.string());
    Weight w = parse_coords(line.substr(0, colon));
    table[w] = Int(line.substr(colon + 3));
  }
  return table;
}

void cache_store(const std::string& dir, const std::string& group, const Weight& lam,
                 const std::map<Weight, Int>& table) {
  std::filesystem::create_directories(dir);
  auto path = std::filesystem::path(dir) / file_name(group, lam);
  std::string body = "LFCACHE v1 " + group + " " + coords_csv(lam) + "\n";
  for (auto& [w, m] : table) body += coords_csv(w) + " : " + m.get_str() + "\n";
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best-effort; failure to write is not fatal
    out << body << "CHECKSUM " << checksum_hex(body) << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace liecoh
