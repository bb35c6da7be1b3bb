#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace liecoh {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// 64-bit FNV-1a, used for weight hashing and cache checksums
inline uint64_t fnv1a(const void* data, size_t len, uint64_t seed = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; i++) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

struct VecHash {
  size_t operator()(const std::vector<long long>& v) const {
    return static_cast<size_t>(fnv1a(v.data(), v.size() * sizeof(long long)));
  }
};

}  // namespace liecoh
