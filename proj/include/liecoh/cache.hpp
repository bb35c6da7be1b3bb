#pragma once

#include "liecoh/numeric.hpp"
#include "liecoh/rootdata.hpp"

#include <map>
#include <optional>
#include <string>

namespace liecoh {

// On-disk store for dominant character tables.
//
// One file per (group, highest weight), named <group>_<coords>.lfc:
//   LFCACHE v1 <group> <c1,c2,...>
//   <w1,w2,...> : <multiplicity>
//   ...
//   CHECKSUM <16 hex digits>
// The checksum is FNV-1a over everything before the checksum line. Files are
// written to a temp name and renamed into place so concurrent readers never
// see a partial file.

std::optional<std::map<Weight, Int>> cache_load(const std::string& dir,
                                                const std::string& group,
                                                const Weight& lam);

void cache_store(const std::string& dir, const std::string& group, const Weight& lam,
                 const std::map<Weight, Int>& table);

}  // namespace liecoh
