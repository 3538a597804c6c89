#pragma once

#include <optional>
#include <string>

#include "wordmap/automorphism.hpp"
#include "wordmap/group.hpp"

namespace wordmap {

// Binary stage caches. Each file starts with an 8-byte format tag; a tag
// mismatch is reported as a missing cache so the stage gets rebuilt.

void save_group_cache(const GroupTable& g, const std::string& path);
// nullopt: no usable cache (absent or wrong tag). Corrupt payloads throw
// InputError.
std::optional<GroupTable> load_group_cache(const std::string& path);

// Automorphisms are persisted as anchor-generator images only and re-extended
// on load.
void save_aut_cache(const AutGroup& aut, const std::string& path);
std::optional<AutGroup> load_aut_cache(const GroupTable& g, const std::string& path);

}  // namespace wordmap
