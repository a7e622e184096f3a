#ifndef CWL_CACHE_HPP
#define CWL_CACHE_HPP

#include "cwl/counting.hpp"

#include <filesystem>
#include <optional>

namespace cwl::io {

inline constexpr const char* kDefaultCacheDir = ".cwl-cache";

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 counting::TableKind kind, int k);

// Serializes {kind, k, provenance, entries:[{n,t,count}]} with counts as
// decimal strings, so values round-trip exactly.
void cache_store(const counting::CountTable& table, const std::filesystem::path& dir);

// Loads the cached table for (kind, k). A missing file returns nullopt
// silently; a corrupt one returns nullopt after a warning on stderr, so
// callers fall back to recomputation.
std::optional<counting::CountTable> cache_load(counting::TableKind kind, int k,
                                               const std::filesystem::path& dir);

}  // namespace cwl::io

#endif
