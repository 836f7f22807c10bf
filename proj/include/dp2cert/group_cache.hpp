#pragma once

// On-disk cache of the Sp6(F_2) enumeration: versioned header with a
// fingerprint of the generator list, then the packed matrices in their
// breadth-first discovery order (so warm and cold runs enumerate
// identically).

#include "dp2cert/groups.hpp"

#include <filesystem>
#include <optional>

namespace dp2 {

std::uint64_t generator_fingerprint(const std::vector<GF2Mat>& gens);

std::filesystem::path sp6_cache_file(const std::filesystem::path& cache_dir);

// nullopt when the file is absent, unreadable, or generated by a different
// generator list.
std::optional<Subgroup<GF2Mat>> load_sp6_cache(const std::filesystem::path& cache_dir,
                                               const std::vector<GF2Mat>& gens);

void save_sp6_cache(const std::filesystem::path& cache_dir, const Subgroup<GF2Mat>& sp6);

// Load if valid, else enumerate; writes the cache when `write` is set.
Subgroup<GF2Mat> load_or_build_sp6(const std::filesystem::path& cache_dir, bool write = true);

void clear_sp6_cache(const std::filesystem::path& cache_dir);

}  // namespace dp2
