#include "dp2cert/group_cache.hpp"

#include <cstring>
#include <fstream>

namespace dp2 {

namespace {

constexpr char kMagic[8] = {'D', 'P', '2', 'S', 'P', '6', 'C', '1'};

void put_u64(std::ofstream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

bool get_u64(std::ifstream& in, std::uint64_t& v) {
  char buf[8];
  if (!in.read(buf, 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i)
    v |= std::uint64_t(static_cast<unsigned char>(buf[i])) << (8 * i);
  return true;
}

}  // namespace

std::uint64_t generator_fingerprint(const std::vector<GF2Mat>& gens) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(gens.size());
  for (const auto& g : gens) mix(g.key());
  return h;
}

std::filesystem::path sp6_cache_file(const std::filesystem::path& cache_dir) {
  return cache_dir / "sp6-f2.bin";
}

std::optional<Subgroup<GF2Mat>> load_sp6_cache(const std::filesystem::path& cache_dir,
                                               const std::vector<GF2Mat>& gens) {
  std::ifstream in(sp6_cache_file(cache_dir), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  std::uint64_t fp = 0, count = 0;
  if (!get_u64(in, fp) || fp != generator_fingerprint(gens)) return std::nullopt;
  if (!get_u64(in, count) || count == 0 || count > kOrderGuard) return std::nullopt;

  Subgroup<GF2Mat> g;
  g.generators = gens;
  g.elements.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rows = 0;
    if (!get_u64(in, rows)) return std::nullopt;
    g.elements.emplace_back(6, rows);
  }
  return g;
}

void save_sp6_cache(const std::filesystem::path& cache_dir, const Subgroup<GF2Mat>& sp6) {
  std::filesystem::create_directories(cache_dir);
  std::ofstream out(sp6_cache_file(cache_dir), std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write group cache in " + cache_dir.string());
  out.write(kMagic, 8);
  put_u64(out, generator_fingerprint(sp6.generators));
  put_u64(out, sp6.elements.size());
  for (const auto& m : sp6.elements) put_u64(out, m.packed_rows());
  if (!out) throw std::runtime_error("short write to group cache");
}

Subgroup<GF2Mat> load_or_build_sp6(const std::filesystem::path& cache_dir, bool write) {
  const auto gens = sp6_generators();
  if (auto cached = load_sp6_cache(cache_dir, gens)) return std::move(*cached);
  Subgroup<GF2Mat> sp6 = generate_group(gens, 2'000'000);
  if (write) save_sp6_cache(cache_dir, sp6);
  return sp6;
}

void clear_sp6_cache(const std::filesystem::path& cache_dir) {
  std::error_code ec;
  std::filesystem::remove(sp6_cache_file(cache_dir), ec);
}

}  // namespace dp2
