#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "bkclab/cli/config.hpp"
#include "bkclab/tilting/serialize.hpp"

namespace bkclab::cli {

/// Directory from the flag, then BKCLAB_CACHE, then none.
inline std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("BKCLAB_CACHE")) return env;
  return {};
}

class TiltingCache {
 public:
  explicit TiltingCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::filesystem::path path_for(const rootdata::RootDatum& d, std::uint64_t p, const Weight& lambda,
                                 std::uint64_t seed) const {
    std::string name = d.spec.name() + "_p" + std::to_string(p) + "_";
    for (std::size_t k = 0; k < lambda.size(); ++k)
      name += (k ? "_" : "") + (lambda[k] < 0 ? "m" + std::to_string(-lambda[k]) : std::to_string(lambda[k]));
    name += "_s" + std::to_string(seed) + ".json";
    return std::filesystem::path(dir_) / name;
  }

  tilting::TiltingModule load_or_build(const rootdata::RootDatum& d, std::uint64_t p, const Weight& lambda,
                                       std::uint64_t seed, std::size_t dimension_cap) const {
    if (enabled()) {
      const auto path = path_for(d, p, lambda, seed);
      std::ifstream in(path);
      if (in) {
        try {
          auto t = tilting::tilting_from_json(nlohmann::ordered_json::parse(in));
          if (t.lambda == lambda && t.module.p == p) return t;
        } catch (const std::exception&) {
          // Unreadable entries are rebuilt and overwritten.
        }
      }
    }
    std::mt19937_64 rng(seed);
    auto t = tilting::build_tilting(d, p, lambda, rng, dimension_cap);
    if (enabled()) store(path_for(d, p, lambda, seed), t);
    return t;
  }

 private:
  static void store(const std::filesystem::path& path, const tilting::TiltingModule& t) {
    std::filesystem::create_directories(path.parent_path());
    std::ostringstream tag;
    tag << std::this_thread::get_id();
    const auto tmp = path.string() + ".tmp" + tag.str();
    {
      std::ofstream out(tmp);
      if (!out) throw InvalidArgument("cannot write cache file " + tmp);
      out << tilting::tilting_to_json(t).dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
  }

  std::string dir_;
};

}  // namespace bkclab::cli
