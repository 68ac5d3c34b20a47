#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <toml.hpp>

#include "bkclab/repbuild/modular.hpp"
#include "bkclab/rootdata/root_datum.hpp"

namespace bkclab::cli {

using rootdata::Weight;

inline constexpr const char* kSchema = "bkclab/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct Caps {
  std::size_t dimension = repbuild::kDefaultDimensionCap;
  std::size_t weyl = 10000;
  std::size_t degree = 16;
};

/// One (group, p, lambda) tuple; mu empty means every dominant mu <= lambda.
struct Job {
  std::string group;
  std::uint64_t p = 0;
  Weight lambda;
  std::vector<Weight> mus;

  std::string key() const;
};

struct RunConfig {
  std::vector<Job> jobs;
  std::uint64_t seed = 0;
  Caps caps;
  std::string cache_dir;
  std::string format = "json";
  std::size_t threads = 1;
};

inline Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw InvalidArgument("empty coordinate in weight '" + text + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidArgument("bad coordinate '" + item + "' in weight '" + text + "'");
    w.push_back(v);
  }
  if (w.empty()) throw InvalidArgument("empty weight");
  return w;
}

inline std::string weight_key(const Weight& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

inline std::string Job::key() const {
  return rootdata::GroupSpec::parse(group).name() + "|" + std::to_string(p) + "|" + weight_key(lambda);
}

inline void validate(const RunConfig& c) {
  if (c.caps.dimension == 0 || c.caps.weyl == 0 || c.caps.degree == 0) throw InvalidArgument("caps must be positive");
  if (c.format != "json" && c.format != "csv" && c.format != "pretty")
    throw InvalidArgument("format must be json, csv or pretty, got '" + c.format + "'");
  if (c.threads == 0) throw InvalidArgument("threads must be positive");
  for (const auto& j : c.jobs) {
    const auto spec = rootdata::GroupSpec::parse(j.group, j.p);
    if (j.p == 0) throw InvalidArgument("job " + j.group + " needs a prime p");
    const auto d = rootdata::build_root_datum(spec);
    d.check_weight(j.lambda);
    for (const auto& mu : j.mus) d.check_weight(mu);
  }
}

/// Jobs in sorted key order with duplicates removed.
inline void normalize(RunConfig& c) {
  std::stable_sort(c.jobs.begin(), c.jobs.end(), [](const Job& a, const Job& b) { return a.key() < b.key(); });
  c.jobs.erase(std::unique(c.jobs.begin(), c.jobs.end(),
                           [](const Job& a, const Job& b) { return a.key() == b.key() && a.mus == b.mus; }),
               c.jobs.end());
}

namespace detail {

inline std::int64_t toml_int(const toml::node& n, const std::string& what) {
  auto v = n.value<std::int64_t>();
  if (!v) throw InvalidArgument(what + " must be an integer");
  return *v;
}

inline Weight toml_weight(const toml::node& n, const std::string& what) {
  const auto* arr = n.as_array();
  if (!arr || arr->empty()) throw InvalidArgument(what + " must be a non-empty integer array");
  Weight w;
  for (const auto& x : *arr) w.push_back(toml_int(x, what));
  return w;
}

/// A single weight [a, b] or a list of weights [[a, b], [c, d]].
inline std::vector<Weight> toml_weights(const toml::node& n, const std::string& what) {
  const auto* arr = n.as_array();
  if (!arr || arr->empty()) throw InvalidArgument(what + " must be a non-empty array");
  if (!(*arr)[0].is_array()) return {toml_weight(n, what)};
  std::vector<Weight> out;
  for (const auto& x : *arr) out.push_back(toml_weight(x, what));
  return out;
}

inline std::size_t toml_size(const toml::node_view<const toml::node>& v, std::size_t fallback, const std::string& what) {
  if (!v) return fallback;
  const auto x = toml_int(*v.node(), what);
  if (x <= 0) throw InvalidArgument(what + " must be positive");
  return static_cast<std::size_t>(x);
}

}  // namespace detail

inline RunConfig parse_config(const toml::table& t) {
  RunConfig c;
  if (auto s = t["seed"]) c.seed = static_cast<std::uint64_t>(detail::toml_int(*s.node(), "seed"));
  if (auto f = t["format"]) c.format = f.value<std::string>().value_or("");
  if (auto d = t["cache_dir"]) c.cache_dir = d.value<std::string>().value_or("");
  c.threads = detail::toml_size(t["threads"], c.threads, "threads");
  if (const auto* caps = t["caps"].as_table()) {
    const toml::table& ct = *caps;
    c.caps.dimension = detail::toml_size(ct["dimension"], c.caps.dimension, "caps.dimension");
    c.caps.weyl = detail::toml_size(ct["weyl"], c.caps.weyl, "caps.weyl");
    c.caps.degree = detail::toml_size(ct["degree"], c.caps.degree, "caps.degree");
  }
  const auto* jobs = t["job"].as_array();
  if (!jobs || jobs->empty()) throw InvalidArgument("config needs at least one [[job]]");
  for (const auto& node : *jobs) {
    const auto* jt = node.as_table();
    if (!jt) throw InvalidArgument("[[job]] entries must be tables");
    const toml::table& job = *jt;
    auto group = job["group"].value<std::string>();
    if (!group) throw InvalidArgument("job needs a group");
    std::vector<std::uint64_t> primes;
    const auto pv = job["p"];
    if (!pv) throw InvalidArgument("job needs p");
    if (const auto* arr = pv.as_array()) {
      for (const auto& x : *arr) primes.push_back(static_cast<std::uint64_t>(detail::toml_int(x, "p")));
    } else {
      primes.push_back(static_cast<std::uint64_t>(detail::toml_int(*pv.node(), "p")));
    }
    if (!job["lambda"]) throw InvalidArgument("job needs lambda");
    const auto lambdas = detail::toml_weights(*job["lambda"].node(), "lambda");
    std::vector<Weight> mus;
    if (const auto mu = job["mu"]) {
      if (mu.value<std::string>()) {
        if (*mu.value<std::string>() != "all") throw InvalidArgument("mu must be \"all\" or weights");
      } else {
        mus = detail::toml_weights(*mu.node(), "mu");
      }
    }
    for (auto p : primes)
      for (const auto& l : lambdas) c.jobs.push_back({*group, p, l, mus});
  }
  normalize(c);
  validate(c);
  return c;
}

inline RunConfig load_config(const std::string& path) {
  toml::table t;
  try {
    t = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    throw InvalidArgument("cannot parse " + path + ": " + std::string(e.description()));
  }
  return parse_config(t);
}

}  // namespace bkclab::cli
