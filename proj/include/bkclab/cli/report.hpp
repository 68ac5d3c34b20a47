#pragma once

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "bkclab/bkfilt/filtration.hpp"
#include "bkclab/cli/cache.hpp"
#include "bkclab/invmodel/invariants.hpp"
#include "bkclab/qanalogue/lusztig.hpp"
#include "bkclab/repbuild/oracles.hpp"

namespace bkclab::cli {

using Json = nlohmann::ordered_json;
using qanalogue::QPolynomial;

struct Verdict {
  bool value = false;
  Json evidence;
};

struct MuResult {
  bkfilt::FiltrationReport bk;
  std::optional<QPolynomial> q;
  exactalg::Integer freudenthal;
  std::int64_t dim_gr = 0;
  std::map<std::string, Verdict> verdicts;  // only the checks that apply
};

struct JobResult {
  Job job;
  rootdata::HypothesisReport hypotheses;
  std::string label, route;
  std::size_t dim = 0;
  repbuild::Character character;
  std::vector<std::string> steps;
  bool lowest_alcove = false;
  std::vector<MuResult> results;

  bool all_passed() const {
    for (const auto& r : results)
      for (const auto& [name, v] : r.verdicts)
        if (!v.value) return false;
    return true;
  }
};

inline std::string failing_flags(const rootdata::HypothesisReport& h) {
  std::string s;
  for (const auto& [name, ok] : {std::pair{"p_good", h.p_good}, std::pair{"form_nondegenerate", h.form_nondegenerate},
                                 std::pair{"t_adapted_exists", h.t_adapted_exists},
                                 std::pair{"p_at_least_coxeter", h.p_at_least_coxeter}})
    if (!ok) s += (s.empty() ? "" : ", ") + std::string(name);
  return s;
}

inline Json int_json(std::int64_t x) { return std::to_string(x); }
inline Json int_json(const exactalg::Integer& x) { return x.get_str(); }

inline Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (auto x : w) a.push_back(int_json(x));
  return a;
}

inline Json poly_json(const QPolynomial& q) {
  Json a = Json::array();
  for (auto c : q.coefficients()) a.push_back(int_json(c));
  return a;
}

inline Json sizes_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(int_json(static_cast<std::int64_t>(x)));
  return a;
}

inline Json hypotheses_json(const rootdata::HypothesisReport& h) {
  Json j;
  j["group"] = h.spec.name();
  j["p"] = int_json(static_cast<std::int64_t>(h.spec.p));
  j["p_good"] = h.p_good;
  j["form_nondegenerate"] = h.form_nondegenerate;
  j["t_adapted_exists"] = h.t_adapted_exists;
  j["p_at_least_coxeter"] = h.p_at_least_coxeter;
  j["verdict"] = h.verdict;
  j["verdict_label"] = h.verdict_label;
  if (h.h) {
    Json a = Json::array();
    for (const auto& x : *h.h) a.push_back(x.get_str());
    j["h"] = a;
  } else {
    j["h"] = nullptr;
  }
  return j;
}

/// Builds T(lambda) and its filtrations; `full` adds the invariant-model and route cross-checks.
inline JobResult compute_job(const Job& job, std::uint64_t seed, const Caps& caps, const TiltingCache& cache,
                             bool full) {
  const auto spec = rootdata::GroupSpec::parse(job.group, job.p);
  const auto d = rootdata::build_root_datum(spec);
  JobResult out;
  out.job = job;
  out.hypotheses = rootdata::check_hypotheses(spec);
  if (!out.hypotheses.verdict)
    throw HypothesisFailure(spec.name() + " at p=" + std::to_string(job.p) + " fails " + failing_flags(out.hypotheses));
  d.check_weight(job.lambda);
  if (!d.is_dominant(job.lambda)) throw InvalidArgument("lambda must be dominant");

  const auto t = cache.load_or_build(d, job.p, job.lambda, seed, caps.dimension);
  out.label = t.label;
  out.route = t.route;
  out.dim = t.module.dim();
  out.character = repbuild::character(t.module);
  out.steps = t.steps;
  out.lowest_alcove = tilting::in_lowest_alcove(d, job.p, job.lambda);
  const auto pair = bkfilt::principal_pair(d, job.p);
  const auto fam = bkfilt::family_for_tilting(d, t, pair, caps.dimension);

  std::optional<bkfilt::DividedPowerFamily> other;
  std::string other_route;
  std::optional<rootdata::ChevalleyAlgebra> g;
  if (full) {
    g = rootdata::chevalley_algebra(d);
    const bool tensor_ok = (d.is_gl() || spec.family == rootdata::Family::A) &&
                           job.p >= static_cast<std::uint64_t>(d.coxeter_number);
    if (out.lowest_alcove && tensor_ok) {
      std::mt19937_64 rng(seed);
      other = bkfilt::family_for_tilting(d, tilting::extract_tilting(d, job.p, job.lambda, rng, caps.dimension), pair,
                                         caps.dimension);
      other_route = "tensor-split";
    } else if (!out.lowest_alcove) {
      std::mt19937_64 rng(seed + 1);
      other = bkfilt::family_for_tilting(d, tilting::extract_tilting(d, job.p, job.lambda, rng, caps.dimension), pair,
                                         caps.dimension);
      other_route = "tensor-split seed " + std::to_string(seed + 1);
    }
  }

  const auto mus = job.mus.empty() ? d.dominant_weights_below(job.lambda) : job.mus;
  for (const auto& mu : mus) {
    MuResult r;
    r.bk = bkfilt::bk_filtration(d, fam, mu);
    const bool dominant = d.is_dominant(mu);
    if (dominant) r.q = qanalogue::lusztig_q_analogue(d, job.lambda, mu, caps.weyl);
    r.dim_gr = rootdata::dim_gr(d, d.dominant_conjugate(mu));
    r.freudenthal = repbuild::freudenthal_multiplicity(d, job.lambda, d.dominant_conjugate(mu));

    const auto weight_dim = static_cast<std::int64_t>(r.bk.weight_dim());
    const auto freud = r.freudenthal.get_si();
    {
      Verdict v;
      v.value = r.bk.jump.at_one() == weight_dim && (!r.q || r.q->at_one() == freud) &&
                (out.lowest_alcove ? weight_dim == freud : weight_dim >= freud);
      v.evidence = {{"jump_at_one", int_json(r.bk.jump.at_one())},
                    {"weight_dim", int_json(weight_dim)},
                    {"freudenthal", int_json(r.freudenthal)}};
      if (r.q) v.evidence["q_at_one"] = int_json(r.q->at_one());
      r.verdicts["sum_rule"] = std::move(v);
    }
    if (out.lowest_alcove && r.q) {
      r.verdicts["char0_match"] = {r.bk.jump == *r.q, {{"jump", poly_json(r.bk.jump)}, {"q_analogue", poly_json(*r.q)}}};
    }
    if (full) {
      auto ht = d.height(rootdata::add(job.lambda, mu, -1));
      const std::size_t needed = ht && *ht >= 0 ? static_cast<std::size_t>(*ht) : 0;
      if (needed + 1 > caps.degree)
        throw CapExceeded("invariant model needs degree " + std::to_string(needed + 1) + ", cap " +
                          std::to_string(caps.degree));
      const auto inv = invmodel::b_invariant_filtration(d, *g, t.module, job.lambda, pair.h, mu);
      std::vector<std::size_t> bk_dims, ranks;
      bool spans = true;
      for (std::size_t n = 0; n < inv.dims.size(); ++n) {
        const std::size_t k = std::min(n + 1, r.bk.dims.size() - 1);
        bk_dims.push_back(r.bk.dims[k]);
        const auto image = invmodel::evaluation_lambda(inv, n);
        ranks.push_back(exactalg::rank(image));
        const auto both = exactalg::rank(exactalg::hconcat(image, r.bk.bases[k]));
        spans = spans && both == ranks.back() && both == r.bk.dims[k];
      }
      r.verdicts["invmodel_match"] = {
          inv.dims == bk_dims && ranks == inv.dims && spans,
          {{"bk_dims", sizes_json(bk_dims)}, {"invariant_dims", sizes_json(inv.dims)}, {"lambda_ranks", sizes_json(ranks)}}};
    }
    if (other) {
      const auto alt = bkfilt::bk_filtration(d, *other, mu);
      r.verdicts["route_consistency"] = {
          alt.dims == r.bk.dims && alt.jump == r.bk.jump,
          {{"route", out.route}, {"other_route", other_route}, {"dims", sizes_json(r.bk.dims)},
           {"other_dims", sizes_json(alt.dims)}}};
    }
    for (const auto& [name, v] : r.verdicts) r.bk.flags[name] = v.value;
    out.results.push_back(std::move(r));
  }
  return out;
}

/// Runs jobs on a pool; results stay in job order, the first failure in job order is rethrown.
inline std::vector<JobResult> run_jobs(const RunConfig& c, bool full) {
  const TiltingCache cache(resolve_cache_dir(c.cache_dir));
  std::vector<std::optional<JobResult>> slots(c.jobs.size());
  std::vector<std::exception_ptr> errors(c.jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < c.jobs.size();) {
      try {
        slots[k] = compute_job(c.jobs[k], c.seed, c.caps, cache, full);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min(c.threads, c.jobs.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<JobResult> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline Json mu_json(const MuResult& r) {
  Json j;
  j["mu"] = weight_json(r.bk.mu);
  j["dims"] = sizes_json(r.bk.dims);
  j["graded"] = sizes_json(r.bk.graded);
  j["jump"] = poly_json(r.bk.jump);
  j["q_analogue"] = r.q ? poly_json(*r.q) : Json(nullptr);
  j["freudenthal"] = int_json(r.freudenthal);
  Json costalk = Json::array();
  for (const auto& [deg, dim] : r.bk.costalk)
    costalk.push_back({{"degree", int_json(deg)}, {"dim", int_json(static_cast<std::int64_t>(dim))}});
  j["costalk"] = costalk;
  Json verdicts = Json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = {{"value", v.value}, {"evidence", v.evidence}};
  j["verdicts"] = verdicts;
  return j;
}

inline Json job_json(const JobResult& r) {
  Json j;
  j["group"] = r.hypotheses.spec.name();
  j["p"] = int_json(static_cast<std::int64_t>(r.job.p));
  j["lambda"] = weight_json(r.job.lambda);
  j["hypotheses"] = hypotheses_json(r.hypotheses);
  Json character = Json::array();
  for (const auto& [w, m] : r.character)
    character.push_back({{"weight", weight_json(w)}, {"multiplicity", int_json(static_cast<std::int64_t>(m))}});
  j["tilting"] = {{"label", r.label},         {"route", r.route},     {"dim", int_json(static_cast<std::int64_t>(r.dim))},
                  {"lowest_alcove", r.lowest_alcove}, {"character", character}, {"steps", r.steps}};
  Json reports = Json::array();
  for (const auto& m : r.results) reports.push_back(mu_json(m));
  j["reports"] = reports;
  return j;
}

inline Json caps_json(const Caps& c) {
  return {{"dimension", int_json(static_cast<std::int64_t>(c.dimension))},
          {"weyl", int_json(static_cast<std::int64_t>(c.weyl))},
          {"degree", int_json(static_cast<std::int64_t>(c.degree))}};
}

inline Json config_json(const RunConfig& c) {
  Json jobs = Json::array();
  for (const auto& j : c.jobs) {
    Json mus = Json::array();
    for (const auto& m : j.mus) mus.push_back(weight_json(m));
    jobs.push_back({{"group", j.group},
                    {"p", int_json(static_cast<std::int64_t>(j.p))},
                    {"lambda", weight_json(j.lambda)},
                    {"mu", j.mus.empty() ? Json("all") : mus}});
  }
  return {{"seed", std::to_string(c.seed)}, {"caps", caps_json(c.caps)}, {"jobs", jobs}};
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json document_header(const std::string& command, bool deterministic) {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  if (!deterministic) j["timestamp"] = utc_timestamp();
  return j;
}

inline Json result_document(const std::string& command, const RunConfig& c, const std::vector<JobResult>& results,
                            bool deterministic) {
  Json j = document_header(command, deterministic);
  j["config"] = config_json(c);
  Json jobs = Json::array();
  for (const auto& r : results) jobs.push_back(job_json(r));
  j["results"] = jobs;
  return j;
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

/// Rows (group, p, lambda, mu, n, g_n, degree, q_coeff); degree is 2n - dim Gr^mu.
inline std::string render_csv(const std::vector<JobResult>& results) {
  std::string out = "group,p,lambda,mu,n,g_n,degree,q_coeff\n";
  for (const auto& r : results)
    for (const auto& m : r.results) {
      const std::size_t len = std::max(m.bk.graded.size(), m.q ? m.q->coefficients().size() : 0);
      for (std::size_t n = 0; n < len; ++n) {
        out += r.hypotheses.spec.name() + "," + std::to_string(r.job.p) + "," + csv_quote(weight_key(r.job.lambda)) +
               "," + csv_quote(weight_key(m.bk.mu)) + "," + std::to_string(n) + "," +
               std::to_string(n < m.bk.graded.size() ? m.bk.graded[n] : 0) + "," +
               std::to_string(2 * static_cast<std::int64_t>(n) - m.dim_gr) + "," +
               (m.q ? std::to_string((*m.q)[n]) : std::string()) + "\n";
      }
    }
  return out;
}

inline std::string render_pretty(const std::vector<JobResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.hypotheses.spec.name() + " p=" + std::to_string(r.job.p) + " " + r.label + " [" + r.route + ", dim " +
           std::to_string(r.dim) + "]\n";
    for (const auto& m : r.results) {
      out += "  mu=" + rootdata::to_string(m.bk.mu) + ": jump " + m.bk.jump.to_string();
      if (m.q) out += ", q-analogue " + m.q->to_string();
      if (!m.bk.costalk.empty()) {
        out += ", costalk {";
        bool first = true;
        for (const auto& [deg, dim] : m.bk.costalk) {
          out += (first ? "" : ", ") + std::to_string(deg) + ":" + std::to_string(dim);
          first = false;
        }
        out += "}";
      }
      out += "\n";
      for (const auto& [name, v] : m.verdicts) out += "    " + name + (v.value ? " ok" : " FAILED") + "\n";
    }
  }
  return out;
}

}  // namespace bkclab::cli
