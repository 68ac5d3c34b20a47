#pragma once

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bkclab/cli/report.hpp"

namespace bkclab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHypothesis = 2,
  kCap = 3,
  kInternal = 4,
  kCrossCheck = 5,
};

/// Maps a library error to the documented exit code.
inline int exit_code_for(std::exception_ptr e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const HypothesisFailure& x) {
    err << "hypothesis failure: " << x.what() << '\n';
    return kHypothesis;
  } catch (const RegimeViolated& x) {
    err << "outside the supported regime: " << x.what() << '\n';
    return kHypothesis;
  } catch (const DividedPowerUndefined& x) {
    err << "hypothesis failure: " << x.what() << '\n';
    return kHypothesis;
  } catch (const CapExceeded& x) {
    err << "cap exceeded: " << x.what() << '\n';
    return kCap;
  } catch (const InvalidArgument& x) {
    err << "invalid argument: " << x.what() << '\n';
    return kUsage;
  } catch (const Unsupported& x) {
    err << "unsupported: " << x.what() << '\n';
    return kUsage;
  } catch (const std::exception& x) {
    err << "internal error: " << x.what() << '\n';
    return kInternal;
  }
}

namespace detail {

inline void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw InvalidArgument("cannot write " + output);
  f << text;
}

inline std::string render(const std::string& command, const RunConfig& c, const std::vector<JobResult>& results,
                          bool deterministic) {
  if (c.format == "csv") return render_csv(results);
  if (c.format == "pretty") return render_pretty(results);
  return result_document(command, c, results, deterministic).dump(2) + "\n";
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brylinski-Kostant filtrations of tilting modules over F_p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  bool deterministic = false;
  std::string format = "json", cache_dir, output;
  std::size_t threads = 1;
  Caps caps;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--deterministic", deterministic, "Omit the timestamp");
    sub->add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--output,-o", output, "Write to a file instead of stdout");
  };
  auto add_compute = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cache_dir, "Module cache directory (default $BKCLAB_CACHE)");
    sub->add_option("--dim-cap", caps.dimension, "Largest module dimension")->check(CLI::PositiveNumber);
    sub->add_option("--weyl-cap", caps.weyl, "Largest Weyl group order")->check(CLI::PositiveNumber);
    sub->add_option("--degree-cap", caps.degree, "Largest invariant-model degree")->check(CLI::PositiveNumber);
  };

  std::string group, lambda_text, mu_text, config_path;
  std::uint64_t p = 0, seed = 0;

  auto* check = app.add_subcommand("check", "Validate the group and characteristic");
  check->add_option("--group", group, "GL2, A1sc, B3, G2, ...")->required();
  check->add_option("--p", p, "Prime")->required();
  add_common(check);

  auto* bk = app.add_subcommand("bk", "Filtration, q-analogue and costalk table for T(lambda)");
  bk->add_option("--group", group)->required();
  bk->add_option("--p", p)->required();
  bk->add_option("--lambda", lambda_text, "Comma-separated coordinates")->required();
  bk->add_option("--mu", mu_text, "Comma-separated coordinates (default: all dominant mu <= lambda)");
  bk->add_option("--seed", seed, "Seed for the splitting");
  add_common(bk);
  add_compute(bk);

  auto* verify = app.add_subcommand("verify", "Sweep a TOML config with every cross-check");
  verify->add_option("config", config_path, "TOML file")->required()->check(CLI::ExistingFile);
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_common(verify);
  verify->add_option("--cache-dir", cache_dir, "Module cache directory (default $BKCLAB_CACHE)");

  auto* qa = app.add_subcommand("qanalogue", "Lusztig's q-analogue of weight multiplicity");
  qa->add_option("--group", group)->required();
  qa->add_option("--lambda", lambda_text)->required();
  qa->add_option("--mu", mu_text)->required();
  add_common(qa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      const auto spec = rootdata::GroupSpec::parse(group, p);
      if (p == 0) throw InvalidArgument("p must be a prime");
      const auto rep = rootdata::check_hypotheses(spec);
      std::string text;
      if (format == "json") {
        Json j = document_header("check", deterministic);
        j["hypotheses"] = hypotheses_json(rep);
        text = j.dump(2) + "\n";
      } else if (format == "csv") {
        text = "group,p,p_good,form_nondegenerate,t_adapted_exists,p_at_least_coxeter,verdict\n" + spec.name() + "," +
               std::to_string(p) + "," + std::to_string(rep.p_good) + "," + std::to_string(rep.form_nondegenerate) +
               "," + std::to_string(rep.t_adapted_exists) + "," + std::to_string(rep.p_at_least_coxeter) + "," +
               std::to_string(rep.verdict) + "\n";
      } else {
        for (const auto& [name, ok] :
             {std::pair{"p_good", rep.p_good}, std::pair{"form_nondegenerate", rep.form_nondegenerate},
              std::pair{"t_adapted_exists", rep.t_adapted_exists},
              std::pair{"p_at_least_coxeter", rep.p_at_least_coxeter}})
          text += std::string(name) + ": " + (ok ? "yes" : "no") + "\n";
        text += rep.verdict_label + ": " + (rep.verdict ? "valid" : "invalid") + "\n";
      }
      detail::emit(text, output, out);
      return rep.verdict ? kOk : kHypothesis;
    }

    if (qa->parsed()) {
      const auto d = rootdata::build_root_datum(rootdata::GroupSpec::parse(group));
      const auto lambda = parse_weight(lambda_text), mu = parse_weight(mu_text);
      const auto q = qanalogue::lusztig_q_analogue(d, lambda, mu);
      std::string text;
      if (format == "json") {
        Json j = document_header("qanalogue", deterministic);
        j["group"] = d.spec.name();
        j["lambda"] = weight_json(lambda);
        j["mu"] = weight_json(mu);
        j["q_analogue"] = poly_json(q);
        text = j.dump(2) + "\n";
      } else if (format == "csv") {
        text = "degree,coefficient\n";
        for (std::size_t k = 0; k < q.coefficients().size(); ++k)
          text += std::to_string(k) + "," + std::to_string(q[k]) + "\n";
      } else {
        text = q.to_string() + "\n";
      }
      detail::emit(text, output, out);
      return kOk;
    }

    RunConfig c;
    bool full = false;
    std::string command;
    if (bk->parsed()) {
      command = "bk";
      Job job{group, p, parse_weight(lambda_text), {}};
      if (!mu_text.empty()) job.mus.push_back(parse_weight(mu_text));
      c.jobs.push_back(std::move(job));
      c.seed = seed;
      c.caps = caps;
      c.format = format;
      c.cache_dir = cache_dir;
      validate(c);
    } else {
      command = "verify";
      full = true;
      c = load_config(config_path);
      if (verify->count("--format")) c.format = format;
      if (verify->count("--threads")) c.threads = threads;
      if (!cache_dir.empty()) c.cache_dir = cache_dir;
      validate(c);
    }
    const auto results = run_jobs(c, full);
    detail::emit(detail::render(command, c, results, deterministic), output, out);
    for (const auto& r : results)
      if (!r.all_passed()) {
        err << "cross-check failed for " << r.label << " at p=" << r.job.p << '\n';
        return kCrossCheck;
      }
    return kOk;
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

}  // namespace bkclab::cli
