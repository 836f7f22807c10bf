// dp2cert command-line driver: runs per-claim verifications, the full
// certificate chain, residue profiles, and manages the group-enumeration
// cache.  Exit codes: 0 all verified, 1 something refuted/inconclusive or a
// claim errored, 2 usage/configuration error.

#include "dp2cert/claims.hpp"
#include "dp2cert/models.hpp"
#include "dp2cert/residue_search.hpp"
#include "dp2cert/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;

void write_output(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << j.dump(2) << "\n";
}

int verdict_exit_code(const std::vector<dp2::Certificate>& certs) {
  for (const auto& c : certs)
    if (c.verdict != "verified") return 1;
  return 0;
}

std::optional<dp2::ParityClass> parity_class_from_name(const std::string& name) {
  using PC = dp2::ParityClass;
  if (name == "all-odd") return PC::AllOdd;
  if (name == "w-odd-one-xyz-odd") return PC::WOddOneXyzOdd;
  if (name == "w-even-one-xyz-even") return PC::WEvenOneXyzEven;
  if (name == "odd-parity-sum") return PC::OddParitySum;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(dp2::kToolkitName) +
               " - certificate toolkit for a pointless del Pezzo surface of degree 2"};
  app.require_subcommand(1);

  dp2::RunConfig cfg;
  if (const char* env = std::getenv("DP2CERT_CACHE_DIR")) cfg.cache_dir = env;
  std::string out_path;
  std::string cache_dir_flag;

  app.add_option("--precision", cfg.precision, "2-adic working precision in bits (>= 8)")
      ->capture_default_str();
  app.add_option("--primes", cfg.primes, "primes for the smoothness scan")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "parallelism degree for partitionable scans")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report to this file (default: stdout)");
  app.add_option("--cache-dir", cache_dir_flag,
                 "group-enumeration cache directory (env DP2CERT_CACHE_DIR)");

  auto* verify = app.add_subcommand("verify", "run one claim and print its certificate");
  verify->fallthrough();
  std::string claim_id;
  verify->add_option("claim", claim_id, "claim id, e.g. lemma-2.4")->required();

  auto* verify_all = app.add_subcommand("verify-all", "run every registered claim");
  verify_all->fallthrough();

  auto* cache = app.add_subcommand("cache", "manage the group-enumeration cache");
  cache->require_subcommand(1);
  cache->fallthrough();
  auto* cache_build = cache->add_subcommand("build", "enumerate Sp6(F_2) and write the cache");
  cache_build->fallthrough();
  auto* cache_clear = cache->add_subcommand("clear", "remove the cache file");
  cache_clear->fallthrough();

  auto* profile = app.add_subcommand("profile", "diagnostic profiles");
  profile->require_subcommand(1);
  profile->fallthrough();
  auto* mod_residues =
      profile->add_subcommand("mod-residues", "residues attained by a form on a tuple class");
  mod_residues->fallthrough();
  std::uint64_t modulus = 64;
  std::string class_name = "all-odd";
  std::string form_text;
  mod_residues->add_option("--modulus", modulus, "power-of-two modulus")->capture_default_str();
  mod_residues->add_option("--class", class_name,
                           "all-odd | w-odd-one-xyz-odd | w-even-one-xyz-even | "
                           "odd-parity-sum | primitive")
      ->capture_default_str();
  mod_residues->add_option("--form", form_text,
                           "integer form in w,x,y,z (default: the built-in integral model)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (!cache_dir_flag.empty()) cfg.cache_dir = cache_dir_flag;

  try {
    cfg.validate();

    if (verify->parsed()) {
      if (!dp2::is_registered_claim(claim_id)) {
        std::cerr << "error: unknown claim id '" << claim_id << "'\n";
        std::cerr << "registered claims:";
        for (const auto& id : dp2::registered_claims()) std::cerr << " " << id;
        std::cerr << "\n";
        return 2;
      }
      dp2::Certificate cert = dp2::run_claim(claim_id, cfg);
      write_output(cert.to_json(), out_path);
      return cert.verdict == "verified" ? 0 : 1;
    }

    if (verify_all->parsed()) {
      dp2::RunAllResult res = dp2::run_all(cfg);
      write_output(res.report, out_path);
      for (const auto& c : res.certificates)
        std::cerr << c.claim << ": " << c.verdict << "\n";
      return verdict_exit_code(res.certificates);
    }

    if (cache->parsed()) {
      if (cache_build->parsed()) {
        const auto t0 = std::chrono::steady_clock::now();
        dp2::Subgroup<dp2::GF2Mat> sp6 = dp2::load_or_build_sp6(cfg.cache_dir, false);
        dp2::save_sp6_cache(cfg.cache_dir, sp6);
        const auto t1 = std::chrono::steady_clock::now();
        json j;
        j["cache_file"] = dp2::sp6_cache_file(cfg.cache_dir).string();
        j["order"] = sp6.order();
        j["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        write_output(j, out_path);
        return 0;
      }
      if (cache_clear->parsed()) {
        dp2::clear_sp6_cache(cfg.cache_dir);
        json j;
        j["cleared"] = dp2::sp6_cache_file(cfg.cache_dir).string();
        write_output(j, out_path);
        return 0;
      }
    }

    if (profile->parsed() && mod_residues->parsed()) {
      if (modulus < 2 || (modulus & (modulus - 1)) != 0) {
        std::cerr << "error: --modulus must be a power of two >= 2\n";
        return 2;
      }
      unsigned k = 0;
      for (std::uint64_t m = modulus; m > 1; m >>= 1) ++k;

      dp2::WeightedForm<dp2::Rational> form =
          form_text.empty()
              ? dp2::models::local_model_form()
              : dp2::parse_form<dp2::Rational>(form_text, dp2::models::surface_vars(),
                                               dp2::models::surface_weights());

      std::vector<dp2::TupleClass> filters;
      if (class_name == "primitive") {
        for (auto c : {dp2::ParityClass::AllOdd, dp2::ParityClass::WOddOneXyzOdd,
                       dp2::ParityClass::WEvenOneXyzEven, dp2::ParityClass::OddParitySum}) {
          auto f = dp2::parity_class_filters(c);
          filters.insert(filters.end(), f.begin(), f.end());
        }
      } else if (auto pc = parity_class_from_name(class_name)) {
        filters = dp2::parity_class_filters(*pc);
      } else {
        std::cerr << "error: unknown tuple class '" << class_name << "'\n";
        return 2;
      }

      const auto prof = dp2::residue_profile(form, k, filters, cfg.jobs);
      json j;
      j["form"] = dp2::to_text(form);
      j["modulus"] = "2^" + std::to_string(k);
      j["class"] = class_name;
      json pj = json::object();
      std::uint64_t total = 0;
      for (const auto& [r, n] : prof) {
        pj[std::to_string(r)] = n;
        total += n;
      }
      j["profile"] = pj;
      j["tuples"] = total;
      write_output(j, out_path);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
