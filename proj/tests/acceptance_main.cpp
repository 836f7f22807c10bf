// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Each criterion is checked at its stated tolerance; the
// runtime targets are asserted, not just reported.

#include "dp2cert/claims.hpp"
#include "dp2cert/descent.hpp"
#include "dp2cert/geometry.hpp"
#include "dp2cert/models.hpp"
#include "dp2cert/padic.hpp"
#include "dp2cert/poly_text.hpp"
#include "dp2cert/residue_search.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace dp2;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(int n, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::filesystem::path acceptance_cache_dir() {
  return std::filesystem::temp_directory_path() / "dp2cert-acceptance-cache";
}

}  // namespace

// 1. Exhaustive mod-64 enumeration: 0 solutions over exactly 15,728,640
//    primitive tuples, single-threaded under 60 s.
static void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  ResidueSearchSpec spec{models::local_model_form(), 6, Primitivity::AtLeastOneOdd};
  const auto r = enumerate_residue_solutions(spec, /*jobs=*/1);
  const double secs = seconds_since(t0);
  const bool ok = r.solutions == 0 && r.tuples_checked == 15728640ull && secs < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "solutions=%llu tuples=%llu time=%.2fs",
                (unsigned long long)r.solutions, (unsigned long long)r.tuples_checked, secs);
  criterion(1, "no primitive zero of the integral model mod 64", ok, buf);
}

// 2. hensel_sqrt(-7, 7) gives {53, 75} = {+-181 mod 128}; exact squaring at
//    precision 20.
static void criterion_2() {
  const Int r7 = hensel_sqrt(Int(-7), 7);
  const Int r20 = hensel_sqrt(Int(-7), 20);
  const bool roots_ok = r7 == 53 && mod_pow2(-r7, 7) == 75 &&
                        mod_pow2(Int(181), 7) == 53 && mod_pow2(Int(-181), 7) == 75;
  const bool square_ok = mod_pow2(r20 * r20 + 7, 20) == 0 && mod_pow2(r20, 7) == r7;
  criterion(2, "2-adic square root of -7: root set {53, 75} mod 128, exact at 20 bits",
            roots_ok && square_ok,
            "roots {" + r7.str() + ", " + mod_pow2(-r7, 7).str() + "}");
}

// 3. theta((3/2)(1-sqrt(-7))) = 50 mod 64 under theta1; the homomorphism
//    property holds on 1000 seeded random pairs at precision 64.
static void criterion_3() {
  const unsigned k = 64;
  const auto th1 = EmbeddingChoice::theta1(k + 80);
  const QuadExt<-7> ratio(Rational(3, 2), Rational(-3, 2));
  const Int got = embed_theta(ratio, th1, 8).residue_mod(6);
  bool ok = got == 50 && got == mod_pow2(Int(-14), 6);

  std::mt19937_64 rng(0xacce97ad);
  auto rand_int2adic = [&rng]() {
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(0, 4);
    return Rational(num(rng), 2 * den(rng) + 1);
  };
  const Int m = pow2(k);
  unsigned good = 0;
  for (int i = 0; i < 1000; ++i) {
    const QuadExt<-7> x(rand_int2adic(), rand_int2adic());
    const QuadExt<-7> y(rand_int2adic(), rand_int2adic());
    const Int tx = embed_theta(x, th1, k + 8).residue_mod(k);
    const Int ty = embed_theta(y, th1, k + 8).residue_mod(k);
    const bool mul_ok = (tx * ty - embed_theta(x * y, th1, k + 8).residue_mod(k)) % m == 0;
    const bool add_ok = (tx + ty - embed_theta(x + y, th1, k + 8).residue_mod(k)) % m == 0;
    if (mul_ok && add_ok) ++good;
  }
  ok = ok && good == 1000;
  criterion(3, "theta embedding: -14 mod 64 and 1000-pair homomorphism at 64 bits", ok,
            "residue=" + got.str() + " pairs=" + std::to_string(good) + "/1000");
}

// 4. The quantitative Lemma 2.6 chain, with cache build under 5 minutes and a
//    warm reload under 10 seconds.
static void criterion_4() {
  const auto dir = acceptance_cache_dir();
  std::filesystem::remove_all(dir);

  const auto t_cold = std::chrono::steady_clock::now();
  const Subgroup<GF2Mat> sp6 = load_or_build_sp6(dir, true);
  const double cold = seconds_since(t_cold);

  const auto t_warm = std::chrono::steady_clock::now();
  const Subgroup<GF2Mat> sp6_warm = load_or_build_sp6(dir, true);
  const double warm = seconds_since(t_warm);

  const Subgroup<WeylElem> w = weyl_e7_model(sp6);
  std::vector<WeylElem> psl_gens;
  for (const auto& g : psl32_generators()) psl_gens.emplace_back(false, embed_psl32(g));
  const auto cen_psl = centralizer(psl_gens, w);
  const WeylElem g7 = order7_weyl_representative();
  const auto cen7 = centralizer({g7}, w);
  const std::uint64_t cls = conjugacy_class_size(g7, w);

  const bool ok = sp6.order() == 1451520 && sp6_warm.elements == sp6.elements &&
                  w.elements.size() == 2903040 && cen_psl.elements.size() == 2 &&
                  cen7.elements.size() == 14 && cls == 207360 &&
                  cls * cen7.elements.size() == w.elements.size() && cold < 300.0 &&
                  warm < 10.0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "|Sp6|=%zu |W|=%zu |C(PSL3)|=%zu |C(g7)|=%zu class=%llu cold=%.1fs warm=%.2fs",
                sp6.order(), w.elements.size(), cen_psl.elements.size(), cen7.elements.size(),
                (unsigned long long)cls, cold, warm);
  criterion(4, "W(E7) model: orders, centralizers, class size, orbit-stabilizer", ok, buf);
}

// 5. Simplicity: true for the 168-element embedded PSL3(F_2), false for Z/4.
static void criterion_5() {
  std::vector<WeylElem> psl_gens;
  for (const auto& g : psl32_generators()) psl_gens.emplace_back(false, embed_psl32(g));
  const auto psl = generate_group(psl_gens, 1000);

  GF2Mat jordan = GF2Mat::identity(3);
  jordan.set(0, 1, true);
  jordan.set(1, 2, true);
  const auto z4 = generate_group(std::vector<WeylElem>{WeylElem(false, embed_psl32(jordan))});

  const bool ok = psl.order() == 168 && is_simple(psl) && z4.order() == 4 && !is_simple(z4);
  criterion(5, "simplicity test: PSL3(F_2) simple, Z/4 not", ok);
}

// 6. Geometry: the bitangent, both line lifts, field of definition, the
//    Geiser swap, and a smooth reduction with an exact P^2(F_p) scan.
static void criterion_6() {
  const TernaryQuartic quartic{models::branch_quartic()};
  const DoubleCoverSurface surface = DoubleCoverSurface::from_quartic(quartic);

  const auto bc = is_bitangent(models::bitangent_line(), quartic);
  const bool bit_ok = bc.is_bitangent && bc.q == models::lift_quadratic();

  const BitangentLift lift{models::bitangent_line(), models::lift_scale_mu(),
                           models::lift_quadratic()};
  const bool lines_ok = verify_line_on_surface(lift, surface);
  const bool swap_ok = geiser_swaps_lifts(lift);
  const bool fod_ok = field_of_definition_check(lift, surface).not_defined_over_base;

  bool smooth_ok = false;
  std::uint32_t witness = 0;
  std::uint64_t scanned = 0;
  for (std::uint32_t p : RunConfig{}.primes) {
    const auto s = sqrt_mod(-7, p);
    if (!s) continue;
    const auto res = smooth_via_good_reduction(quartic, p, *s);
    if (res.smooth) {
      smooth_ok = true;
      witness = p;
      scanned = res.scans[0].points_scanned;
      break;
    }
  }
  smooth_ok = smooth_ok && scanned == std::uint64_t(witness) * witness + witness + 1;

  const bool ok = bit_ok && lines_ok && swap_ok && fod_ok && smooth_ok;
  criterion(6, "bitangent + lifts + field of definition + Geiser swap + smooth reduction", ok,
            "q=" + to_text(bc.q) + " witness_prime=" + std::to_string(witness));
}

// 7. Property suites: the mod-8 case analysis, parallel/serial equality,
//    padic valuation/homomorphism properties, symplectic preservation for
//    every enumerated element, and report determinism across --jobs.
static void criterion_7() {
  const auto f = models::local_model_form();

  // Lemma 2.4 case analysis mod 8.  The paper's first and second cases give
  // f = +-2 mod 8: computation shows all-odd attains exactly {6} and
  // w-odd-one-xyz-odd exactly {2}; jointly exactly {2, 6}.  (The per-case
  // sets are strict subsets -- recorded in the run log below.)
  const auto p1 = residue_profile(f, 3, ParityClass::AllOdd);
  const auto p2 = residue_profile(f, 3, ParityClass::WOddOneXyzOdd);
  std::set<std::uint32_t> r1, r2, joint;
  for (const auto& [r, n] : p1) r1.insert(r);
  for (const auto& [r, n] : p2) r2.insert(r);
  joint = r1;
  joint.insert(r2.begin(), r2.end());
  const std::set<std::uint32_t> pm2{2, 6};
  const bool case_ok = std::includes(pm2.begin(), pm2.end(), r1.begin(), r1.end()) &&
                       std::includes(pm2.begin(), pm2.end(), r2.begin(), r2.end()) &&
                       joint == pm2;

  // Parallel and serial enumeration agree exactly.
  ResidueSearchSpec spec{f, 6, Primitivity::AtLeastOneOdd};
  const auto serial = enumerate_residue_solutions(spec, 1);
  const auto parallel = enumerate_residue_solutions(spec, 4);
  const bool par_ok = serial.solutions == parallel.solutions &&
                      serial.tuples_checked == parallel.tuples_checked &&
                      serial.witnesses == parallel.witnesses;

  // Valuation ultrametric + embedding homomorphism, seeded.
  std::mt19937_64 rng(77);
  auto rr = [&rng]() {
    std::uniform_int_distribution<int> num(1, 200);
    std::uniform_int_distribution<int> den(1, 40);
    std::uniform_int_distribution<int> sign(0, 1);
    return Rational((sign(rng) ? 1 : -1) * num(rng), den(rng));
  };
  bool padic_ok = true;
  for (int i = 0; i < 300; ++i) {
    const Rational x = rr(), y = rr();
    if (*val2(x * y) != *val2(x) + *val2(y)) padic_ok = false;
    if (x + y != 0 && *val2(x + y) < std::min(*val2(x), *val2(y))) padic_ok = false;
    if (*val2(x) != *val2(y) && x + y != 0 &&
        *val2(x + y) != std::min(*val2(x), *val2(y)))
      padic_ok = false;
  }
  const auto th1 = EmbeddingChoice::theta1(96);
  for (int i = 0; i < 200 && padic_ok; ++i) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(0, 3);
    const QuadExt<-7> x(Rational(num(rng), 2 * den(rng) + 1), Rational(num(rng), 2 * den(rng) + 1));
    const QuadExt<-7> y(Rational(num(rng), 2 * den(rng) + 1), Rational(num(rng), 2 * den(rng) + 1));
    const Int tx = embed_theta(x, th1, 16).residue_mod(8);
    const Int ty = embed_theta(y, th1, 16).residue_mod(8);
    if ((tx * ty - embed_theta(x * y, th1, 16).residue_mod(8)) % 256 != 0) padic_ok = false;
  }

  // Every enumerated Sp6 element preserves J (uses the criterion-4 cache).
  const Subgroup<GF2Mat> sp6 = load_or_build_sp6(acceptance_cache_dir(), true);
  bool symp_ok = sp6.order() == 1451520;
  for (const auto& m : sp6.elements)
    if (!is_symplectic(m)) symp_ok = false;

  // Report determinism across parallelism degrees.
  RunConfig c1;
  c1.claims = {"lemma-2.4", "corollary-2.5"};
  c1.jobs = 1;
  c1.cache_dir = acceptance_cache_dir();
  RunConfig c4 = c1;
  c4.jobs = 4;
  const bool report_ok =
      scrub_timing(run_all(c1).report).dump() == scrub_timing(run_all(c4).report).dump();

  const bool ok = case_ok && par_ok && padic_ok && symp_ok && report_ok;
  std::string detail = "all-odd={";
  for (auto r : r1) detail += std::to_string(r) + ",";
  detail += "} w-odd-case={";
  for (auto r : r2) detail += std::to_string(r) + ",";
  detail += "} joint covers {2,6}";
  criterion(7, "property suites (case split, parallel equality, padic, symplectic, determinism)",
            ok, detail);
}

// 8. verify-all with the default config: 10 certificates, all verified, and
//    the thm-1.4-iv certificate chains lemma-2.3 + corollary-2.5 evidence.
static void criterion_8() {
  RunConfig cfg;
  cfg.jobs = 2;
  cfg.cache_dir = acceptance_cache_dir();
  const auto res = run_all(cfg);

  bool chain_ok = false;
  for (const auto& c : res.certificates) {
    if (c.claim != "thm-1.4-iv") continue;
    const auto& ch = c.evidence["chained_certificates"];
    chain_ok = ch.size() == 2 && ch[0]["claim"] == "lemma-2.3" &&
               ch[1]["claim"] == "corollary-2.5" && ch[0]["verdict"] == "verified" &&
               ch[1]["verdict"] == "verified";
  }

  const bool ok = res.certificates.size() == 10 && res.all_verified && chain_ok;
  std::string verdicts;
  for (const auto& c : res.certificates) verdicts += c.claim + "=" + c.verdict + " ";
  criterion(8, "verify-all: 10 claims verified, thm-1.4-iv chains its dependencies", ok,
            verdicts);
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%s: %d/8 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              8 - failures);
  return failures == 0 ? 0 : 1;
}
