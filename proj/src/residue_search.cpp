#include "dp2cert/residue_search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

namespace dp2 {

namespace {

constexpr std::size_t kMaxVars = 6;
constexpr std::uint64_t kEvalGuard = std::uint64_t(1) << 32;

struct CompiledForm {
  std::uint32_t modulus = 0;
  std::uint32_t mask = 0;
  std::size_t nvars = 0;
  std::size_t nterms = 0;
  // pow[t][v][r] = r^exp(t,v) mod 2^k, with the term coefficient folded into
  // the v = 0 table.
  std::vector<std::array<std::vector<std::uint32_t>, kMaxVars>> pow;
};

CompiledForm compile_form(const WeightedForm<Rational>& form, unsigned k) {
  if (k == 0 || k >= 32)
    throw std::invalid_argument("residue search: modulus must be 2^k with 1 <= k < 32");
  const std::size_t n = form.num_vars();
  if (n == 0 || n > kMaxVars)
    throw std::invalid_argument("residue search: variable count must be in [1, 6]");
  if (!form.has_integer_coefficients())
    throw std::invalid_argument("residue search: form must have integer coefficients");

  double space = 1.0;
  for (std::size_t i = 0; i < n; ++i) space *= double(std::uint64_t(1) << k);
  if (space > double(kEvalGuard))
    throw std::invalid_argument("residue search: search space exceeds 2^32 guard");

  CompiledForm cf;
  cf.modulus = std::uint32_t(1) << k;
  cf.mask = cf.modulus - 1;
  cf.nvars = n;
  for (const auto& [mono, coeff] : form.terms()) {
    cf.pow.emplace_back();
    auto& tbl = cf.pow.back();
    const auto c = static_cast<std::uint32_t>(mod_pow2(num(coeff), k).convert_to<std::uint64_t>());
    for (std::size_t v = 0; v < n; ++v) {
      tbl[v].resize(cf.modulus);
      for (std::uint32_t r = 0; r < cf.modulus; ++r) {
        std::uint64_t p = (v == 0) ? c : 1;
        for (unsigned e = 0; e < mono[v]; ++e) p = (p * r) & cf.mask;
        tbl[v][r] = static_cast<std::uint32_t>(p);
      }
    }
  }
  cf.nterms = cf.pow.size();
  return cf;
}

struct ScanSink {
  bool need_odd = false;
  std::uint64_t checked = 0;
  std::uint64_t solutions = 0;
  std::size_t witness_cap = 0;
  std::vector<std::vector<std::uint32_t>> witnesses;
  std::vector<std::uint64_t>* profile = nullptr;  // indexed by residue, when profiling
  std::vector<std::uint64_t> profile_data;        // merged result storage
};

// Depth-first scan.  partial holds one row of per-term products per depth;
// row d is the product of tables for variables 0..d at the current prefix.
void scan(const CompiledForm& cf, const std::vector<std::vector<std::uint32_t>>& allowed,
          std::size_t depth, bool any_odd, std::vector<std::uint32_t>& tuple,
          std::vector<std::uint32_t>& partial, ScanSink& sink) {
  const std::size_t nt = cf.nterms;
  const bool last = depth + 1 == cf.nvars;
  for (std::uint32_t r : allowed[depth]) {
    tuple[depth] = r;
    for (std::size_t t = 0; t < nt; ++t) {
      const std::uint32_t up = depth == 0 ? 1 : partial[(depth - 1) * nt + t];
      partial[depth * nt + t] = (up * cf.pow[t][depth][r]) & cf.mask;
    }
    const bool odd_now = any_odd || (r & 1);
    if (!last) {
      scan(cf, allowed, depth + 1, odd_now, tuple, partial, sink);
      continue;
    }
    if (sink.need_odd && !odd_now) continue;
    ++sink.checked;
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < nt; ++t) acc += partial[depth * nt + t];
    acc &= cf.mask;
    if (sink.profile) {
      ++(*sink.profile)[acc];
    } else if (acc == 0) {
      ++sink.solutions;
      if (sink.witnesses.size() < sink.witness_cap) sink.witnesses.push_back(tuple);
    }
  }
}

std::vector<std::uint32_t> residues_matching(const VarConstraint& c, std::uint32_t modulus) {
  if (c.modulus == 0 || (c.modulus & (c.modulus - 1)) != 0 || c.modulus > modulus)
    throw std::invalid_argument("residue search: constraint modulus must be a 2-power <= modulus");
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = c.residue % c.modulus; r < modulus; r += c.modulus) out.push_back(r);
  return out;
}

// Runs one class (or the unconstrained class) over the leading-variable
// slices assigned to each job, merging per-job sinks in slice order.
ScanSink run_partitioned(const CompiledForm& cf,
                         const std::vector<std::vector<std::uint32_t>>& allowed,
                         bool need_odd, std::size_t witness_cap, bool profiling,
                         unsigned jobs) {
  jobs = std::max(1u, jobs);
  const auto& head = allowed[0];
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(head.size(), 1)));

  std::vector<ScanSink> sinks(jobs);
  std::vector<std::vector<std::uint64_t>> profiles(jobs);
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) {
    sinks[j].need_odd = need_odd;
    sinks[j].witness_cap = witness_cap;
    if (profiling) {
      profiles[j].assign(cf.modulus, 0);
      sinks[j].profile = &profiles[j];
    }
  }

  auto run_slice = [&](unsigned j) {
    const std::size_t lo = head.size() * j / jobs;
    const std::size_t hi = head.size() * (j + 1) / jobs;
    if (lo >= hi) return;
    auto sliced = allowed;
    sliced[0].assign(head.begin() + lo, head.begin() + hi);
    std::vector<std::uint32_t> tuple(cf.nvars, 0);
    std::vector<std::uint32_t> partial(cf.nvars * cf.nterms, 0);
    scan(cf, sliced, 0, false, tuple, partial, sinks[j]);
  };

  if (jobs == 1) {
    run_slice(0);
  } else {
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(run_slice, j);
    for (auto& t : threads) t.join();
  }

  ScanSink merged;
  merged.need_odd = need_odd;
  merged.witness_cap = witness_cap;
  if (profiling) merged.profile_data.assign(cf.modulus, 0);
  for (unsigned j = 0; j < jobs; ++j) {
    merged.checked += sinks[j].checked;
    merged.solutions += sinks[j].solutions;
    for (auto& w : sinks[j].witnesses)
      if (merged.witnesses.size() < witness_cap) merged.witnesses.push_back(std::move(w));
    if (profiling)
      for (std::uint32_t r = 0; r < cf.modulus; ++r) merged.profile_data[r] += profiles[j][r];
  }
  return merged;
}

}  // namespace

const char* parity_class_name(ParityClass c) {
  switch (c) {
    case ParityClass::AllOdd: return "all-odd";
    case ParityClass::WOddOneXyzOdd: return "w-odd-one-xyz-odd";
    case ParityClass::WEvenOneXyzEven: return "w-even-one-xyz-even";
    case ParityClass::OddParitySum: return "odd-parity-sum";
  }
  return "?";
}

std::vector<TupleClass> parity_class_filters(ParityClass c) {
  const VarConstraint odd{2, 1}, even{2, 0};
  std::vector<TupleClass> out;
  switch (c) {
    case ParityClass::AllOdd:
      out.push_back({odd, odd, odd, odd});
      break;
    case ParityClass::WOddOneXyzOdd:
      for (int i = 0; i < 3; ++i) {
        TupleClass t{odd, even, even, even};
        t[1 + i] = odd;
        out.push_back(t);
      }
      break;
    case ParityClass::WEvenOneXyzEven:
      for (int i = 0; i < 3; ++i) {
        TupleClass t{even, odd, odd, odd};
        t[1 + i] = even;
        out.push_back(t);
      }
      break;
    case ParityClass::OddParitySum:
      // Parity patterns with an odd number of odd coordinates: the form has
      // odd value there, so f = 0 mod 2 is already impossible.
      for (unsigned bits = 0; bits < 16; ++bits) {
        if (__builtin_popcount(bits) % 2 == 0) continue;
        TupleClass t;
        for (int i = 0; i < 4; ++i) t.push_back((bits >> i) & 1 ? odd : even);
        out.push_back(t);
      }
      break;
  }
  return out;
}

EnumerationResult enumerate_residue_solutions(const ResidueSearchSpec& spec, unsigned jobs,
                                              std::size_t witness_cap) {
  CompiledForm cf = compile_form(spec.form, spec.modulus_log2);
  std::vector<std::vector<std::uint32_t>> allowed(cf.nvars);
  for (auto& a : allowed) {
    a.resize(cf.modulus);
    for (std::uint32_t r = 0; r < cf.modulus; ++r) a[r] = r;
  }
  ScanSink s = run_partitioned(cf, allowed, spec.primitivity == Primitivity::AtLeastOneOdd,
                               witness_cap, false, jobs);
  EnumerationResult r;
  r.tuples_checked = s.checked;
  r.solutions = s.solutions;
  r.witnesses = std::move(s.witnesses);
  return r;
}

std::map<std::uint32_t, std::uint64_t> residue_profile(const WeightedForm<Rational>& form,
                                                       unsigned modulus_log2,
                                                       const std::vector<TupleClass>& classes,
                                                       unsigned jobs) {
  CompiledForm cf = compile_form(form, modulus_log2);
  std::map<std::uint32_t, std::uint64_t> out;
  for (const auto& cls : classes) {
    if (cls.size() != cf.nvars)
      throw std::invalid_argument("residue_profile: class arity mismatch");
    std::vector<std::vector<std::uint32_t>> allowed;
    allowed.reserve(cf.nvars);
    for (const auto& vc : cls) allowed.push_back(residues_matching(vc, cf.modulus));
    ScanSink s = run_partitioned(cf, allowed, false, 0, true, jobs);
    for (std::uint32_t r = 0; r < cf.modulus; ++r)
      if (s.profile_data[r]) out[r] += s.profile_data[r];
  }
  return out;
}

std::map<std::uint32_t, std::uint64_t> residue_profile(const WeightedForm<Rational>& form,
                                                       unsigned modulus_log2, ParityClass c,
                                                       unsigned jobs) {
  return residue_profile(form, modulus_log2, parity_class_filters(c), jobs);
}

}  // namespace dp2
