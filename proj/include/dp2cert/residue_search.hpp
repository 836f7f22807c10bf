#pragma once

// Exhaustive residue enumeration modulo 2^k.  The search space is capped at
// 2^32 evaluations; within that, enumeration is exact, deterministic, and
// partitionable by ranges of the leading variable.

#include "dp2cert/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dp2 {

enum class Primitivity {
  AtLeastOneOdd,  // at least one coordinate odd
  None,           // all tuples
};

struct ResidueSearchSpec {
  WeightedForm<Rational> form;  // integer coefficients required
  unsigned modulus_log2 = 6;    // modulus = 2^k
  Primitivity primitivity = Primitivity::AtLeastOneOdd;
};

struct EnumerationResult {
  std::uint64_t tuples_checked = 0;  // tuples satisfying the predicate
  std::uint64_t solutions = 0;
  std::vector<std::vector<std::uint32_t>> witnesses;  // lexicographic prefix
};

// Exact count of tuples in (Z/2^k)^n with f = 0 satisfying the predicate.
// `jobs` partitions the leading-variable range; results are identical for
// every partitioning.
EnumerationResult enumerate_residue_solutions(const ResidueSearchSpec& spec,
                                              unsigned jobs = 1,
                                              std::size_t witness_cap = 16);

// Per-variable congruence constraint: residue mod `modulus` (1 = no
// constraint; modulus must be a power of two dividing the search modulus).
struct VarConstraint {
  std::uint32_t modulus = 1;
  std::uint32_t residue = 0;
};
using TupleClass = std::vector<VarConstraint>;

// The parity case split on (w,x,y,z) used by the mod-64 argument, plus the
// complementary class (odd coordinate-parity sum, where the form is odd and
// the congruence is impossible mod 2).  The four families partition the
// primitive tuples.
enum class ParityClass {
  AllOdd,
  WOddOneXyzOdd,
  WEvenOneXyzEven,
  OddParitySum,
};

const char* parity_class_name(ParityClass c);
std::vector<TupleClass> parity_class_filters(ParityClass c);

// Multiset of residues attained by the form on the union of the given
// (disjoint) tuple classes.
std::map<std::uint32_t, std::uint64_t> residue_profile(
    const WeightedForm<Rational>& form, unsigned modulus_log2,
    const std::vector<TupleClass>& classes, unsigned jobs = 1);

std::map<std::uint32_t, std::uint64_t> residue_profile(
    const WeightedForm<Rational>& form, unsigned modulus_log2, ParityClass c,
    unsigned jobs = 1);

}  // namespace dp2
