#pragma once

// The weighted 2-descent: for a form w^2 + q(x,y,z) of weighted degree 4
// (weights 2,1,1,1), scaling a solution by 2 stays a solution after w = 2w~,
// so any nonzero Q2 solution can be normalized to a primitive Z2 tuple.
// Combined with the empty mod-2^k residue search this yields a Q2
// insolubility certificate.

#include "dp2cert/poly.hpp"
#include "dp2cert/residue_search.hpp"

#include <string>
#include <vector>

namespace dp2 {

struct DescentCheck {
  bool ok = false;
  std::string trace;  // the symbolic identities, rendered
};

// Verifies symbolically: (a) f(2w,2x,2y,2z) = 4*(c*w^2 + 4*q) with c odd and
// q free of w, forcing 4 | w^2 on scaled solutions; (b) the weighted scaling
// law f(l^2 w, l x, l y, l z) = l^4 f, checked per term and at l = 2.
// Throws for weights other than (2,1,1,1) or an inhomogeneous form.
DescentCheck descent_reduction_check(const WeightedForm<Rational>& form,
                                     const std::vector<int>& weights);

struct InsolubilityCertificate {
  std::string form_text;
  unsigned modulus_log2 = 6;
  std::string predicate;  // "at-least-one-odd"
  std::uint64_t tuples_enumerated = 0;
  std::uint64_t solutions_found = 0;
  std::vector<std::vector<std::uint32_t>> witnesses;
  std::string descent_trace;
  std::string verdict;  // "no nonzero Q2 solution" | "inconclusive"
  double wall_ms = 0.0;
};

// Runs the full argument at modulus 64 with the at-least-one-odd predicate.
// Requires descent_reduction_check to pass.
InsolubilityCertificate q2_insolubility_certificate(const WeightedForm<Rational>& form,
                                                    const std::vector<int>& weights,
                                                    unsigned jobs = 1);

}  // namespace dp2
