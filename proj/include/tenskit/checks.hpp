#ifndef TENSKIT_CHECKS_HPP
#define TENSKIT_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tenskit {

// Randomized property suites at desk scale. Each case draws fresh inputs
// from a seeded generator and verifies exact rational equalities; the same
// name, dimension, seed, and case count always replay the same inputs.
//
//   lambdaB   bilateral products agree with map composition across the
//             coefficient-preserving identification, and contractions too
//   funccomp  full positional composition acts as ordinary function
//             composition on every basis tuple
//   assoc     three-factor composition plans associate, for maps and for
//             bilateral products
//   metric    inverse-metric products give the identity array; lowering
//             then raising (and the converse) restores coefficients; dual
//             shifts are involutive and transpose matrix-shaped maps
//   basis     changes of basis compose functorially, commute with
//             composition, contraction, and application, reduce to the
//             vector/form/operator rules, and fix scalars
//   array     transposes reverse products, inverses multiply to the
//             identity, products associate and are bilinear
//   freealg   free products associate, respect the unit, distribute over
//             sums and scalings, and expand uniquely over basis words
//   parser    expression texts round-trip through printing, and their
//             evaluation agrees with direct engine calls
//   lambdaM   multi-argument application agrees with application to the
//             coordinate tensor product of the arguments

struct SuiteResult {
    std::string suite;
    int dim = 0;
    std::uint64_t seed = 0;
    int cases = 0;
    int failures = 0;
};

const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, int dim, std::uint64_t seed, int cases);

} // namespace tenskit

#endif
