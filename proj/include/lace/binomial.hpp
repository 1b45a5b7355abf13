#ifndef LACE_BINOMIAL_HPP
#define LACE_BINOMIAL_HPP

#include "lace/rational.hpp"

namespace lace {

// C(n, k).  Backed by a Pascal-triangle cache whose size is controlled by
// the LACE_BINOM_CACHE environment variable (default 64); arguments beyond
// the cache fall back to direct computation.
Int binomial(long n, long k);

// Stirling numbers of the second kind S(n, k).
Int stirling2(long n, long k);

}  // namespace lace

#endif  // LACE_BINOMIAL_HPP
