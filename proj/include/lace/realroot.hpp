#ifndef LACE_REALROOT_HPP
#define LACE_REALROOT_HPP

#include <vector>

#include "lace/certificate.hpp"
#include "lace/poly.hpp"

namespace lace {

// Polynomial gcd over Q, monic (or zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

// Quotient/remainder of exact division over Q.
struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Yun square-free decomposition: p = lc * prod factor^multiplicity with the
// factors monic, square-free and pairwise coprime.
struct SquarefreeFactor {
  Poly factor;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

// p / gcd(p, p'), monic: the distinct roots of p, each simple.
Poly squarefree_part(const Poly& p);

// Number of distinct real roots of p in (lo, hi].  Requires p != 0,
// lo < hi and p(lo) != 0 != p(hi) (throws EndpointIsRoot otherwise).
int sturm_root_count(const Poly& p, const Rat& lo, const Rat& hi);

/// Disjoint rational intervals, one per distinct real root, each carrying
/// the root's multiplicity; sorted increasingly.  lo == hi encodes an exact
/// rational root.
struct IsolatingIntervals {
  std::vector<Witness> intervals;
  int multiplicity_total() const;
};

// Requires p != 0 and real-rooted (throws NotRealRooted otherwise).
// Intervals are refined below target_width (default 1/2^20) and past it
// whenever two intervals still touch.
IsolatingIntervals isolate_roots(const Poly& p);
IsolatingIntervals isolate_roots(const Poly& p, const Rat& target_width);

// Verdict real_rooted iff the multiplicity-weighted real-root count equals
// deg(p); the zero polynomial is real-rooted by convention.
Certificate is_real_rooted(const Poly& p);

// Weak root alternation: with roots a_1 >= a_2 >= ... of p and
// b_1 >= b_2 >= ... of q (multiplicities counted), p interlaces q iff
// ... <= a_2 <= b_2 <= a_1 <= b_1.  The zero polynomial interlaces and is
// interlaced by everything.  Throws NotRealRooted if either input has a
// non-real root.
Certificate interlaces(const Poly& p, const Poly& q);

// Pairwise interlaces(seq[i], seq[j]) for i < j; short-circuits on the
// first failing pair, which is named in the report.
Certificate is_interlacing_sequence(const std::vector<Poly>& seq);

// q_k = x * sum_{i<k} p_i + sum_{i>=k} p_i for 0 <= k <= len(seq).
Poly recipe_transform(const std::vector<Poly>& seq, int k);

}  // namespace lace

#endif  // LACE_REALROOT_HPP
