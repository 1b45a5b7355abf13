#ifndef LACE_THEOREMS_HPP
#define LACE_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lace/certificate.hpp"
#include "lace/ftriangle.hpp"
#include "lace/realroot.hpp"

namespace lace {

// Symmetric decomposition of D_{F,n}(h) with respect to n from the closed
// forms: with P_i = c_0 + ... + c_i and T_i = c_n + ... + c_{n-i},
//   a = P_n p_{F,n-1,n} + sum_{i<n} (P_i + P_{n-i-1} x) p_{F,n-1,i},
//   b = sum_{i<n} (T_i - P_i) p_{F,n-1,i}.
// Hard-asserted against the generic triangular solve of the operator image.
SymDecomp symdecomp_closed_form(const FTriangle& F, int n, const Poly& h);
SymDecomp symdecomp_closed_form(const PRowTable& table, int n, const Poly& h);

// Reusable bundle for repeated certifications against one (F, n).
struct OperatorContext {
  const FTriangle* F = nullptr;
  int n = 0;
  PRowTable table;
  std::optional<Certificate> strong;  // cached strong_interlacing_check

  static OperatorContext make(const FTriangle& F, int n);
};

// Strong interlacing property with respect to n:
//  (i)  h_F(sigma_m, x) real-rooted for 2 <= m < n (m = n too when
//       include_top is set);
//  (ii) theta_F(sigma_m, x) zero, or of degree m-1 with nonnegative
//       coefficients, real-rooted and interlaced by h_F(sigma_{m-1}, x),
//       for 2 <= m <= n.
// The report also carries the derived property that every row Q_{F,m},
// m <= n, is an interlacing sequence.
Certificate strong_interlacing_check(const FTriangle& F, int n,
                                     bool include_top = false);
Certificate strong_interlacing_check(const OperatorContext& ctx,
                                     bool include_top = false);

enum class MainVariant { A, B };

// Hypothesis checks and certification for the symmetric decomposition of
// D_{F,n}(h).  Variant A: c >= 0 and partial sums
// c_0+...+c_i <= c_n+...+c_{n-i}; decomposition taken w.r.t. n; ratio
// condition c_i c_{n-i-1} <= c_{i+1} c_{n-i} upgrades the claim to
// interlacing.  Variant B: c_n = 0 and reversed partial sums; w.r.t. n-1;
// reversed ratio condition.  Hypothesis failures are flagged and the
// computation still runs; conclusion failures under valid hypotheses yield
// verdict "counterexample".
Certificate certify_main_theorem(const FTriangle& F, int n, const Poly& h,
                                 MainVariant variant);
Certificate certify_main_theorem(const OperatorContext& ctx, const Poly& h,
                                 MainVariant variant);

enum class HvecCondition { CMstar, Tzanaki, Tzanakii, C1, C2 };

struct InequalityReport {
  std::vector<std::pair<std::string, bool>> items;
  bool all_hold = true;
};

// Per-index report of the named inequality system on an h-vector.
// CMstar/C1: partial sums h_0+...+h_i <= h_n+...+h_{n-i}.  C2: the reversed
// system.  Tzanaki: cross-ratio chain h_i h_{n-i-1} <= h_{i+1} h_{n-i}.
// Tzanakii: the reversed chain on indices 1..n-1, ignoring ratios with a
// zero entry.
InequalityReport hvec_inequalities(const std::vector<Rat>& hvec,
                                   HvecCondition which);

// Skeleton certification: with h_k(Delta) = h_0(Gamma) + ... + h_k(Gamma),
// certifies (a) the interlacing symmetric decomposition of h_F(Delta, x)
// w.r.t. n and (b) that h_F(Delta, x) interlaces h_F(Gamma, x).
// gamma_hvec must have length n+2; requires size(F) >= n+1.
Certificate skeleton_theorem_check(const FTriangle& F,
                                   const std::vector<Rat>& gamma_hvec, int n);

}  // namespace lace

#endif  // LACE_THEOREMS_HPP
