#ifndef LACE_OPERATORS_HPP
#define LACE_OPERATORS_HPP

#include "lace/ftriangle.hpp"
#include "lace/poly.hpp"

namespace lace {

// Barycentric subdivision operator D_n: with h = sum c_i x^i and
// f(x) = sum c_i x^i (1+x)^{n-i},
//   sum_{m>=0} f(m) x^m = D_n(h) / (1-x)^{n+1}.
// Computed by the series route and cross-asserted against the p-row engine
// on the barycentric f-triangle; mismatch throws PathMismatch.
Poly bary_D(int n, const Poly& h);

// r-fold edgewise subdivision operator:
// U^n_r(h) = S^r_0((1 + x + ... + x^{r-1})^n h).  Requires deg(h) <= n.
Poly edgewise_U(int n, int r, const Poly& h);

// r-colored barycentric subdivision operator D_{n,r} = U^n_r o D_n, also
// satisfying
//   f(0) + sum_{m>=1} (f(rm) - f(rm-1)) x^m = D_{n,r}(h) / (1-x)^n.
// Both routes are computed and cross-asserted.
Poly colored_D(int n, int r, const Poly& h);

/// The polynomials p^{<r,j>}_{m,k} = S^r_j((1+x+...+x^{r-1})^m p_{m,k}) for
/// m <= n, k <= m, 0 <= j < r, with p_{m,k} the barycentric rows.  Built by
/// two independent paths (definition and recurrence) which must agree
/// entrywise; PathMismatch indicates an implementation bug.
class ColoredPTable {
 public:
  static ColoredPTable build(int n, int r);

  int r() const { return r_; }
  int levels() const { return static_cast<int>(entries_.size()) - 1; }
  const Poly& p(int m, int j, int k) const;

 private:
  int r_ = 1;
  // entries_[m][j][k]
  std::vector<std::vector<std::vector<Poly>>> entries_;
};

ColoredPTable colored_p_table(int n, int r);

// theta_{F_r}(sigma_n, x) = x sum_{j=1}^{r-1} sum_{k=0}^{n-1} p^{<r,j>}_{n-1,k}.
Poly colored_theta(int n, int r);

}  // namespace lace

#endif  // LACE_OPERATORS_HPP
