#ifndef LACE_ZONOTOPE_HPP
#define LACE_ZONOTOPE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lace/certificate.hpp"
#include "lace/poly.hpp"

namespace lace {

/// Minkowski sum of the segments [0, v_i] translated by an integer vector.
struct Zonotope {
  std::vector<std::vector<Int>> generators;  // each of length N
  std::vector<Int> translation;              // length N; defaults to 0

  int ambient_dim() const;
  int rank() const;  // dimension n of the zonotope

  // One generator per line, space-separated integers; optional
  // "translate: ..." line; '#' comments.
  static Zonotope parse(std::istream& in);
  std::string to_text() const;
};

// Ehrhart polynomial via the independent-subset formula
//   iota(Z;x) = sum_{S independent} g(S) x^{|S|},
// g(S) = gcd of the maximal minors of S.
Poly ehrhart_polynomial(const Zonotope& z);

// Brute-force lattice point counts of the m-th dilate through the slab
// H-representation; throws CountRefused when the bounding box exceeds 10^6
// points.
Int count_lattice_points(const Zonotope& z, long m);
Int count_interior_lattice_points(const Zonotope& z, long m);

// h* = (1-x)^{n+1} sum_m iota(m) x^m truncated to degree n.
Poly hstar(const Zonotope& z);

// h*_r from the Veronese-style series
//   1 + sum_{m>=1} (iota(rm) - iota(rm-1)) x^m = h*_r / (1-x)^n,
// cross-asserted against U^n_r(h*).
Poly hstar_r(const Zonotope& z, int r);

// Ehrhart-Macdonald reciprocity on the affine span: relative interior is
// nonempty iff (-1)^n iota(-1) >= 1.  A point is its own relative interior.
bool interior_point_exists(const Zonotope& z);

// (a) h*_r real-rooted; (b) when an interior lattice point exists, a
// nonnegative real-rooted symmetric decomposition with respect to n.  Also
// verifies the binomial-basis structure of iota and the operator route.
Certificate certify_zonotope(const Zonotope& z, int r);

}  // namespace lace

#endif  // LACE_ZONOTOPE_HPP
