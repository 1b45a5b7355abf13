#ifndef LACE_FTRIANGLE_HPP
#define LACE_FTRIANGLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lace/poly.hpp"

namespace lace {

/// Triangular array f(i,j), 0 <= i <= j <= d, of nonnegative integers: the
/// face counts of a uniform triangulation restricted to (j-1)-dimensional
/// faces.  Row j is the f-vector (f_{-1}, ..., f_{j-1}) of the triangulated
/// (j-1)-simplex, so f(0,j) = 1 always and f(j,j) >= 1.
class FTriangle {
 public:
  FTriangle(std::string name, std::vector<std::vector<Int>> rows);

  int size() const { return static_cast<int>(rows_.size()) - 1; }
  const std::string& name() const { return name_; }
  const Int& f(int i, int j) const;
  const std::vector<Int>& row(int j) const;

  static FTriangle trivial(int d);
  static FTriangle barycentric(int d);

  // Text format: header "ftriangle d=<n>", then lines
  // "j: f(0,j) f(1,j) ... f(j,j)".
  static FTriangle parse(std::istream& in, const std::string& name = "file");
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<std::vector<Int>> rows_;
};

// h_F(sigma_n, x) = f_to_h of row n.
Poly h_simplex(const FTriangle& F, int n);

// Interior face count of the triangulated simplex:
// f°(k,n) = sum_m (-1)^{n-m} C(n,m) f(k,m).
Int interior_f(const FTriangle& F, int k, int n);

// E_F on f-polynomials: E_F(x^n) = sum_k f°(k,n) x^k, extended linearly.
Poly apply_EF(const FTriangle& F, const Poly& fpoly);

/// Rows p_{F,m,k} = D_{F,m}(x^k) for m <= n, built by the universal
/// recurrence, plus the extended entries p_{F,m-1,m} = theta_F(sigma_m, x).
class PRowTable {
 public:
  static PRowTable build(const FTriangle& F, int n);

  int levels() const { return static_cast<int>(rows_.size()) - 1; }
  // p_{F,m,k}; k == m+1 resolves to the extended theta entry.
  const Poly& p(int m, int k) const;
  // theta_F(sigma_m, x) = h_F(sigma_m) - h_F(boundary sigma_m), m >= 1.
  const Poly& theta(int m) const;
  // (p_{F,m,0}, ..., p_{F,m,m})
  const std::vector<Poly>& row(int m) const;
  // P_{F,m} = (p_{F,m-1,0}, ..., p_{F,m-1,m-1}, theta(m)), m >= 1.
  std::vector<Poly> extended_row(int m) const;

 private:
  std::vector<std::vector<Poly>> rows_;
  std::vector<Poly> theta_;
};

// D_{F,n}(h) = sum_k c_k p_{F,n,k}.  Requires deg(h) <= n <= size(F).
Poly apply_DF(const FTriangle& F, int n, const Poly& h);
Poly apply_DF(const PRowTable& table, int n, const Poly& h);

// Operational feasibility screen: engine consistency, the p-row symmetries,
// theta symmetry, nonnegativity of all p_{F,n,k}, and interior_f >= 0.
// Failures are reported, not proof of infeasibility.
struct FeasibilityReport {
  std::vector<std::pair<std::string, bool>> items;
  bool all_ok = true;
};
FeasibilityReport feasibility_report(const FTriangle& F, int n);

}  // namespace lace

#endif  // LACE_FTRIANGLE_HPP
