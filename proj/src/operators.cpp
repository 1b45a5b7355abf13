#include "lace/operators.hpp"

#include "lace/errors.hpp"

namespace lace {

namespace {

Poly ones_power(int r, int n) {
  // (1 + x + ... + x^{r-1})^n
  Poly ones(std::vector<Rat>(r, Rat(1)));
  Poly out = Poly::one();
  for (int t = 0; t < n; ++t) out = out * ones;
  return out;
}

Poly one_minus_x_power(int n) {
  Poly base = Poly::from_ints({1, -1});
  Poly out = Poly::one();
  for (int t = 0; t < n; ++t) out = out * base;
  return out;
}

std::vector<Rat> padded_coeffs(const Poly& h, int n) {
  std::vector<Rat> c(n + 1, Rat(0));
  for (int i = 0; i <= h.degree(); ++i) c[i] = h.coeff(i);
  return c;
}

}  // namespace

Poly bary_D(int n, const Poly& h) {
  if (h.degree() > n) throw DegreeExceedsBound("bary_D: deg(h) exceeds n");
  Poly f = binomial_basis_to_std(padded_coeffs(h, n), n);
  std::vector<Rat> values(n + 1);
  for (int m = 0; m <= n; ++m) values[m] = f.eval(Rat(m));
  Poly series_route = series_numerator(values, n);
  Poly engine_route = apply_DF(FTriangle::barycentric(n), n, h);
  if (series_route != engine_route)
    throw PathMismatch("bary_D: series route disagrees with p-row engine for h = " +
                       h.to_string());
  return series_route;
}

Poly edgewise_U(int n, int r, const Poly& h) {
  if (r < 1) throw BadSectionIndex("edgewise_U: r must be >= 1");
  if (h.degree() > n) throw DegreeExceedsBound("edgewise_U: deg(h) exceeds n");
  if (r == 1) return h;
  return veronese(ones_power(r, n) * h, r, 0);
}

Poly colored_D(int n, int r, const Poly& h) {
  if (r < 1) throw BadSectionIndex("colored_D: r must be >= 1");
  if (h.degree() > n) throw DegreeExceedsBound("colored_D: deg(h) exceeds n");
  Poly composed = edgewise_U(n, r, bary_D(n, h));
  // Definitional series route: with f in the binomial basis of h, the
  // difference f(rm) - f(rm-1) agrees with a polynomial G of degree <= n-1
  // for all m, so
  //   D_{n,r}(h) = f(-1) (1-x)^n + (1-x)^n sum_{m>=0} G(m) x^m.
  Poly series_route;
  if (n == 0) {
    series_route = h;
  } else {
    Poly f = binomial_basis_to_std(padded_coeffs(h, n), n);
    std::vector<Rat> g(n);
    for (int m = 0; m <= n - 1; ++m)
      g[m] = f.eval(Rat(r * m)) - f.eval(Rat(r * m - 1));
    series_route = f.eval(Rat(-1)) * one_minus_x_power(n) + series_numerator(g, n - 1);
  }
  if (composed != series_route)
    throw PathMismatch("colored_D: composition route disagrees with series route for h = " +
                       h.to_string());
  return composed;
}

ColoredPTable ColoredPTable::build(int n, int r) {
  if (n < 0) throw OutOfRange("colored_p_table: n must be >= 0");
  if (r < 1) throw BadSectionIndex("colored_p_table: r must be >= 1");
  ColoredPTable table;
  table.r_ = r;
  table.entries_.resize(n + 1);

  // Path A: straight from the definition on the barycentric rows.
  PRowTable bary = PRowTable::build(FTriangle::barycentric(n), n);
  for (int m = 0; m <= n; ++m) {
    Poly blob = ones_power(r, m);
    table.entries_[m].assign(r, std::vector<Poly>(m + 1));
    for (int k = 0; k <= m; ++k) {
      Poly full = blob * bary.p(m, k);
      for (int j = 0; j < r; ++j) table.entries_[m][j][k] = veronese(full, r, j);
    }
  }

  // Path B: the recurrence, from the base row (S^r_j(1))_j.
  std::vector<std::vector<std::vector<Poly>>> rec(n + 1);
  rec[0].assign(r, std::vector<Poly>(1));
  rec[0][0][0] = Poly::one();
  for (int m = 1; m <= n; ++m) {
    rec[m].assign(r, std::vector<Poly>(m + 1));
    std::vector<Poly> level_sum(r);  // sum_i p^{<r,l>}_{m-1,i}
    for (int l = 0; l < r; ++l)
      for (int i = 0; i <= m - 1; ++i) level_sum[l] += rec[m - 1][l][i];
    for (int j = 0; j < r; ++j) {
      Poly other_hi, other_lo;
      for (int l = j + 1; l < r; ++l) other_hi += level_sum[l];
      for (int l = 0; l < j; ++l) other_lo += level_sum[l];
      Poly below, above;  // within color j: sums over i < k and i >= k
      above = level_sum[j];
      for (int k = 0; k <= m; ++k) {
        rec[m][j][k] = Poly::x() * (other_hi + below) + above + other_lo;
        if (k <= m - 1) {
          below += rec[m - 1][j][k];
          above -= rec[m - 1][j][k];
        }
      }
    }
  }

  for (int m = 0; m <= n; ++m)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k <= m; ++k)
        if (table.entries_[m][j][k] != rec[m][j][k])
          throw PathMismatch("colored_p_table: definition and recurrence disagree at (m,j,k) = (" +
                             std::to_string(m) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
  return table;
}

const Poly& ColoredPTable::p(int m, int j, int k) const {
  if (m < 0 || m > levels() || j < 0 || j >= r_ || k < 0 || k > m)
    throw OutOfRange("ColoredPTable::p: index out of range");
  return entries_[m][j][k];
}

ColoredPTable colored_p_table(int n, int r) { return ColoredPTable::build(n, r); }

Poly colored_theta(int n, int r) {
  if (n < 1) throw OutOfRange("colored_theta: n must be >= 1");
  if (r < 1) throw BadSectionIndex("colored_theta: r must be >= 1");
  if (r == 1) return Poly();
  ColoredPTable table = ColoredPTable::build(n - 1, r);
  Poly sum;
  for (int j = 1; j < r; ++j)
    for (int k = 0; k <= n - 1; ++k) sum += table.p(n - 1, j, k);
  return Poly::x() * sum;
}

}  // namespace lace
