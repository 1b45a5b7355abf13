#ifndef LACE_POLY_HPP
#define LACE_POLY_HPP

#include <string>
#include <vector>

#include "lace/rational.hpp"

#include "json.hpp"

namespace lace {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient i is the coefficient of x^i; trailing zeros are trimmed on
/// construction, so the representation is canonical and operator== is
/// coefficientwise.  The zero polynomial is the empty coefficient sequence;
/// its degree() is the sentinel kZeroDegree (standing in for -infinity),
/// which every degree bound n >= -1 accepts.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  // x^power
  static Poly x(int power = 1);
  static Poly from_ints(std::vector<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero outside the stored range.
  Rat coeff(int i) const;

  Rat eval(const Rat& x0) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rat& c, Poly p);
  friend bool operator==(const Poly& p, const Poly& q) = default;

  // "1 + 34x + 19x^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

Poly scale(const Poly& p, const Rat& c);

// x^n * p(1/x).  Requires deg(p) <= n.
Poly reverse(const Poly& p, int n);

inline bool is_symmetric(const Poly& p, int n) { return p == reverse(p, n); }

/// Unique decomposition p = a + x*b with a = x^n a(1/x) and
/// b = x^{n-1} b(1/x).
struct SymDecomp {
  int n = 0;
  Poly a;
  Poly b;
  Poly reconstruct() const { return a + Poly::x() * b; }
};

// Requires deg(p) <= n (n = -1 is allowed for the zero polynomial).
SymDecomp symmetric_decomposition(const Poly& p, int n);

// f(x) = sum_i c[i] x^i (1+x)^{n-i}; requires len(c) == n+1.
Poly binomial_basis_to_std(const std::vector<Rat>& c, int n);

// Inverse of binomial_basis_to_std; requires deg(f) <= n.
std::vector<Rat> std_to_binomial_basis(const Poly& f, int n);

// h-polynomial transform: sum_i fvec[i] x^i (1-x)^{n-i} with
// fvec[i] = f_{i-1}; requires len(fvec) == n+1.
Poly f_to_h(const std::vector<Int>& fvec, int n);

// Inverse transform: fvec[i] = sum_k h_k C(n-k, i-k), as rationals.
std::vector<Rat> h_to_f(const Poly& h, int n);

// Veronese section: coefficient m of the result is coefficient r*m+k of p.
// Requires r >= 1 and 0 <= k < r.
Poly veronese(const Poly& p, int r, int k);

// Coordinates of p in the basis x^i (1+x)^{n-2i}, i = 0..floor(n/2).
// Throws NotSymmetric unless p = reverse(p, n).
std::vector<Rat> gamma_expansion(const Poly& p, int n);

bool is_gamma_positive(const Poly& p, int n);
bool is_unimodal(const Poly& p);
bool is_log_concave(const Poly& p);
bool is_nonnegative(const Poly& p);

// (1-x)^{n+1} * sum_{m>=0} f(m) x^m truncated to degree n, where values
// holds f(0..n).  d_i = sum_{j<=i} (-1)^j C(n+1,j) values[i-j].
Poly series_numerator(const std::vector<Rat>& values, int n);

// First nterms coefficients of p / (1-x)^n as a power series.
std::vector<Rat> series_prefix(const Poly& p, int n, int nterms);

// JSON form: array of "num/den" strings; bare integers are accepted on
// input.
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// Inline CLI syntax: comma-separated rational coefficients, low to high.
Poly poly_from_inline(const std::string& text);

}  // namespace lace

#endif  // LACE_POLY_HPP
