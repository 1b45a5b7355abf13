#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lace/binomial.hpp"
#include "lace/errors.hpp"
#include "lace/poly.hpp"

using namespace lace;

namespace {

Poly P(std::vector<long> c) { return Poly::from_ints(std::move(c)); }

Poly random_poly(std::mt19937_64& rng, int max_deg, int coeff_bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::vector<Rat> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  return Poly(std::move(c));
}

// Independent oracle: solve the defining linear system of the symmetric
// decomposition by Gaussian elimination over the unknowns a_0..a_n,
// b_0..b_{n-1} with the symmetry rows included.
SymDecomp decomposition_by_linear_solve(const Poly& p, int n) {
  int vars = (n + 1) + n;
  std::vector<std::vector<Rat>> m;  // rows: coefficients | rhs
  auto row = [&]() { return std::vector<Rat>(vars + 1, Rat(0)); };
  for (int i = 0; i <= n; ++i) {  // a_i + b_{i-1} = p_i
    auto r = row();
    r[i] = 1;
    if (i >= 1) r[n + 1 + (i - 1)] = 1;
    r[vars] = p.coeff(i);
    m.push_back(std::move(r));
  }
  for (int i = 0; i <= n; ++i) {  // a_i - a_{n-i} = 0
    auto r = row();
    r[i] += 1;
    r[n - i] -= 1;
    m.push_back(std::move(r));
  }
  for (int i = 0; i + 1 <= n; ++i) {  // b_i - b_{n-1-i} = 0
    auto r = row();
    r[n + 1 + i] += 1;
    r[n + 1 + (n - 1 - i)] -= 1;
    m.push_back(std::move(r));
  }
  // elimination
  int rank = 0;
  std::vector<int> pivots;
  for (int c = 0; c < vars; ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat lead = m[rank][c];
    for (auto& v : m[rank]) v /= lead;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int c2 = 0; c2 <= vars; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<Rat> sol(vars, Rat(0));
  for (int r = 0; r < rank; ++r) sol[pivots[r]] = m[r][vars];
  SymDecomp d;
  d.n = n;
  d.a = Poly(std::vector<Rat>(sol.begin(), sol.begin() + n + 1));
  d.b = Poly(std::vector<Rat>(sol.begin() + n + 1, sol.end()));
  return d;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
  CHECK(P({1, 2}) + Poly() == P({1, 2}));
  CHECK(P({1, 1, 1}) * P({1, -1}) == P({1, 0, 0, -1}));
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK(P({3}).degree() == 0);
  CHECK(Rat(1, 2) * P({2, 4}) == P({1, 2}));
}

TEST_CASE("reverse") {
  CHECK(reverse(P({1, 2}), 2) == P({0, 2, 1}));
  CHECK(reverse(P({1, 4, 1}), 2) == P({1, 4, 1}));
  CHECK(reverse(Poly(), 5) == Poly());
  CHECK_THROWS_AS(reverse(P({1, 1, 1}), 1), DegreeExceedsBound);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Poly p = random_poly(rng, 8, 10);
    int n = p.degree() + (t % 3);
    if (n < 0) n = 0;
    CHECK(reverse(reverse(p, n), n) == p);
  }
}

TEST_CASE("symmetric decomposition matches independent solve") {
  SUBCASE("forced decomposition of 1+2x") {
    SymDecomp d = symmetric_decomposition(P({1, 2}), 1);
    CHECK(d.a == P({1, 1}));
    CHECK(d.b == P({1}));
  }
  SUBCASE("already symmetric input") {
    SymDecomp d = symmetric_decomposition(P({1, 4, 1}), 2);
    CHECK(d.a == P({1, 4, 1}));
    CHECK(d.b.is_zero());
  }
  SUBCASE("image of the colored operator") {
    // frozen from the hand-run triangular solve of 1+34x+19x^2 at n = 3
    SymDecomp d = symmetric_decomposition(P({1, 34, 19}), 3);
    CHECK(d.a == P({1, 35, 35, 1}));
    CHECK(d.b == P({-1, -16, -1}));
    CHECK(d.reconstruct() == P({1, 34, 19}));
  }
  SUBCASE("randomized against the linear-system oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
      Poly p = random_poly(rng, 7, 20);
      int n = std::max(p.degree(), 0) + (t % 2);
      SymDecomp fast = symmetric_decomposition(p, n);
      SymDecomp oracle = decomposition_by_linear_solve(p, n);
      CHECK(fast.a == oracle.a);
      CHECK(fast.b == oracle.b);
      CHECK(fast.reconstruct() == p);
      CHECK(fast.a == reverse(fast.a, n));
      if (n >= 1) CHECK(fast.b == reverse(fast.b, n - 1));
    }
  }
  SUBCASE("reversal swaps the parts") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
      Poly p = random_poly(rng, 6, 12);
      int n = p.degree() + 1 + (t % 2);
      SymDecomp d = symmetric_decomposition(p, n - 1);
      SymDecomp swapped = symmetric_decomposition(reverse(p, n), n);
      CHECK(swapped.a == Poly::x() * d.b);
      CHECK(swapped.b == d.a);
    }
  }
}

TEST_CASE("binomial basis conversions") {
  CHECK(binomial_basis_to_std({Rat(1), Rat(0)}, 1) == P({1, 1}));
  CHECK(binomial_basis_to_std({Rat(1), Rat(0), Rat(0)}, 2) == P({1, 2, 1}));
  CHECK(binomial_basis_to_std({Rat(0), Rat(0), Rat(0), Rat(1)}, 3) == P({0, 0, 0, 1}));
  CHECK(std_to_binomial_basis(P({1, 2, 1}), 2) == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(std_to_binomial_basis(P({0, 0, 1}), 2) == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Rat> c;
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (int i = 0; i <= n; ++i) {
      Rat q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    CHECK(std_to_binomial_basis(binomial_basis_to_std(c, n), n) == c);
  }
}

TEST_CASE("f_to_h") {
  CHECK(f_to_h({Int(1), Int(3), Int(2)}, 2) == P({1, 1}));
  CHECK(f_to_h({Int(1), Int(7), Int(12), Int(6)}, 3) == P({1, 4, 1}));
  CHECK(f_to_h({Int(1)}, 0) == Poly::one());
  for (int n = 0; n <= 10; ++n) {
    std::vector<Int> simplex_f(n + 1);
    for (int i = 0; i <= n; ++i) simplex_f[i] = binomial(n, i);
    CHECK(f_to_h(simplex_f, n) == Poly::one());
  }
  // h_to_f inverts it
  std::vector<Int> f = {Int(1), Int(7), Int(12), Int(6)};
  std::vector<Rat> back = h_to_f(f_to_h(f, 3), 3);
  for (int i = 0; i <= 3; ++i) CHECK(back[i] == Rat(f[i]));
}

TEST_CASE("veronese sections") {
  CHECK(veronese(P({1, 2, 3, 4}), 2, 0) == P({1, 3}));
  CHECK(veronese(P({0, 1}), 3, 1) == P({1}));
  CHECK_THROWS_AS(veronese(P({1}), 2, 2), BadSectionIndex);

  // S^r_j(x^i f) = S^r_{j-i}(f) if i <= j else x S^r_{r-i+j}(f)
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    int r = 2 + static_cast<int>(rng() % 5);
    Poly f = random_poly(rng, 10, 8);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        Poly lhs = veronese(Poly::x(i) * f, r, j);
        Poly rhs = i <= j ? veronese(f, r, j - i)
                          : Poly::x() * veronese(f, r, r - i + j);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("gamma expansion") {
  CHECK(gamma_expansion(P({1, 4, 1}), 2) == std::vector<Rat>{Rat(1), Rat(2)});
  Poly pow = Poly::one();
  for (int t = 0; t < 5; ++t) pow = pow * P({1, 1});
  CHECK(gamma_expansion(pow, 5) == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK_THROWS_AS(gamma_expansion(P({1, 2}), 1), NotSymmetric);
  CHECK(is_gamma_positive(P({1, 4, 1}), 2));
  CHECK_FALSE(is_gamma_positive(P({1, 1, 1}), 2));  // gamma = (1, -1)
}

TEST_CASE("coefficient predicates") {
  CHECK(is_unimodal(P({1, 4, 1})));
  CHECK(is_log_concave(P({1, 4, 1})));
  CHECK_FALSE(is_unimodal(P({1, 0, 1})));
  CHECK_FALSE(is_nonnegative(P({1, -1})));
  CHECK(is_unimodal(Poly()));
  CHECK(is_log_concave(P({0, 1, 0})));
}

TEST_CASE("series numerator") {
  // f(m) = (m+1)^2: values 1, 4, 9
  CHECK(series_numerator({Rat(1), Rat(4), Rat(9)}, 2) == P({1, 1}));
  CHECK(series_numerator({Rat(1)}, 0) == Poly::one());
  CHECK(series_numerator({Rat(1), Rat(2)}, 1) == Poly::one());

  // consistency with series_prefix: p/(1-x)^{n+1} re-expands to values
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    int n = static_cast<int>(rng() % 6);
    std::vector<Rat> values;
    std::uniform_int_distribution<long> v(-12, 12);
    // take values of an actual degree-<=n polynomial
    Poly f = random_poly(rng, n, 9);
    for (int m = 0; m <= n; ++m) values.push_back(f.eval(Rat(m)));
    Poly numer = series_numerator(values, n);
    std::vector<Rat> expanded = series_prefix(numer, n + 1, n + 4);
    for (int m = 0; m <= n + 3; ++m) CHECK(expanded[m] == f.eval(Rat(m)));
  }
}

TEST_CASE("printing and parsing") {
  CHECK(P({1, 34, 19}).to_string() == "1 + 34x + 19x^2");
  CHECK(P({0, -1, 0, 2}).to_string() == "-x + 2x^3");
  CHECK(Poly().to_string() == "0");
  CHECK(poly_from_inline("1,0,0,1") == P({1, 0, 0, 1}));
  CHECK(poly_from_inline("1/2, 3").coeff(0) == Rat(1, 2));
  CHECK_THROWS_AS(poly_from_inline("1+3x"), ParseError);
  Poly p = P({1, 34, 19});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(nlohmann::json::parse("[1, \"3/4\"]")) ==
        Poly(std::vector<Rat>{Rat(1), Rat(3, 4)}));
}

TEST_CASE("binomial cache and stirling numbers") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(100, 3) == 161700);  // beyond the default cache bound
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(4, 4) == 1);
  CHECK(stirling2(4, 0) == 0);
}
