#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "lace/errors.hpp"
#include "lace/realroot.hpp"
#include "lace/zonotope.hpp"

using namespace lace;

namespace {

Poly P(std::vector<long> c) { return Poly::from_ints(std::move(c)); }

Zonotope make(std::vector<std::vector<long>> gens, std::vector<long> shift = {}) {
  Zonotope z;
  for (const auto& g : gens) z.generators.emplace_back(g.begin(), g.end());
  size_t N = gens.empty() ? shift.size() : gens[0].size();
  z.translation.assign(N, Int(0));
  for (size_t i = 0; i < shift.size(); ++i) z.translation[i] = shift[i];
  return z;
}

Zonotope unit_cube(int n) {
  std::vector<std::vector<long>> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return make(gens);
}

// Eulerian polynomials A_n via the standard recurrence, used as an
// independent oracle for cube h*-polynomials.
Poly eulerian(int n) {
  std::vector<std::vector<Int>> a(n + 1);
  a[0] = {Int(1)};
  for (int m = 1; m <= n; ++m) {
    a[m].assign(m, Int(0));
    for (int k = 0; k < m; ++k) {
      Int up = k < static_cast<int>(a[m - 1].size()) ? a[m - 1][k] : Int(0);
      Int down = k >= 1 ? a[m - 1][k - 1] : Int(0);
      a[m][k] = Int(k + 1) * up + Int(m - k) * down;
    }
  }
  std::vector<Rat> c;
  for (const Int& v : a[n]) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("ehrhart polynomials") {
  CHECK(ehrhart_polynomial(unit_cube(2)) == P({1, 2, 1}));
  CHECK(ehrhart_polynomial(unit_cube(3)) == P({1, 3, 3, 1}));
  CHECK(ehrhart_polynomial(make({{2, 0}})) == P({1, 2}));
  CHECK(ehrhart_polynomial(make({}, {3, 4})) == Poly::one());
  // a segment with gcd 3 content
  CHECK(ehrhart_polynomial(make({{3, 6}})) == P({1, 3}));
}

TEST_CASE("brute-force counting agrees with the formula") {
  std::mt19937_64 rng(131);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> gens(1, 4);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int t = 0; t < 25; ++t) {
    int N = dim(rng), s = gens(rng);
    std::vector<std::vector<long>> g(s, std::vector<long>(N));
    for (auto& v : g)
      for (auto& x : v) x = entry(rng);
    std::vector<long> shift(N);
    for (auto& x : shift) x = entry(rng);
    Zonotope z = make(g, shift);
    Poly iota = ehrhart_polynomial(z);
    for (long m = 1; m <= 3; ++m) {
      try {
        CHECK(Rat(count_lattice_points(z, m)) == iota.eval(Rat(m)));
      } catch (const CountRefused&) {
        break;
      }
    }
  }
  // translation does not change counts
  Zonotope base = unit_cube(2);
  Zonotope shifted = make({{1, 0}, {0, 1}}, {5, 7});
  for (long m = 1; m <= 3; ++m)
    CHECK(count_lattice_points(base, m) == count_lattice_points(shifted, m));
}

TEST_CASE("h* of cubes are Eulerian polynomials") {
  CHECK(hstar(unit_cube(1)) == eulerian(1));
  CHECK(hstar(unit_cube(2)) == eulerian(2));
  CHECK(hstar(unit_cube(2)) == P({1, 1}));
  CHECK(hstar(unit_cube(3)) == P({1, 4, 1}));
  CHECK(hstar(unit_cube(4)) == eulerian(4));
}

TEST_CASE("hstar_r dual path") {
  Zonotope seg = make({{2, 0}});
  CHECK(hstar(seg) == P({1, 1}));
  CHECK(hstar_r(seg, 2) == P({1, 1}));
  Zonotope square2 = make({{2, 0}, {0, 2}});
  CHECK(hstar(square2) == P({1, 6, 1}));
  for (int r = 1; r <= 4; ++r) {
    Poly h = hstar_r(unit_cube(3), r);  // PathMismatch would throw
    CHECK(is_real_rooted(h).positive());
  }
}

TEST_CASE("interior lattice points") {
  CHECK_FALSE(interior_point_exists(unit_cube(2)));
  CHECK(interior_point_exists(make({{2, 0}, {0, 2}})));
  CHECK(interior_point_exists(make({}, {1, 1})));  // a point
  CHECK(count_interior_lattice_points(make({{2, 0}, {0, 2}}), 1) == 1);
  CHECK(count_interior_lattice_points(unit_cube(2), 1) == 0);
  // rank-deficient: a segment inside the plane has relative interior points
  CHECK(interior_point_exists(make({{2, 0}})));
  CHECK(count_interior_lattice_points(make({{2, 0}}), 1) == 1);
}

TEST_CASE("certification") {
  SUBCASE("cubes: part (a)") {
    for (int n = 1; n <= 4; ++n) {
      for (int r = 1; r <= 3; ++r) {
        Certificate cert = certify_zonotope(unit_cube(n), r);
        CHECK(cert.positive());
        CHECK(cert.condition("hstar_r_real_rooted"));
        CHECK(cert.condition("binomial_coeffs_nonneg_integers"));
      }
    }
  }
  SUBCASE("doubled square: parts (a) and (b)") {
    for (int r = 1; r <= 3; ++r) {
      Certificate cert = certify_zonotope(make({{2, 0}, {0, 2}}), r);
      CHECK(cert.positive());
      CHECK(cert.condition("interior_lattice_point"));
      CHECK(cert.condition("sym_decomp_nonneg_real_rooted"));
      CHECK(cert.condition("colored_operator_route_consistent"));
    }
  }
  SUBCASE("random batch") {
    std::mt19937_64 rng(137);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> gens(1, 4);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int t = 0; t < 20; ++t) {
      int N = dim(rng), s = gens(rng);
      std::vector<std::vector<long>> g(s, std::vector<long>(N));
      for (auto& v : g)
        for (auto& x : v) x = entry(rng);
      Zonotope z = make(g);
      for (int r = 1; r <= 3; ++r) CHECK(certify_zonotope(z, r).positive());
    }
  }
}

TEST_CASE("file format") {
  std::istringstream in("# a shifted square\n1 0\n0 1\ntranslate: 5 7\n");
  Zonotope z = Zonotope::parse(in);
  CHECK(z.generators.size() == 2);
  CHECK(z.translation == std::vector<Int>{Int(5), Int(7)});
  std::istringstream round(z.to_text());
  Zonotope again = Zonotope::parse(round);
  CHECK(again.generators == z.generators);
  CHECK(again.translation == z.translation);
  std::istringstream empty("# none\n");
  CHECK_THROWS_AS(Zonotope::parse(empty), ParseError);
}

TEST_CASE("counting refusal on huge boxes") {
  Zonotope big = make({{400, 0}, {0, 400}, {37, 311}});
  CHECK_THROWS_AS(count_lattice_points(big, 3), CountRefused);
}
