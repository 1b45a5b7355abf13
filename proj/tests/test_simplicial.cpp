#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "lace/binomial.hpp"
#include "lace/errors.hpp"
#include "lace/operators.hpp"
#include "lace/simplicial.hpp"

using namespace lace;

namespace {

Poly P(std::vector<long> c) { return Poly::from_ints(std::move(c)); }

std::vector<Int> ints(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

// Relabels vertices through a random permutation; face numbers must not
// change.
SimplicialComplex relabel(const SimplicialComplex& cx, std::mt19937_64& rng) {
  std::vector<int> all;
  for (const auto& f : cx.facets()) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<int> image = all;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<SimplicialComplex::Face> faces;
  for (const auto& f : cx.facets()) {
    SimplicialComplex::Face g;
    for (int v : f) {
      size_t idx = std::lower_bound(all.begin(), all.end(), v) - all.begin();
      g.push_back(image[idx]);
    }
    faces.push_back(std::move(g));
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace

TEST_CASE("f-vectors and h-polynomials") {
  CHECK(SimplicialComplex::simplex(3).f_vector() == ints({1, 3, 3, 1}));
  CHECK(boundary_of_simplex(3).f_vector() == ints({1, 3, 3}));
  CHECK(boundary_of_simplex(3).h_polynomial() == P({1, 1, 1}));
  CHECK(SimplicialComplex::simplex(4).h_polynomial() == Poly::one());
  CHECK(SimplicialComplex::empty_complex().f_vector() == ints({1}));
  CHECK(SimplicialComplex::empty_complex().h_polynomial() == Poly::one());
  CHECK(SimplicialComplex::empty_complex().dimension() == -1);
}

TEST_CASE("skeleton") {
  SimplicialComplex s4 = SimplicialComplex::simplex(4);
  SimplicialComplex skel = s4.skeleton(2);
  CHECK(skel.dimension() == 2);
  CHECK(skel.f_vector() == ints({1, 4, 6, 4}));
  CHECK(s4.skeleton(3) == s4);
  CHECK(s4.skeleton(-1) == SimplicialComplex::empty_complex());

  // h-vector of the (n-1)-skeleton is the partial-sum transform
  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    SimplicialComplex gamma = random_complex(7, 2 + t % 4, 3 + t % 5, 1000 + t);
    int n = gamma.dimension();
    if (n < 1) continue;
    Poly hg = gamma.h_polynomial();
    Poly hd = gamma.skeleton(n - 1).h_polynomial();
    Rat acc(0);
    for (int k = 0; k <= n; ++k) {
      acc += hg.coeff(k);
      CHECK(hd.coeff(k) == acc);
    }
  }
}

TEST_CASE("barycentric subdivision") {
  SimplicialComplex edge = SimplicialComplex::simplex(2);
  SimplicialComplex sd_edge = barycentric_subdivision(edge);
  CHECK(sd_edge.f_vector() == ints({1, 3, 2}));

  SimplicialComplex tri = SimplicialComplex::simplex(3);
  SimplicialComplex sd_tri = barycentric_subdivision(tri);
  CHECK(sd_tri.f_vector() == ints({1, 7, 12, 6}));
  CHECK(sd_tri.h_polynomial() == P({1, 4, 1}));
  CHECK(barycentric_subdivision(SimplicialComplex::empty_complex()) ==
        SimplicialComplex::empty_complex());
}

TEST_CASE("edgewise subdivision") {
  SimplicialComplex edge = SimplicialComplex::simplex(2);
  CHECK(edgewise_subdivision(edge, 2).f_vector() == ints({1, 3, 2}));
  CHECK(edgewise_subdivision(edge, 2).h_polynomial() == P({1, 1}));

  // r = 1 reproduces the complex up to relabeling
  std::mt19937_64 rng(103);
  for (int t = 0; t < 10; ++t) {
    SimplicialComplex cx = random_complex(6, 3, 4, 2000 + t);
    SimplicialComplex esd1 = edgewise_subdivision(cx, 1);
    CHECK(esd1.f_vector() == cx.f_vector());
    CHECK(esd1.facets().size() == cx.facets().size());
  }

  // face numbers do not depend on the vertex ordering
  for (int t = 0; t < 12; ++t) {
    SimplicialComplex cx = random_complex(6, 2 + t % 3, 4, 3000 + t);
    for (int r = 2; r <= 3; ++r) {
      CHECK(edgewise_subdivision(cx, r).f_vector() ==
            edgewise_subdivision(relabel(cx, rng), r).f_vector());
    }
  }

  // esd_2 of the boundary of a triangle: a 6-cycle
  SimplicialComplex cycle = boundary_of_simplex(3);
  CHECK(edgewise_subdivision(cycle, 2).f_vector() == ints({1, 6, 6}));
}

TEST_CASE("colored subdivision") {
  SimplicialComplex tri = SimplicialComplex::simplex(3);
  CHECK(colored_subdivision(tri, 1).f_vector() ==
        barycentric_subdivision(tri).f_vector());
  CHECK(colored_subdivision(tri, 3).h_polynomial() == P({1, 34, 19}));
}

TEST_CASE("subdivision preserves the Euler characteristic") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 15; ++t) {
    SimplicialComplex cx = random_complex(7, 2 + t % 3, 3 + t % 4, 4000 + t);
    Int chi = cx.euler_characteristic();
    CHECK(barycentric_subdivision(cx).euler_characteristic() == chi);
    CHECK(edgewise_subdivision(cx, 2).euler_characteristic() == chi);
    CHECK(colored_subdivision(cx, 2).euler_characteristic() == chi);
  }
}

TEST_CASE("h at one counts facets of pure complexes") {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 15; ++t) {
    SimplicialComplex cx = random_complex(7, 3, 4, 5000 + t);
    SimplicialComplex sd = barycentric_subdivision(cx);
    CHECK(sd.h_polynomial().eval(Rat(1)) == Rat(Int(sd.facets().size())));
  }
}

TEST_CASE("operator-versus-construction oracles") {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 12; ++t) {
    int dim = t % 3;
    SimplicialComplex cx = random_complex(6, dim + 1, 3 + t % 4, 6000 + t);
    int n = cx.dimension() + 1;
    Poly h = cx.h_polynomial();
    CHECK(barycentric_subdivision(cx).h_polynomial() == bary_D(n, h));
    for (int r = 1; r <= 3; ++r) {
      CHECK(edgewise_subdivision(cx, r).h_polynomial() == edgewise_U(n, r, h));
      CHECK(colored_subdivision(cx, r).h_polynomial() == colored_D(n, r, h));
    }
  }
  // a non-pure example
  SimplicialComplex mixed = SimplicialComplex::from_faces({{0, 1, 2}, {2, 3}, {4}});
  int n = mixed.dimension() + 1;
  CHECK(barycentric_subdivision(mixed).h_polynomial() == bary_D(n, mixed.h_polynomial()));
  CHECK(edgewise_subdivision(mixed, 3).h_polynomial() ==
        edgewise_U(n, 3, mixed.h_polynomial()));
}

TEST_CASE("f-triangle extraction") {
  SUBCASE("trivial construction") {
    FTriangle F = extract_ftriangle(SubdivKind::Trivial, 1, 4);
    for (int j = 0; j <= 4; ++j)
      for (int i = 0; i <= j; ++i) CHECK(F.f(i, j) == binomial(j, i));
  }
  SUBCASE("sd rows match the chain-count formula") {
    FTriangle F = extract_ftriangle(SubdivKind::Sd, 1, 4);
    FTriangle formula = FTriangle::barycentric(4);
    for (int j = 0; j <= 4; ++j)
      for (int i = 0; i <= j; ++i) CHECK(F.f(i, j) == formula.f(i, j));
    CHECK(F.row(3) == ints({1, 7, 12, 6}));
  }
  SUBCASE("edgewise rows") {
    for (int r = 2; r <= 4; ++r) {
      FTriangle F = extract_ftriangle(SubdivKind::Esd, r, 3);
      CHECK(F.row(2) == ints({1, r + 1, r}));
      CHECK(F.f(1, 1) == 1);
    }
  }
  SUBCASE("extracted engine rows match the operators") {
    for (int r = 2; r <= 3; ++r) {
      FTriangle F = extract_ftriangle(SubdivKind::Esd, r, 4);
      PRowTable t = PRowTable::build(F, 4);
      for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
          CHECK(t.p(n, k) == edgewise_U(n, r, Poly::x(k)));
    }
    for (int r = 2; r <= 3; ++r) {
      FTriangle F = extract_ftriangle(SubdivKind::Colored, r, 4);
      PRowTable t = PRowTable::build(F, 4);
      ColoredPTable colored = colored_p_table(4, r);
      for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) CHECK(t.p(n, k) == colored.p(n, 0, k));
      for (int n = 1; n <= 4; ++n) CHECK(t.theta(n) == colored_theta(n, r));
    }
  }
  SUBCASE("interior counts of the extracted sd triangle") {
    FTriangle F = extract_ftriangle(SubdivKind::Sd, 1, 4);
    CHECK(interior_f(F, 2, 3) == 6);
    CHECK(interior_f(F, 1, 3) == 1);
  }
  SUBCASE("cost guard") {
    CHECK_THROWS_AS(extract_ftriangle(SubdivKind::Colored, 4, 7), OutOfRange);
  }
}

TEST_CASE("E_F matches literal subdivision f-polynomials") {
  FTriangle bary = FTriangle::barycentric(5);
  std::mt19937_64 rng(127);
  for (int t = 0; t < 8; ++t) {
    SimplicialComplex cx = random_complex(6, 2 + t % 3, 3, 7000 + t);
    std::vector<Int> f = cx.f_vector();
    std::vector<Rat> fc(f.size());
    for (size_t i = 0; i < f.size(); ++i) fc[i] = Rat(f[i]);
    Poly fpoly(fc);
    std::vector<Int> fsd = barycentric_subdivision(cx).f_vector();
    Poly expect_f = apply_EF(bary, fpoly);
    for (size_t i = 0; i < fsd.size(); ++i) CHECK(expect_f.coeff(i) == Rat(fsd[i]));
  }
}

TEST_CASE("random complex generator") {
  SimplicialComplex a = random_complex(8, 3, 5, 42);
  SimplicialComplex b = random_complex(8, 3, 5, 42);
  CHECK(a == b);
  CHECK(a.dimension() == 2);
  for (const auto& f : a.facets()) CHECK(f.size() == 3);
  CHECK_THROWS_AS(random_complex(2, 3, 1, 0), OutOfRange);
}

TEST_CASE("file format") {
  std::istringstream in("# triangle with a tail\n0 1 2\n2 3\n");
  SimplicialComplex cx = SimplicialComplex::parse(in);
  CHECK(cx.dimension() == 2);
  CHECK(cx.facets().size() == 2);
  std::istringstream round(cx.to_text());
  CHECK(SimplicialComplex::parse(round) == cx);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(SimplicialComplex::parse(empty), ParseError);
  std::istringstream bad("0 x 2\n");
  CHECK_THROWS_AS(SimplicialComplex::parse(bad), ParseError);
}
