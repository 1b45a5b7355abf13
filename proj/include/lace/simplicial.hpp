#ifndef LACE_SIMPLICIAL_HPP
#define LACE_SIMPLICIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lace/ftriangle.hpp"
#include "lace/poly.hpp"

namespace lace {

/// Finite abstract simplicial complex given by its facets (vertices are
/// integers; faces are implicit by downward closure).  The facet list is an
/// antichain; the empty complex {∅} is represented by the single empty
/// facet.
class SimplicialComplex {
 public:
  using Face = std::vector<int>;

  // Closure of arbitrary faces: sorts, deduplicates, drops dominated.
  static SimplicialComplex from_faces(std::vector<Face> faces);
  // Facets already known to be a valid antichain (construction internals).
  static SimplicialComplex from_facets_unchecked(std::vector<Face> facets);
  // sigma_n: the full simplex on vertices 0..n-1 (n = 0 gives {∅}).
  static SimplicialComplex simplex(int n);
  static SimplicialComplex empty_complex();

  const std::vector<Face>& facets() const { return facets_; }
  int dimension() const;  // -1 for {∅}
  bool is_pure() const;
  int vertex_count() const;

  // (f_{-1}, f_0, ..., f_{dim}); f_{-1} = 1 always.
  std::vector<Int> f_vector() const;
  Poly h_polynomial() const;
  Int euler_characteristic() const;  // unreduced: sum (-1)^i f_i

  SimplicialComplex skeleton(int k) const;

  // One facet per line, space-separated vertices; '#' comments.
  static SimplicialComplex parse(std::istream& in);
  std::string to_text() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Face> facets_;  // each sorted; list sorted lexicographically
};

SimplicialComplex boundary_of_simplex(int n);

// Complex of all chains of nonempty faces.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& cx);

// r-fold edgewise subdivision on the weight-r vertex maps with the {0,1}
// iota-difference face condition; vertex order is by integer label.
SimplicialComplex edgewise_subdivision(const SimplicialComplex& cx, int r);

// sd_r = esd_r after sd.
SimplicialComplex colored_subdivision(const SimplicialComplex& cx, int r);

enum class SubdivKind { Trivial, Sd, Esd, Colored };

// Builds the construction on sigma_j for each j <= d and records
// f_F(i,j) = f_{i-1}; verifies uniformity against restrictions of the
// construction on sigma_d.  Cost-guarded: throws OutOfRange when the
// enumeration would be too large.
FTriangle extract_ftriangle(SubdivKind kind, int r, int d);

// m facets of size facet_size drawn uniformly from a v-vertex pool,
// deduplicated; deterministic in seed.
SimplicialComplex random_complex(int v, int facet_size, int m, std::uint64_t seed);

}  // namespace lace

#endif  // LACE_SIMPLICIAL_HPP
