#include "lace/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include "lace/errors.hpp"

namespace lace {

namespace {

// Faces packed as eight 16-bit vertex slots (sorted ids, 0xFFFF padding);
// enough for every complex this library enumerates.
struct PackedFace {
  std::uint64_t lo = ~0ull, hi = ~0ull;
  friend bool operator==(const PackedFace&, const PackedFace&) = default;
};

struct PackedFaceHash {
  size_t operator()(const PackedFace& f) const {
    std::uint64_t x = f.lo * 0x9e3779b97f4a7c15ull ^ (f.hi + 0x517cc1b727220a95ull);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};

PackedFace pack_face(const int* ids, int count) {
  if (count > 8) throw OutOfRange("face enumeration limited to 8 vertices per face");
  PackedFace out;
  for (int t = 0; t < count; ++t) {
    if (ids[t] < 0 || ids[t] >= 0xFFFF)
      throw OutOfRange("face enumeration needs vertex ids below 65535");
    std::uint64_t v = static_cast<std::uint64_t>(ids[t]);
    if (t < 4)
      out.lo = (out.lo & ~(0xFFFFull << (16 * t))) | (v << (16 * t));
    else
      out.hi = (out.hi & ~(0xFFFFull << (16 * (t - 4)))) | (v << (16 * (t - 4)));
  }
  return out;
}

// Dense relabeling of arbitrary integer vertices for packing.
std::map<int, int> dense_ids(const std::vector<SimplicialComplex::Face>& facets) {
  std::map<int, int> ids;
  for (const auto& f : facets)
    for (int v : f) ids.emplace(v, 0);
  int next = 0;
  for (auto& [v, id] : ids) id = next++;
  return ids;
}

// Counts distinct faces per cardinality across all subsets of the facets.
std::vector<Int> count_faces(const std::vector<SimplicialComplex::Face>& facets) {
  std::map<int, int> ids = dense_ids(facets);
  size_t max_size = 0;
  for (const auto& f : facets) max_size = std::max(max_size, f.size());
  std::vector<Int> counts(max_size + 1, Int(0));
  std::unordered_set<PackedFace, PackedFaceHash> seen;
  size_t budget = 0;
  for (const auto& f : facets) budget += 1ull << f.size();
  seen.reserve(budget * 2);
  int scratch[8];
  for (const auto& f : facets) {
    int s = static_cast<int>(f.size());
    std::vector<int> mapped(s);
    for (int t = 0; t < s; ++t) mapped[t] = ids.at(f[t]);
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      int count = 0;
      for (int t = 0; t < s; ++t)
        if (mask & (1u << t)) scratch[count++] = mapped[t];
      if (seen.insert(pack_face(scratch, count)).second) counts[count] += 1;
    }
  }
  return counts;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (const auto& f : faces) {
    bool dominated = false;
    for (const auto& g : kept) {
      if (g.size() < f.size()) break;
      if (g.size() == f.size() && g == f) {
        dominated = true;
        break;
      }
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(f);
      // keep larger-first ordering stable for the scan above
      for (size_t i = kept.size(); i-- > 1 && kept[i - 1].size() < kept[i].size();)
        std::swap(kept[i - 1], kept[i]);
    }
  }
  if (kept.empty()) kept.push_back({});
  return from_facets_unchecked(std::move(kept));
}

SimplicialComplex SimplicialComplex::from_facets_unchecked(std::vector<Face> facets) {
  SimplicialComplex cx;
  if (facets.empty()) facets.push_back({});
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  cx.facets_ = std::move(facets);
  return cx;
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  Face all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return from_facets_unchecked({all});
}

SimplicialComplex SimplicialComplex::empty_complex() {
  return from_facets_unchecked({Face{}});
}

int SimplicialComplex::dimension() const {
  size_t mx = 0;
  for (const auto& f : facets_) mx = std::max(mx, f.size());
  return static_cast<int>(mx) - 1;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) != dimension() + 1) return false;
  return true;
}

int SimplicialComplex::vertex_count() const {
  std::vector<int> all;
  for (const auto& f : facets_) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return static_cast<int>(all.size());
}

std::vector<Int> SimplicialComplex::f_vector() const { return count_faces(facets_); }

Poly SimplicialComplex::h_polynomial() const {
  return f_to_h(f_vector(), dimension() + 1);
}

Int SimplicialComplex::euler_characteristic() const {
  std::vector<Int> f = f_vector();
  Int chi(0);
  for (size_t i = 1; i < f.size(); ++i) {
    if ((i - 1) % 2 == 0)
      chi += f[i];
    else
      chi -= f[i];
  }
  return chi;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  if (k < 0) return empty_complex();
  if (k >= dimension()) return *this;
  std::vector<Face> faces;
  for (const auto& f : facets_) {
    int s = static_cast<int>(f.size());
    if (s <= k + 1) {
      faces.push_back(f);
      continue;
    }
    // all (k+1)-subsets
    std::vector<int> pick(k + 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k + 1) {
        faces.emplace_back(pick);
        return;
      }
      for (int t = start; t < s; ++t) {
        pick[depth] = f[t];
        rec(t + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return from_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::parse(std::istream& in) {
  std::vector<Face> faces;
  std::string line;
  while (std::getline(in, line)) {
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    Face f;
    int v;
    while (ls >> v) f.push_back(v);
    if (!ls.eof()) throw ParseError("bad vertex in complex file: " + line);
    if (!f.empty()) faces.push_back(std::move(f));
  }
  if (faces.empty()) throw ParseError("complex file has no facets");
  return from_faces(std::move(faces));
}

std::string SimplicialComplex::to_text() const {
  std::ostringstream out;
  for (const auto& f : facets_) {
    for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << "\n";
  }
  return out.str();
}

SimplicialComplex boundary_of_simplex(int n) {
  return SimplicialComplex::simplex(n).skeleton(n - 2);
}

namespace {

// Registry assigning dense ids to canonically-labeled subdivision vertices.
template <typename Label>
struct VertexRegistry {
  std::map<Label, int> ids;
  std::vector<Label> labels;
  int intern(const Label& label) {
    auto [it, fresh] = ids.emplace(label, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  }
};

using Weights = std::vector<std::pair<int, int>>;  // sorted (vertex, weight>0)

struct SdResult {
  SimplicialComplex complex;
  std::vector<SimplicialComplex::Face> labels;  // vertex id -> face of the base
};

SdResult sd_labeled(const SimplicialComplex& cx) {
  SdResult out;
  VertexRegistry<SimplicialComplex::Face> reg;
  std::vector<SimplicialComplex::Face> facets;
  for (const auto& f : cx.facets()) {
    int s = static_cast<int>(f.size());
    if (s == 0) continue;
    std::vector<int> perm(s);
    for (int t = 0; t < s; ++t) perm[t] = t;
    do {
      SimplicialComplex::Face chain_facet(s);
      SimplicialComplex::Face grow;
      for (int t = 0; t < s; ++t) {
        grow.push_back(f[perm[t]]);
        SimplicialComplex::Face sorted_face = grow;
        std::sort(sorted_face.begin(), sorted_face.end());
        chain_facet[t] = reg.intern(sorted_face);
      }
      facets.push_back(std::move(chain_facet));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.complex = SimplicialComplex::from_facets_unchecked(std::move(facets));
  out.labels = std::move(reg.labels);
  return out;
}

// Maximal cliques via Bron-Kerbosch with pivoting, on small bitset graphs.
struct CliqueFinder {
  int n;
  std::vector<std::vector<std::uint64_t>> adj;
  int words;

  explicit CliqueFinder(int vertices)
      : n(vertices), words((vertices + 63) / 64) {
    adj.assign(n, std::vector<std::uint64_t>(words, 0));
  }
  void add_edge(int a, int b) {
    adj[a][b / 64] |= 1ull << (b % 64);
    adj[b][a / 64] |= 1ull << (a % 64);
  }
  template <typename Sink>
  void run(Sink&& sink) {
    std::vector<std::uint64_t> p(words, 0), x(words, 0);
    for (int v = 0; v < n; ++v) p[v / 64] |= 1ull << (v % 64);
    std::vector<int> r;
    expand(r, p, x, sink);
  }

 private:
  static bool empty(const std::vector<std::uint64_t>& s) {
    for (auto w : s)
      if (w) return false;
    return true;
  }
  int popcount(const std::vector<std::uint64_t>& s) const {
    int c = 0;
    for (auto w : s) c += __builtin_popcountll(w);
    return c;
  }
  template <typename Sink>
  void expand(std::vector<int>& r, std::vector<std::uint64_t> p,
              std::vector<std::uint64_t> x, Sink&& sink) {
    if (empty(p) && empty(x)) {
      sink(r);
      return;
    }
    // pivot: vertex of P|X with most neighbors in P
    int pivot = -1, best = -1;
    for (int v = 0; v < n; ++v) {
      bool in = ((p[v / 64] | x[v / 64]) >> (v % 64)) & 1;
      if (!in) continue;
      std::vector<std::uint64_t> inter(words);
      for (int w = 0; w < words; ++w) inter[w] = p[w] & adj[v][w];
      int deg = popcount(inter);
      if (deg > best) {
        best = deg;
        pivot = v;
      }
    }
    for (int v = 0; v < n; ++v) {
      bool candidate = ((p[v / 64] >> (v % 64)) & 1) &&
                       !((adj[pivot][v / 64] >> (v % 64)) & 1);
      if (!candidate) continue;
      std::vector<std::uint64_t> np(words), nx(words);
      for (int w = 0; w < words; ++w) {
        np[w] = p[w] & adj[v][w];
        nx[w] = x[w] & adj[v][w];
      }
      r.push_back(v);
      expand(r, np, nx, sink);
      r.pop_back();
      p[v / 64] &= ~(1ull << (v % 64));
      x[v / 64] |= 1ull << (v % 64);
    }
  }
};

struct EsdResult {
  SimplicialComplex complex;
  std::vector<Weights> labels;  // vertex id -> weight map
};

EsdResult esd_labeled(const SimplicialComplex& cx, int r) {
  if (r < 1) throw OutOfRange("edgewise_subdivision: r must be >= 1");
  EsdResult out;
  VertexRegistry<Weights> reg;
  std::vector<SimplicialComplex::Face> facets;
  for (const auto& f : cx.facets()) {
    int s = static_cast<int>(f.size());
    if (s == 0) continue;
    // V_r(sigma_f): weak compositions of r into s parts, with iota vectors
    // (partial sums along the sorted vertex order of f).
    std::vector<std::vector<int>> comps;
    std::vector<int> cur(s, 0);
    std::function<void(int, int)> gen = [&](int pos, int left) {
      if (pos == s - 1) {
        cur[pos] = left;
        comps.push_back(cur);
        return;
      }
      for (int w = 0; w <= left; ++w) {
        cur[pos] = w;
        gen(pos + 1, left - w);
      }
    };
    gen(0, r);
    int m = static_cast<int>(comps.size());
    std::vector<std::vector<int>> iota(m, std::vector<int>(s));
    for (int a = 0; a < m; ++a) {
      int acc = 0;
      for (int t = 0; t < s; ++t) {
        acc += comps[a][t];
        iota[a][t] = acc;
      }
    }
    CliqueFinder graph(m);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        bool up = true, down = true;
        for (int t = 0; t < s; ++t) {
          int d = iota[a][t] - iota[b][t];
          if (d < 0 || d > 1) up = false;
          if (d > 0 || d < -1) down = false;
          if (!up && !down) break;
        }
        if (up || down) graph.add_edge(a, b);
      }
    }
    graph.run([&](const std::vector<int>& clique) {
      if (static_cast<int>(clique.size()) != s)
        throw UniformityViolation("edgewise cell of unexpected dimension");
      SimplicialComplex::Face facet;
      facet.reserve(s);
      for (int a : clique) {
        Weights w;
        for (int t = 0; t < s; ++t)
          if (comps[a][t] > 0) w.emplace_back(f[t], comps[a][t]);
        facet.push_back(reg.intern(w));
      }
      facets.push_back(std::move(facet));
    });
  }
  out.complex = SimplicialComplex::from_facets_unchecked(std::move(facets));
  out.labels = std::move(reg.labels);
  return out;
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& cx) {
  return sd_labeled(cx).complex;
}

SimplicialComplex edgewise_subdivision(const SimplicialComplex& cx, int r) {
  return esd_labeled(cx, r).complex;
}

SimplicialComplex colored_subdivision(const SimplicialComplex& cx, int r) {
  return edgewise_subdivision(barycentric_subdivision(cx), r);
}

namespace {

double construction_cost(SubdivKind kind, int r, int j) {
  double facets = 1;
  switch (kind) {
    case SubdivKind::Trivial:
      facets = 1;
      break;
    case SubdivKind::Sd:
      for (int t = 2; t <= j; ++t) facets *= t;
      break;
    case SubdivKind::Esd:
      for (int t = 1; t < j; ++t) facets *= r;
      break;
    case SubdivKind::Colored:
      for (int t = 2; t <= j; ++t) facets *= t;
      for (int t = 1; t < j; ++t) facets *= r;
      break;
  }
  return facets * static_cast<double>(1u << std::min(j, 20));
}

SimplicialComplex build_construction(SubdivKind kind, int r,
                                     const SimplicialComplex& base) {
  switch (kind) {
    case SubdivKind::Trivial:
      return base;
    case SubdivKind::Sd:
      return barycentric_subdivision(base);
    case SubdivKind::Esd:
      return edgewise_subdivision(base, r);
    case SubdivKind::Colored:
      return colored_subdivision(base, r);
  }
  throw OutOfRange("unknown construction");
}

// Vertices of the subdivision of sigma_d supported inside the first j base
// vertices.
std::vector<char> restriction_mask(SubdivKind kind, int r,
                                   const SimplicialComplex& base, int j,
                                   int vertex_total,
                                   const std::vector<SimplicialComplex::Face>& sd_labels,
                                   const std::vector<Weights>& esd_labels,
                                   const std::vector<SimplicialComplex::Face>& inner_sd_labels) {
  (void)base;
  (void)r;
  std::vector<char> in(vertex_total, 0);
  auto face_inside = [&](const SimplicialComplex::Face& face) {
    for (int v : face)
      if (v >= j) return false;
    return true;
  };
  for (int id = 0; id < vertex_total; ++id) {
    switch (kind) {
      case SubdivKind::Trivial:
        in[id] = id < j;
        break;
      case SubdivKind::Sd:
        in[id] = face_inside(sd_labels[id]);
        break;
      case SubdivKind::Esd: {
        bool ok = true;
        for (const auto& [v, w] : esd_labels[id]) ok = ok && v < j;
        in[id] = ok;
        break;
      }
      case SubdivKind::Colored: {
        bool ok = true;
        for (const auto& [sd_vertex, w] : esd_labels[id])
          ok = ok && face_inside(inner_sd_labels[sd_vertex]);
        in[id] = ok;
        break;
      }
    }
  }
  return in;
}

}  // namespace

FTriangle extract_ftriangle(SubdivKind kind, int r, int d) {
  if (d < 0) throw OutOfRange("extract_ftriangle: d must be >= 0");
  if ((kind == SubdivKind::Esd || kind == SubdivKind::Colored) && r < 1)
    throw OutOfRange("extract_ftriangle: r must be >= 1");
  double cost = 0;
  for (int j = 0; j <= d; ++j) cost += construction_cost(kind, r, j);
  cost += construction_cost(kind, r, d);  // uniformity pass reuses sigma_d
  if (cost > 8e6)
    throw OutOfRange("extract_ftriangle: construction too large for d = " +
                     std::to_string(d));

  std::vector<std::vector<Int>> rows(d + 1);
  for (int j = 0; j <= d; ++j) {
    SimplicialComplex subdiv = build_construction(kind, r, SimplicialComplex::simplex(j));
    std::vector<Int> f = subdiv.f_vector();
    f.resize(j + 1, Int(0));
    rows[j] = std::move(f);
  }

  // Uniformity: restrict the construction on sigma_d to the face on the
  // first j vertices and compare face counts with row j.
  SimplicialComplex base = SimplicialComplex::simplex(d);
  SimplicialComplex top;
  std::vector<SimplicialComplex::Face> sd_labels, inner_sd_labels;
  std::vector<Weights> esd_labels;
  switch (kind) {
    case SubdivKind::Trivial:
      top = base;
      break;
    case SubdivKind::Sd: {
      SdResult res = sd_labeled(base);
      top = std::move(res.complex);
      sd_labels = std::move(res.labels);
      break;
    }
    case SubdivKind::Esd: {
      EsdResult res = esd_labeled(base, r);
      top = std::move(res.complex);
      esd_labels = std::move(res.labels);
      break;
    }
    case SubdivKind::Colored: {
      SdResult inner = sd_labeled(base);
      inner_sd_labels = std::move(inner.labels);
      EsdResult res = esd_labeled(inner.complex, r);
      top = std::move(res.complex);
      esd_labels = std::move(res.labels);
      break;
    }
  }
  int vertex_total = top.vertex_count();
  for (int j = 0; j <= d; ++j) {
    std::vector<char> in = restriction_mask(kind, r, base, j, vertex_total,
                                            sd_labels, esd_labels, inner_sd_labels);
    std::vector<SimplicialComplex::Face> pieces;
    for (const auto& facet : top.facets()) {
      SimplicialComplex::Face kept;
      for (int v : facet)
        if (v < static_cast<int>(in.size()) && in[v]) kept.push_back(v);
      pieces.push_back(std::move(kept));
    }
    std::vector<Int> counts = count_faces(pieces);
    counts.resize(j + 1, Int(0));
    if (counts != rows[j])
      throw UniformityViolation("extract_ftriangle: restriction to a " +
                                std::to_string(j - 1) + "-face disagrees with row " +
                                std::to_string(j));
  }

  std::string name;
  switch (kind) {
    case SubdivKind::Trivial: name = "trivial"; break;
    case SubdivKind::Sd: name = "sd"; break;
    case SubdivKind::Esd: name = "esd r=" + std::to_string(r); break;
    case SubdivKind::Colored: name = "colored r=" + std::to_string(r); break;
  }
  return FTriangle(name, std::move(rows));
}

SimplicialComplex random_complex(int v, int facet_size, int m, std::uint64_t seed) {
  if (v < facet_size || facet_size < 1 || m < 1)
    throw OutOfRange("random_complex: need v >= facet_size >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  std::vector<SimplicialComplex::Face> faces;
  std::vector<int> pool(v);
  for (int i = 0; i < v; ++i) pool[i] = i;
  for (int t = 0; t < m; ++t) {
    for (int i = 0; i < facet_size; ++i) {
      std::uniform_int_distribution<int> pick(i, v - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    faces.emplace_back(pool.begin(), pool.begin() + facet_size);
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace lace
