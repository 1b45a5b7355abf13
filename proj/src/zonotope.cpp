#include "lace/zonotope.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

#include "lace/errors.hpp"
#include "lace/operators.hpp"
#include "lace/realroot.hpp"

namespace lace {

namespace {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

int rank_of(Mat m) {
  // fraction-free row echelon
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r2 = rank; r2 < rows; ++r2)
      if (m[r2][c] != 0) {
        pivot = r2;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r2 = rank + 1; r2 < rows; ++r2) {
      if (m[r2][c] == 0) continue;
      Int a = m[rank][c], b = m[r2][c];
      for (int c2 = 0; c2 < cols; ++c2) m[r2][c2] = m[r2][c2] * a - m[rank][c2] * b;
    }
    ++rank;
  }
  return rank;
}

// Bareiss fraction-free determinant of a square integer matrix.
Int determinant(Mat m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Int(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Integer basis of the rational nullspace {y : m y = 0}.
std::vector<Vec> nullspace(const Mat& m, int cols) {
  int rows = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = Rat(m[r][c]);
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    Rat lead = a[rank][c];
    for (int c2 = 0; c2 < cols; ++c2) a[rank][c2] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat factor = a[r][c];
      for (int c2 = 0; c2 < cols; ++c2) a[r][c2] -= factor * a[rank][c2];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
      continue;
    std::vector<Rat> y(cols, Rat(0));
    y[c] = 1;
    for (int r = 0; r < rank; ++r) y[pivot_col[r]] = -a[r][c];
    Int lcm(1);
    for (const Rat& q : y) {
      Int den = q.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Vec iv(cols);
    Int g(0);
    for (int t = 0; t < cols; ++t) {
      Rat scaled = y[t] * Rat(lcm);
      iv[t] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[t].get_mpz_t());
    }
    if (g > 1)
      for (Int& v : iv) v /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

Int dot(const Vec& a, const Vec& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec primitive_signed(Vec v) {
  Int g(0);
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

// Slab constraints c.x in [lo, hi] whose intersection with the affine span
// is the zonotope; one normal per (n-1)-independent generator subset.
struct SlabSystem {
  std::vector<Vec> normals;        // primitive, within span of generators
  std::vector<Vec> span_equations; // u.x = u.(mt) for u orthogonal to the span
};

SlabSystem slab_system(const Zonotope& z) {
  SlabSystem sys;
  int n = z.rank();
  int s = static_cast<int>(z.generators.size());
  int N = z.ambient_dim();
  sys.span_equations = nullspace(z.generators, N);

  std::vector<Vec> seen;
  std::vector<int> idx(n > 0 ? n - 1 : 0);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n - 1) {
      Mat sub;
      for (int t : idx) sub.push_back(z.generators[t]);
      if (rank_of(sub) != n - 1) return;
      // c = G^T y orthogonal to the chosen subset
      Mat system;  // (n-1) x s matrix: rows (sub_i . g_j)_j
      for (const Vec& v : sub) {
        Vec row(s);
        for (int j = 0; j < s; ++j) row[j] = dot(v, z.generators[j]);
        system.push_back(std::move(row));
      }
      for (const Vec& y : nullspace(system, s)) {
        Vec c(N, Int(0));
        for (int j = 0; j < s; ++j)
          for (int t = 0; t < N; ++t) c[t] += y[j] * z.generators[j][t];
        bool zero = std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
        bool orth = true;
        for (const Vec& v : sub) orth = orth && dot(c, v) == 0;
        if (zero || !orth) continue;
        c = primitive_signed(std::move(c));
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
          seen.push_back(c);
          sys.normals.push_back(c);
        }
        break;
      }
      return;
    }
    for (int t = start; t < s; ++t) {
      idx[depth] = t;
      rec(t + 1, depth + 1);
    }
  };
  if (n >= 1) rec(0, 0);
  return sys;
}

Int count_points(const Zonotope& z, long m, bool interior) {
  int N = z.ambient_dim();
  SlabSystem sys = slab_system(z);
  // per-slab bounds over the m-th dilate
  std::vector<Int> lo(sys.normals.size()), hi(sys.normals.size());
  for (size_t i = 0; i < sys.normals.size(); ++i) {
    Int base = dot(sys.normals[i], z.translation);
    Int neg(0), pos(0);
    for (const Vec& g : z.generators) {
      Int d = dot(sys.normals[i], g);
      if (d < 0) neg += d;
      if (d > 0) pos += d;
    }
    lo[i] = Int(m) * (base + neg);
    hi[i] = Int(m) * (base + pos);
  }
  std::vector<Int> span_rhs(sys.span_equations.size());
  for (size_t i = 0; i < sys.span_equations.size(); ++i)
    span_rhs[i] = Int(m) * dot(sys.span_equations[i], z.translation);

  // bounding box of the dilate
  std::vector<long> box_lo(N), box_hi(N);
  double box_size = 1;
  for (int t = 0; t < N; ++t) {
    Int neg(0), pos(0);
    for (const Vec& g : z.generators) {
      if (g[t] < 0) neg += g[t];
      if (g[t] > 0) pos += g[t];
    }
    Int lo_t = Int(m) * (z.translation[t] + neg);
    Int hi_t = Int(m) * (z.translation[t] + pos);
    box_lo[t] = lo_t.get_si();
    box_hi[t] = hi_t.get_si();
    box_size *= static_cast<double>(box_hi[t] - box_lo[t] + 1);
  }
  if (box_size > 1e6)
    throw CountRefused("lattice counting refused: bounding box has about " +
                       std::to_string(static_cast<long long>(box_size)) + " points");

  Int total(0);
  Vec point(N);
  std::function<void(int)> sweep = [&](int t) {
    if (t == N) {
      for (size_t i = 0; i < sys.span_equations.size(); ++i)
        if (dot(sys.span_equations[i], point) != span_rhs[i]) return;
      for (size_t i = 0; i < sys.normals.size(); ++i) {
        Int v = dot(sys.normals[i], point);
        if (interior ? !(lo[i] < v && v < hi[i]) : !(lo[i] <= v && v <= hi[i]))
          return;
      }
      total += 1;
      return;
    }
    for (long v = box_lo[t]; v <= box_hi[t]; ++v) {
      point[t] = v;
      sweep(t + 1);
    }
  };
  sweep(0);
  return total;
}

}  // namespace

int Zonotope::ambient_dim() const {
  return static_cast<int>(translation.size());
}

int Zonotope::rank() const { return rank_of(generators); }

Zonotope Zonotope::parse(std::istream& in) {
  Zonotope z;
  std::string line;
  std::vector<Int> translation;
  while (std::getline(in, line)) {
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    std::vector<Int> row;
    bool is_translate = first == "translate:";
    if (!is_translate) row.emplace_back(first);
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (is_translate)
      translation = std::move(row);
    else
      z.generators.push_back(std::move(row));
  }
  if (z.generators.empty() && translation.empty())
    throw ParseError("zonotope file has no generators and no translation");
  size_t N = z.generators.empty() ? translation.size() : z.generators[0].size();
  for (const auto& g : z.generators)
    if (g.size() != N) throw ParseError("zonotope generators of mixed dimension");
  if (translation.empty()) translation.assign(N, Int(0));
  if (translation.size() != N)
    throw ParseError("zonotope translation dimension mismatch");
  z.translation = std::move(translation);
  return z;
}

std::string Zonotope::to_text() const {
  std::ostringstream out;
  for (const auto& g : generators) {
    for (size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i].get_str();
    out << "\n";
  }
  bool has_translation = false;
  for (const Int& t : translation) has_translation = has_translation || t != 0;
  if (has_translation) {
    out << "translate:";
    for (const Int& t : translation) out << " " << t.get_str();
    out << "\n";
  }
  return out.str();
}

Poly ehrhart_polynomial(const Zonotope& z) {
  int s = static_cast<int>(z.generators.size());
  if (s > 20) throw OutOfRange("ehrhart_polynomial: too many generators");
  int N = z.ambient_dim();
  std::vector<Rat> coeffs(z.rank() + 1, Rat(0));
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::vector<int> pick;
    for (int t = 0; t < s; ++t)
      if (mask & (1u << t)) pick.push_back(t);
    int k = static_cast<int>(pick.size());
    if (k > z.rank()) continue;
    Mat sub;
    for (int t : pick) sub.push_back(z.generators[t]);
    if (k > 0 && rank_of(sub) != k) continue;
    // gcd over all k x k minors (column choices)
    Int g(0);
    if (k == 0) {
      g = 1;
    } else {
      std::vector<int> cols(k);
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (g == 1) return;
        if (depth == k) {
          Mat minor(k, Vec(k));
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) minor[a][b] = sub[a][cols[b]];
          Int det = determinant(minor);
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
          return;
        }
        for (int c = start; c < N; ++c) {
          cols[depth] = c;
          rec(c + 1, depth + 1);
        }
      };
      rec(0, 0);
    }
    coeffs[k] += Rat(g);
  }
  return Poly(std::move(coeffs));
}

Int count_lattice_points(const Zonotope& z, long m) {
  if (m == 0) return Int(1);
  return count_points(z, m, false);
}

Int count_interior_lattice_points(const Zonotope& z, long m) {
  if (z.rank() == 0) return Int(1);  // a point is its own relative interior
  return count_points(z, m, true);
}

Poly hstar(const Zonotope& z) {
  int n = z.rank();
  Poly iota = ehrhart_polynomial(z);
  std::vector<Rat> values(n + 1);
  for (int m = 0; m <= n; ++m) values[m] = iota.eval(Rat(m));
  return series_numerator(values, n);
}

Poly hstar_r(const Zonotope& z, int r) {
  if (r < 1) throw OutOfRange("hstar_r: r must be >= 1");
  int n = z.rank();
  Poly h = hstar(z);
  Poly veronese_route = edgewise_U(n, r, h);
  Poly series_route;
  if (n == 0) {
    series_route = Poly::one();
  } else {
    Poly iota = ehrhart_polynomial(z);
    std::vector<Rat> g(n);
    for (int m = 0; m <= n - 1; ++m)
      g[m] = iota.eval(Rat(r * m)) - iota.eval(Rat(r * m - 1));
    Poly one_minus_x_n = Poly::one();
    for (int t = 0; t < n; ++t) one_minus_x_n = one_minus_x_n * Poly::from_ints({1, -1});
    series_route = iota.eval(Rat(-1)) * one_minus_x_n + series_numerator(g, n - 1);
  }
  if (veronese_route != series_route)
    throw PathMismatch("hstar_r: series route disagrees with U^n_r route");
  return series_route;
}

bool interior_point_exists(const Zonotope& z) {
  int n = z.rank();
  Rat v = ehrhart_polynomial(z).eval(Rat(-1));
  if (n % 2 != 0) v = -v;
  return v >= 1;
}

Certificate certify_zonotope(const Zonotope& z, int r) {
  Certificate cert;
  int n = z.rank();
  cert.subject = "zonotope with " + std::to_string(z.generators.size()) +
                 " generators, rank " + std::to_string(n) + ", r = " +
                 std::to_string(r);
  Poly iota = ehrhart_polynomial(z);

  // Counting cross-checks where the box permits.
  for (long m = 1; m <= 3; ++m) {
    try {
      Int counted = count_lattice_points(z, m);
      cert.add("lattice_count_matches@m=" + std::to_string(m),
               Rat(counted) == iota.eval(Rat(m)));
    } catch (const CountRefused&) {
      break;
    }
  }

  std::vector<Rat> c = std_to_binomial_basis(iota, n);
  bool c_ok = true;
  for (const Rat& v : c) c_ok = c_ok && v >= 0 && is_integer(v);
  cert.add("binomial_coeffs_nonneg_integers", c_ok);

  Poly h_r = hstar_r(z, r);
  Poly via_colored = colored_D(n, r, Poly(std::vector<Rat>(c)));
  cert.add("colored_operator_route_consistent", via_colored == h_r);

  Certificate rr = is_real_rooted(h_r);
  cert.add("hstar_r_real_rooted", rr.positive());
  cert.witnesses = rr.witnesses;

  bool interior = interior_point_exists(z);
  cert.add("interior_lattice_point", interior);
  try {
    Int direct = count_interior_lattice_points(z, 1);
    cert.add("interior_count_matches", (direct >= 1) == interior);
  } catch (const CountRefused&) {
  }

  bool ok = rr.positive();
  if (interior) {
    Rat head(0), tail(0);
    bool sums = true;
    for (int i = 0; i <= n / 2; ++i) {
      head += c[i];
      tail += c[n - i];
      sums = sums && head <= tail;
    }
    cert.add("c_ineq1", sums);
    SymDecomp d = symmetric_decomposition(h_r, n);
    bool decomp_ok = is_nonnegative(d.a) && is_nonnegative(d.b) &&
                     is_real_rooted(d.a).positive() && is_real_rooted(d.b).positive();
    cert.add("sym_decomp_nonneg_real_rooted", decomp_ok);
    ok = ok && sums && decomp_ok;
  }
  cert.verdict = ok ? "certified" : "counterexample";
  return cert;
}

}  // namespace lace
