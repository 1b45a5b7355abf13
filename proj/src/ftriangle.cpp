#include "lace/ftriangle.hpp"

#include <istream>
#include <sstream>

#include "lace/binomial.hpp"
#include "lace/errors.hpp"

namespace lace {

FTriangle::FTriangle(std::string name, std::vector<std::vector<Int>> rows)
    : name_(std::move(name)), rows_(std::move(rows)) {
  if (rows_.empty()) throw ParseError("f-triangle needs at least row 0");
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j].size() != j + 1)
      throw ParseError("f-triangle row " + std::to_string(j) + " must have " +
                       std::to_string(j + 1) + " entries");
    if (rows_[j][0] != 1)
      throw ParseError("f-triangle requires f(0,j) = 1 (empty face)");
    if (rows_[j][j] < 1)
      throw ParseError("f-triangle requires f(j,j) >= 1");
    for (const Int& v : rows_[j])
      if (v < 0) throw ParseError("f-triangle entries must be nonnegative");
  }
}

const Int& FTriangle::f(int i, int j) const {
  if (j < 0 || j > size() || i < 0 || i > j)
    throw OutOfRange("FTriangle::f: index (" + std::to_string(i) + "," +
                     std::to_string(j) + ") out of range");
  return rows_[j][i];
}

const std::vector<Int>& FTriangle::row(int j) const {
  if (j < 0 || j > size()) throw OutOfRange("FTriangle::row: out of range");
  return rows_[j];
}

FTriangle FTriangle::trivial(int d) {
  std::vector<std::vector<Int>> rows(d + 1);
  for (int j = 0; j <= d; ++j) {
    rows[j].resize(j + 1);
    for (int i = 0; i <= j; ++i) rows[j][i] = binomial(j, i);
  }
  return FTriangle("trivial", std::move(rows));
}

FTriangle FTriangle::barycentric(int d) {
  // f(i,j) = number of chains of i nonempty nested subsets of [j]
  //        = sum_s C(j,s) i! S(s,i)
  std::vector<std::vector<Int>> rows(d + 1);
  for (int j = 0; j <= d; ++j) {
    rows[j].resize(j + 1);
    rows[j][0] = 1;
    for (int i = 1; i <= j; ++i) {
      Int fact(1);
      for (int t = 2; t <= i; ++t) fact *= t;
      Int total(0);
      for (int s = i; s <= j; ++s) total += binomial(j, s) * fact * stirling2(s, i);
      rows[j][i] = total;
    }
  }
  return FTriangle("barycentric", std::move(rows));
}

FTriangle FTriangle::parse(std::istream& in, const std::string& name) {
  std::string line;
  int d = -1;
  while (std::getline(in, line)) {
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != "ftriangle") throw ParseError("expected 'ftriangle d=<n>' header");
    std::string darg;
    if (!(ls >> darg) || darg.rfind("d=", 0) != 0)
      throw ParseError("expected 'ftriangle d=<n>' header");
    d = std::stoi(darg.substr(2));
    break;
  }
  if (d < 0) throw ParseError("missing f-triangle header");
  std::vector<std::vector<Int>> rows(d + 1);
  int seen = 0;
  while (seen <= d && std::getline(in, line)) {
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("f-triangle row needs 'j:' prefix");
    int j = std::stoi(line.substr(0, colon));
    if (j < 0 || j > d) throw ParseError("f-triangle row index out of range");
    std::istringstream ls(line.substr(colon + 1));
    std::string tok;
    while (ls >> tok) rows[j].emplace_back(tok);
    ++seen;
  }
  return FTriangle(name, std::move(rows));
}

std::string FTriangle::to_text() const {
  std::ostringstream out;
  out << "ftriangle d=" << size() << "\n";
  for (int j = 0; j <= size(); ++j) {
    out << j << ":";
    for (int i = 0; i <= j; ++i) out << " " << rows_[j][i].get_str();
    out << "\n";
  }
  return out.str();
}

Poly h_simplex(const FTriangle& F, int n) {
  if (n < 0 || n > F.size()) throw OutOfRange("h_simplex: n out of range");
  return f_to_h(F.row(n), n);
}

Int interior_f(const FTriangle& F, int k, int n) {
  if (n < 0 || n > F.size() || k < 0 || k > n)
    throw OutOfRange("interior_f: index out of range");
  Int total(0);
  for (int m = k; m <= n; ++m) {
    Int term = binomial(n, m) * F.f(k, m);
    if ((n - m) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

Poly apply_EF(const FTriangle& F, const Poly& fpoly) {
  if (fpoly.degree() > F.size())
    throw DegreeExceedsBound("apply_EF: deg exceeds f-triangle size");
  Poly out;
  for (int n = 0; n <= fpoly.degree(); ++n) {
    Rat c = fpoly.coeff(n);
    if (c == 0) continue;
    std::vector<Rat> col(n + 1, Rat(0));
    for (int k = 0; k <= n; ++k) col[k] = Rat(interior_f(F, k, n));
    out += c * Poly(std::move(col));
  }
  return out;
}

PRowTable PRowTable::build(const FTriangle& F, int n) {
  if (n < 0 || n > F.size()) throw OutOfRange("build_p_rows: n exceeds f-triangle size");
  PRowTable table;
  table.rows_.resize(n + 1);
  table.theta_.resize(n + 1);
  table.rows_[0] = {Poly::one()};
  for (int m = 1; m <= n; ++m) {
    Poly h_m = h_simplex(F, m);
    Poly boundary;
    for (int k = 0; k <= m - 1; ++k) boundary += table.rows_[m - 1][k];
    table.theta_[m] = h_m - boundary;
    // previous extended row (p_{F,m-1,0}, ..., p_{F,m-1,m-1}, theta_m)
    std::vector<Poly> prev = table.rows_[m - 1];
    prev.push_back(table.theta_[m]);
    std::vector<Poly> row(m + 1);
    Poly below;  // sum_{i<k} prev[i]
    Poly above;  // sum_{i>=k} prev[i]
    for (const Poly& q : prev) above += q;
    for (int k = 0; k <= m; ++k) {
      row[k] = Poly::x() * below + above;
      below += prev[k];
      above -= prev[k];
    }
    if (row[0] != h_m)
      throw InconsistentFTriangle("build_p_rows: p_{F," + std::to_string(m) +
                                  ",0} != h_F(sigma_" + std::to_string(m) +
                                  ") for F = " + F.name());
    table.rows_[m] = std::move(row);
  }
  return table;
}

const Poly& PRowTable::p(int m, int k) const {
  if (m >= 0 && m <= levels() && k >= 0 && k <= m) return rows_[m][k];
  if (k == m + 1 && m + 1 >= 1 && m + 1 <= levels()) return theta_[m + 1];
  throw OutOfRange("PRowTable::p: index out of range");
}

const Poly& PRowTable::theta(int m) const {
  if (m < 1 || m > levels()) throw OutOfRange("PRowTable::theta: out of range");
  return theta_[m];
}

const std::vector<Poly>& PRowTable::row(int m) const {
  if (m < 0 || m > levels()) throw OutOfRange("PRowTable::row: out of range");
  return rows_[m];
}

std::vector<Poly> PRowTable::extended_row(int m) const {
  if (m < 1 || m > levels())
    throw OutOfRange("PRowTable::extended_row: out of range");
  std::vector<Poly> out = rows_[m - 1];
  out.push_back(theta_[m]);
  return out;
}

Poly apply_DF(const PRowTable& table, int n, const Poly& h) {
  if (n < 0 || n > table.levels()) throw OutOfRange("apply_DF: n out of range");
  if (h.degree() > n) throw DegreeExceedsBound("apply_DF: deg(h) exceeds n");
  Poly out;
  for (int k = 0; k <= n; ++k) {
    Rat c = h.coeff(k);
    if (c != 0) out += c * table.p(n, k);
  }
  return out;
}

Poly apply_DF(const FTriangle& F, int n, const Poly& h) {
  return apply_DF(PRowTable::build(F, n), n, h);
}

FeasibilityReport feasibility_report(const FTriangle& F, int n) {
  FeasibilityReport report;
  auto push = [&](const std::string& name, bool ok) {
    report.items.emplace_back(name, ok);
    report.all_ok = report.all_ok && ok;
  };
  try {
    PRowTable table = PRowTable::build(F, n);
    push("engine_consistency", true);
    for (int m = 1; m <= n; ++m) {
      bool sym = true, nonneg = true;
      for (int k = 0; k <= m; ++k) {
        sym = sym && reverse(table.p(m, k), m) == table.p(m, m - k);
        nonneg = nonneg && is_nonnegative(table.p(m, k));
      }
      push("pnk_symmetry@m=" + std::to_string(m), sym);
      push("pnk_nonnegative@m=" + std::to_string(m), nonneg);
      push("theta_symmetric@m=" + std::to_string(m),
           is_symmetric(table.theta(m), m));
    }
  } catch (const InconsistentFTriangle&) {
    push("engine_consistency", false);
  }
  bool interior_ok = true;
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= j; ++k) interior_ok = interior_ok && interior_f(F, k, j) >= 0;
  push("interior_f_nonnegative", interior_ok);
  return report;
}

}  // namespace lace
