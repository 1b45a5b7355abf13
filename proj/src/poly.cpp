#include "lace/poly.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "lace/binomial.hpp"
#include "lace/errors.hpp"

namespace lace {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/'))
      throw ParseError("bad rational literal: '" + text + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) { return q.get_str(); }

namespace {

long env_binom_bound() {
  const char* raw = std::getenv("LACE_BINOM_CACHE");
  if (raw == nullptr) return 64;
  long parsed = std::strtol(raw, nullptr, 10);
  return parsed > 0 ? parsed : 64;
}

}  // namespace

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  static std::mutex mu;
  static std::vector<std::vector<Int>> table;  // table[n][k]
  static long bound = env_binom_bound();
  if (n > bound) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
  }
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(table.size()) <= n) {
    long row = static_cast<long>(table.size());
    std::vector<Int> next(row + 1, Int(1));
    for (long j = 1; j < row; ++j) next[j] = table[row - 1][j - 1] + table[row - 1][j];
    table.push_back(std::move(next));
  }
  return table[n][k];
}

Int stirling2(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  if (n == 0) return Int(k == 0 ? 1 : 0);
  // S(n,k) = k S(n-1,k) + S(n-1,k-1)
  std::vector<Int> row(1, Int(1));  // row for n=0
  for (long m = 1; m <= n; ++m) {
    std::vector<Int> next(m + 1, Int(0));
    for (long j = 1; j <= m; ++j) {
      next[j] = Int(j) * (j < static_cast<long>(row.size()) ? row[j] : Int(0)) +
                row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

Poly::Poly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x(int power) {
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = 1;
  return Poly(std::move(c));
}

Poly Poly::from_ints(std::vector<long> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

Rat Poly::eval(const Rat& x0) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rat> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& c, Poly p) {
  for (auto& a : p.coeffs_) a *= c;
  p.trim();
  return p;
}

Poly scale(const Poly& p, const Rat& c) { return c * p; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) out << mag.get_str();
    if (i >= 1) {
      out << "x";
      if (i >= 2) out << "^" << i;
    }
  }
  return out.str();
}

Poly reverse(const Poly& p, int n) {
  if (p.degree() > n)
    throw DegreeExceedsBound("reverse: deg(p) = " + std::to_string(p.degree()) +
                             " exceeds n = " + std::to_string(n));
  if (p.is_zero()) return Poly();
  std::vector<Rat> c(n + 1, Rat(0));
  for (int i = 0; i <= p.degree(); ++i) c[n - i] = p.coeff(i);
  return Poly(std::move(c));
}

SymDecomp symmetric_decomposition(const Poly& p, int n) {
  if (p.degree() > n)
    throw DegreeExceedsBound("symmetric_decomposition: deg(p) = " +
                             std::to_string(p.degree()) +
                             " exceeds n = " + std::to_string(n));
  SymDecomp d;
  d.n = n;
  if (n < 0) return d;  // p is zero here
  // a_i = sum_{j<=i} p_j - sum_{j<=i-1} p_{n-j},  b_i = sum_{j<=i} (p_{n-j} - p_j)
  std::vector<Rat> a(n + 1, Rat(0)), b(std::max(n, 0), Rat(0));
  Rat head(0), tail(0);
  for (int i = 0; i <= n; ++i) {
    head += p.coeff(i);
    a[i] = head - tail;
    tail += p.coeff(n - i);
    if (i < n) b[i] = tail - head;
  }
  d.a = Poly(std::move(a));
  d.b = Poly(std::move(b));
  return d;
}

Poly binomial_basis_to_std(const std::vector<Rat>& c, int n) {
  if (static_cast<int>(c.size()) != n + 1)
    throw DegreeExceedsBound("binomial_basis_to_std: need n+1 coordinates");
  std::vector<Rat> f(n + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (c[i] == 0) continue;
      f[j] += c[i] * Rat(binomial(n - i, j - i));
    }
  }
  return Poly(std::move(f));
}

std::vector<Rat> std_to_binomial_basis(const Poly& f, int n) {
  if (f.degree() > n)
    throw DegreeExceedsBound("std_to_binomial_basis: deg(f) exceeds n");
  std::vector<Rat> c(n + 1, Rat(0));
  for (int m = 0; m <= n; ++m) {
    Rat acc = f.coeff(m);
    for (int i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      acc -= c[i] * Rat(binomial(n - i, m - i));
    }
    c[m] = acc;
  }
  return c;
}

Poly f_to_h(const std::vector<Int>& fvec, int n) {
  if (static_cast<int>(fvec.size()) != n + 1)
    throw DegreeExceedsBound("f_to_h: need n+1 face counts");
  std::vector<Rat> h(n + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (fvec[i] == 0) continue;
      Int term = fvec[i] * binomial(n - i, j - i);
      if ((j - i) % 2 != 0) term = -term;
      h[j] += Rat(term);
    }
  }
  return Poly(std::move(h));
}

std::vector<Rat> h_to_f(const Poly& h, int n) {
  if (h.degree() > n) throw DegreeExceedsBound("h_to_f: deg(h) exceeds n");
  std::vector<Rat> f(n + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k <= i; ++k) f[i] += h.coeff(k) * Rat(binomial(n - k, i - k));
  }
  return f;
}

Poly veronese(const Poly& p, int r, int k) {
  if (r < 1 || k < 0 || k >= r)
    throw BadSectionIndex("veronese: need r >= 1 and 0 <= k < r");
  std::vector<Rat> c;
  for (int m = 0; r * m + k <= p.degree(); ++m) c.push_back(p.coeff(r * m + k));
  return Poly(std::move(c));
}

std::vector<Rat> gamma_expansion(const Poly& p, int n) {
  if (p.degree() > n)
    throw DegreeExceedsBound("gamma_expansion: deg(p) exceeds n");
  if (!is_symmetric(p, n))
    throw NotSymmetric("gamma_expansion: polynomial is not symmetric w.r.t. n = " +
                       std::to_string(n));
  std::vector<Rat> gamma(n / 2 + 1, Rat(0));
  Poly residual = p;
  Poly one_plus_x = Poly::from_ints({1, 1});
  for (int i = 0; i <= n / 2; ++i) {
    gamma[i] = residual.coeff(i);
    if (gamma[i] == 0) continue;
    Poly basis = Poly::x(i);
    for (int t = 0; t < n - 2 * i; ++t) basis = basis * one_plus_x;
    residual -= gamma[i] * basis;
  }
  if (!residual.is_zero())
    throw NotSymmetric("gamma_expansion: residual nonzero (internal)");
  return gamma;
}

bool is_gamma_positive(const Poly& p, int n) {
  if (!is_symmetric(p, n)) return false;
  for (const Rat& g : gamma_expansion(p, n))
    if (g < 0) return false;
  return true;
}

bool is_unimodal(const Poly& p) {
  const auto& c = p.coeffs();
  size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_log_concave(const Poly& p) {
  const auto& c = p.coeffs();
  for (size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

bool is_nonnegative(const Poly& p) {
  for (const Rat& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

Poly series_numerator(const std::vector<Rat>& values, int n) {
  if (static_cast<int>(values.size()) != n + 1)
    throw DegreeExceedsBound("series_numerator: need n+1 values");
  std::vector<Rat> d(n + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Int b = binomial(n + 1, j);
      if (j % 2 != 0) b = -b;
      d[i] += Rat(b) * values[i - j];
    }
  }
  return Poly(std::move(d));
}

std::vector<Rat> series_prefix(const Poly& p, int n, int nterms) {
  std::vector<Rat> out(nterms, Rat(0));
  for (int m = 0; m < nterms; ++m) {
    if (n == 0) {
      out[m] = p.coeff(m);
      continue;
    }
    for (int j = 0; j <= std::min(m, p.degree()); ++j)
      out[m] += p.coeff(j) * Rat(binomial(n - 1 + m - j, n - 1));
  }
  return out;
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(rational_to_string(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string())
      c.push_back(parse_rational(item.get<std::string>()));
    else if (item.is_number_integer())
      c.emplace_back(item.get<long>());
    else
      throw ParseError("polynomial JSON entries must be strings or integers");
  }
  return Poly(std::move(c));
}

Poly poly_from_inline(const std::string& text) {
  std::vector<Rat> c;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    size_t b = token.find_last_not_of(" \t");
    c.push_back(parse_rational(token.substr(a, b - a + 1)));
  }
  if (c.empty()) throw ParseError("empty polynomial literal");
  return Poly(std::move(c));
}

}  // namespace lace
