#include "lace/realroot.hpp"

#include <algorithm>
#include <cassert>

#include "lace/errors.hpp"

namespace lace {

namespace {

// Scales by a positive rational so coefficients become coprime integers.
// Sign-preserving, so Sturm sign sequences are unaffected.
Poly primitive_positive(const Poly& p) {
  if (p.is_zero()) return p;
  Int den_lcm(1), num_gcd(0);
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    Int den = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Rat> scaled;
  scaled.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Rat v = c * Rat(den_lcm);
    Int num = v.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    scaled.push_back(std::move(v));
  }
  for (Rat& v : scaled) v /= Rat(num_gcd);
  return Poly(std::move(scaled));
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rat lead = p.coeffs().back();
  return Rat(1 / lead) * p;
}

int sign_of(const Rat& q) { return sgn(q); }

struct SturmChain {
  std::vector<Poly> seq;

  explicit SturmChain(const Poly& p) {
    seq.push_back(primitive_positive(p));
    Poly d = primitive_positive(p.derivative());
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().is_zero()) {
      Poly rem = poly_divmod(seq[seq.size() - 2], seq.back()).remainder;
      if (rem.is_zero()) break;
      seq.push_back(primitive_positive(-rem));
    }
  }

  int variations(const Rat& x) const {
    int count = 0, prev = 0;
    for (const Poly& f : seq) {
      int s = sign_of(f.eval(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  // Distinct roots in (lo, hi]; endpoints must not be roots of seq[0].
  int count(const Rat& lo, const Rat& hi) const {
    return variations(lo) - variations(hi);
  }
};

// B with all real roots of f strictly inside (-B, B) and f(+-B) != 0.
Rat cauchy_bound(const Poly& f) {
  Rat lead = f.coeffs().back();
  Rat sum(1);
  for (int i = 0; i < f.degree(); ++i) sum += abs(f.coeff(i) / lead);
  while (f.eval(sum) == 0 || f.eval(-sum) == 0) sum += 1;
  return sum;
}

// A located root: f is monic square-free, the open interval (lo, hi) holds
// exactly one of its roots with f(lo) != 0 != f(hi); lo == hi pins an exact
// rational root.
struct RootRec {
  Poly f;
  Rat lo, hi;
  int mult = 1;
  bool exact() const { return lo == hi; }

  void refine_once() {
    if (exact()) return;
    Rat mid = (lo + hi) / 2;
    Rat v = f.eval(mid);
    if (v == 0) {
      lo = hi = mid;
      return;
    }
    if (sign_of(f.eval(lo)) != sign_of(v))
      hi = mid;
    else
      lo = mid;
  }

  void refine_below(const Rat& width) {
    while (!exact() && hi - lo > width) refine_once();
  }
};

std::vector<RootRec> isolate_squarefree(const Poly& f, int mult,
                                        const Rat& width) {
  std::vector<RootRec> out;
  if (f.degree() <= 0) return out;
  SturmChain chain(f);
  Rat bound = cauchy_bound(f);
  struct Span {
    Rat lo, hi;
    int count;
  };
  std::vector<Span> stack;
  int total = chain.count(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Span span = stack.back();
    stack.pop_back();
    if (span.count == 1) {
      RootRec rec{f, span.lo, span.hi, mult};
      rec.refine_below(width);
      out.push_back(std::move(rec));
      continue;
    }
    Rat mid = (span.lo + span.hi) / 2;
    if (f.eval(mid) == 0) {
      out.push_back(RootRec{f, mid, mid, mult});
      // shrink the excluded gap until it holds only the root at mid
      Rat eps = (span.hi - span.lo) / 4;
      while (f.eval(mid - eps) == 0 || f.eval(mid + eps) == 0 ||
             chain.count(mid - eps, mid + eps) != 1)
        eps /= 2;
      int left = chain.count(span.lo, mid - eps);
      int right = chain.count(mid + eps, span.hi);
      if (left > 0) stack.push_back({span.lo, mid - eps, left});
      if (right > 0) stack.push_back({mid + eps, span.hi, right});
    } else {
      int left = chain.count(span.lo, mid);
      if (left > 0) stack.push_back({span.lo, mid, left});
      if (span.count - left > 0) stack.push_back({mid, span.hi, span.count - left});
    }
  }
  return out;
}

bool separated(const RootRec& a, const RootRec& b) {
  // a entirely left of b; shared closed endpoints are fine because open
  // intervals exclude them and exact points differ from interval roots.
  return a.hi <= b.lo && !(a.exact() && b.exact() && a.lo == b.lo);
}

void sort_records(std::vector<RootRec>& recs) {
  std::sort(recs.begin(), recs.end(), [](const RootRec& a, const RootRec& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
}

// Roots across records are pairwise distinct reals; refine until the
// intervals are pairwise disjoint, then sort ascending.
void make_disjoint(std::vector<RootRec>& recs) {
  bool again = true;
  while (again) {
    again = false;
    sort_records(recs);
    for (size_t i = 0; i + 1 < recs.size(); ++i) {
      RootRec& a = recs[i];
      RootRec& b = recs[i + 1];
      while (!separated(a, b) && !separated(b, a)) {
        a.refine_once();
        b.refine_once();
        again = true;
      }
    }
  }
  sort_records(recs);
}

// All roots of p with multiplicities, sorted ascending, pairwise disjoint.
// Requires p nonzero and real-rooted (checked by the caller).
std::vector<RootRec> root_records(const Poly& p, const Rat& width) {
  std::vector<RootRec> recs;
  for (const auto& sf : squarefree_decomposition(p)) {
    auto part = isolate_squarefree(sf.factor, sf.multiplicity, width);
    recs.insert(recs.end(), part.begin(), part.end());
  }
  make_disjoint(recs);
  return recs;
}

int compare_roots(RootRec& a, RootRec& b) {
  while (true) {
    if (a.exact() && b.exact()) {
      if (a.lo < b.lo) return -1;
      if (a.lo > b.lo) return 1;
      return 0;
    }
    if (separated(a, b)) return -1;
    if (separated(b, a)) return 1;
    if (a.exact()) {
      if (b.f.eval(a.lo) == 0) return 0;
      b.refine_once();
      continue;
    }
    if (b.exact()) {
      if (a.f.eval(b.lo) == 0) return 0;
      a.refine_once();
      continue;
    }
    Poly g = poly_gcd(a.f, b.f);
    if (g.degree() >= 1) {
      Rat jlo = std::max(a.lo, b.lo);
      Rat jhi = std::min(a.hi, b.hi);
      if (jlo < jhi && sturm_root_count(g, jlo, jhi) >= 1) return 0;
    }
    a.refine_once();
    b.refine_once();
  }
}

const Rat& default_width() {
  static const Rat width(1, 1 << 20);
  return width;
}

Witness to_witness(const RootRec& rec) { return Witness{rec.lo, rec.hi, rec.mult}; }

}  // namespace

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw OutOfRange("poly_divmod: division by zero polynomial");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  Rat lead = b.coeffs().back();
  std::vector<Rat> quot(std::max<int>(0, a.degree() - db + 1), Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem.empty() || i >= static_cast<int>(rem.size()) || rem[i] == 0) continue;
    Rat q = rem[i] / lead;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  a = primitive_positive(a);
  b = primitive_positive(b);
  while (!b.is_zero()) {
    Poly r = primitive_positive(poly_divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  Poly f = make_monic(p);
  Poly g = poly_gcd(f, f.derivative());
  Poly b = poly_divmod(f, g).quotient;
  Poly c = poly_divmod(f.derivative(), g).quotient;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = poly_divmod(b, a).quotient;
    c = poly_divmod(d, a).quotient;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return make_monic(p);
  Poly f = make_monic(p);
  return poly_divmod(f, poly_gcd(f, f.derivative())).quotient;
}

int sturm_root_count(const Poly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw OutOfRange("sturm_root_count: zero polynomial");
  if (!(lo < hi)) throw OutOfRange("sturm_root_count: need lo < hi");
  if (p.eval(lo) == 0 || p.eval(hi) == 0)
    throw EndpointIsRoot("sturm_root_count: endpoint is a root");
  return SturmChain(p).count(lo, hi);
}

int IsolatingIntervals::multiplicity_total() const {
  int total = 0;
  for (const auto& w : intervals) total += w.multiplicity;
  return total;
}

IsolatingIntervals isolate_roots(const Poly& p) {
  return isolate_roots(p, default_width());
}

IsolatingIntervals isolate_roots(const Poly& p, const Rat& target_width) {
  if (p.is_zero()) throw NotRealRooted("isolate_roots: zero polynomial");
  if (!is_real_rooted(p).positive())
    throw NotRealRooted("isolate_roots: polynomial has non-real roots");
  IsolatingIntervals out;
  for (const RootRec& rec : root_records(p, target_width))
    out.intervals.push_back(to_witness(rec));
  return out;
}

Certificate is_real_rooted(const Poly& p) {
  Certificate cert;
  cert.subject = "real-rootedness of " + p.to_string();
  if (p.is_zero()) {
    cert.verdict = "real_rooted";
    cert.add("zero_polynomial", true);
    return cert;
  }
  Poly sf = squarefree_part(p);
  int distinct = 0;
  if (sf.degree() >= 1) {
    Rat bound = cauchy_bound(sf);
    distinct = sturm_root_count(sf, -bound, bound);
  }
  bool ok = distinct == sf.degree();
  cert.add("distinct_real_roots_equal_squarefree_degree", ok);
  cert.verdict = ok ? "real_rooted" : "not_real_rooted";
  if (ok && p.degree() >= 1) {
    for (const RootRec& rec : root_records(p, default_width()))
      cert.witnesses.push_back(to_witness(rec));
  }
  return cert;
}

Certificate interlaces(const Poly& p, const Poly& q) {
  if (!is_real_rooted(p).positive())
    throw NotRealRooted("interlaces: first argument has non-real roots");
  if (!is_real_rooted(q).positive())
    throw NotRealRooted("interlaces: second argument has non-real roots");
  Certificate cert;
  cert.subject = "interlacing: (" + p.to_string() + ") vs (" + q.to_string() +
                 "); witnesses list roots of the first then of the second";
  if (p.is_zero() || q.is_zero()) {
    cert.verdict = "interlaces";
    cert.add("zero_polynomial_convention", true);
    return cert;
  }
  bool gap_ok = p.degree() <= q.degree() && q.degree() <= p.degree() + 1;
  cert.add("degree_gap_ok", gap_ok);

  auto rp = root_records(p, default_width());
  auto rq = root_records(q, default_width());
  for (const auto& rec : rp) cert.witnesses.push_back(to_witness(rec));
  for (const auto& rec : rq) cert.witnesses.push_back(to_witness(rec));

  // Walk distinct root values downward; p interlaces q iff every prefix of
  // the merged (descending) root multisets satisfies
  //   cum_p <= cum_q <= cum_p + 1.
  bool alternation = true;
  long cum_p = 0, cum_q = 0;
  size_t ip = rp.size(), iq = rq.size();
  while (ip > 0 || iq > 0) {
    int take;  // -1: next value comes from p only, 1: q only, 0: both
    if (ip == 0)
      take = 1;
    else if (iq == 0)
      take = -1;
    else
      take = -compare_roots(rp[ip - 1], rq[iq - 1]);
    if (take <= 0) cum_p += rp[--ip].mult;
    if (take >= 0) cum_q += rq[--iq].mult;
    if (!(cum_p <= cum_q && cum_q <= cum_p + 1)) {
      alternation = false;
      break;
    }
  }
  cert.add("alternation_ok", alternation);
  cert.verdict = (gap_ok && alternation) ? "interlaces" : "not_interlaces";
  return cert;
}

Certificate is_interlacing_sequence(const std::vector<Poly>& seq) {
  Certificate cert;
  cert.subject = "interlacing sequence of " + std::to_string(seq.size()) +
                 " polynomials";
  for (size_t i = 0; i < seq.size(); ++i) {
    for (size_t j = i + 1; j < seq.size(); ++j) {
      Certificate pair = interlaces(seq[i], seq[j]);
      if (!pair.positive()) {
        cert.add("interlaces@" + std::to_string(i) + "," + std::to_string(j),
                 false);
        cert.verdict = "not_interlacing_sequence";
        cert.witnesses = std::move(pair.witnesses);
        return cert;
      }
    }
  }
  cert.add("all_pairs_interlace", true);
  cert.verdict = "interlacing_sequence";
  return cert;
}

Poly recipe_transform(const std::vector<Poly>& seq, int k) {
  if (k < 0 || k > static_cast<int>(seq.size()))
    throw OutOfRange("recipe_transform: k out of range");
  Poly low, high;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    if (i < k)
      low += seq[i];
    else
      high += seq[i];
  }
  return Poly::x() * low + high;
}

}  // namespace lace
