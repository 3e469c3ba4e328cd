#include "hyperops/series.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperops {

Poly2 Poly2::constant(const Rational& r) {
  Poly2 p;
  if (r != 0) p.c[{0, 0}] = r;
  return p;
}

Poly2 Poly2::monomial(int du, int dv, const Rational& r) {
  Poly2 p;
  if (r != 0) p.c[{du, dv}] = r;
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, r] : o.c) {
    auto it = c.find(m);
    if (it == c.end()) {
      c.emplace(m, r);
    } else {
      it->second += r;
      if (it->second == 0) c.erase(it);
    }
  }
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, r] : o.c) {
    auto it = c.find(m);
    if (it == c.end()) {
      c.emplace(m, -r);
    } else {
      it->second -= r;
      if (it->second == 0) c.erase(it);
    }
  }
  return *this;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 p;
  for (const auto& [m1, r1] : c)
    for (const auto& [m2, r2] : o.c) {
      auto m = std::make_pair(m1.first + m2.first, m1.second + m2.second);
      auto it = p.c.find(m);
      if (it == p.c.end()) {
        p.c.emplace(m, r1 * r2);
      } else {
        it->second += r1 * r2;
        if (it->second == 0) p.c.erase(it);
      }
    }
  return p;
}

Poly2 Poly2::operator*(const Rational& r) const {
  Poly2 p;
  if (r != 0)
    for (const auto& [m, q] : c) p.c.emplace(m, q * r);
  return p;
}

Rational Poly2::eval(const Rational& u, const Rational& v) const {
  Rational out = 0;
  for (const auto& [m, r] : c) {
    Rational term = r;
    for (int i = 0; i < m.first; ++i) term *= u;
    for (int i = 0; i < m.second; ++i) term *= v;
    out += term;
  }
  return out;
}

std::string to_string(const Poly2& p) {
  if (p.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, r] : p.c) {
    if (!first) os << " + ";
    os << r;
    if (m.first) os << "*u^" << m.first;
    if (m.second) os << "*v^" << m.second;
    first = false;
  }
  return os.str();
}

Series Series::t(int order) {
  Series s(order);
  if (order >= 1) s.a[1] = Poly2::constant(1);
  return s;
}

Series Series::constant(int order, const Rational& r) {
  Series s(order);
  s.a[0] = Poly2::constant(r);
  return s;
}

Series operator+(const Series& x, const Series& y) {
  if (x.N != y.N) throw std::invalid_argument("series order mismatch");
  Series s(x.N);
  for (int k = 0; k <= x.N; ++k) {
    s.a[k] = x.a[k];
    s.a[k] += y.a[k];
  }
  return s;
}

Series operator-(const Series& x, const Series& y) {
  if (x.N != y.N) throw std::invalid_argument("series order mismatch");
  Series s(x.N);
  for (int k = 0; k <= x.N; ++k) {
    s.a[k] = x.a[k];
    s.a[k] -= y.a[k];
  }
  return s;
}

Series operator*(const Series& x, const Series& y) {
  if (x.N != y.N) throw std::invalid_argument("series order mismatch");
  Series s(x.N);
  for (int i = 0; i <= x.N; ++i) {
    if (x.a[i].zero()) continue;
    for (int j = 0; i + j <= x.N; ++j) {
      if (y.a[j].zero()) continue;
      s.a[i + j] += x.a[i] * y.a[j];
    }
  }
  return s;
}

Series scale(const Series& x, const Poly2& p) {
  Series s(x.N);
  for (int k = 0; k <= x.N; ++k) s.a[k] = x.a[k] * p;
  return s;
}

Series scale(const Series& x, const Rational& r) {
  return scale(x, Poly2::constant(r));
}

Series ps_exp(const Series& x) {
  if (!x.a[0].zero())
    throw std::invalid_argument("ps_exp: nonzero constant term");
  Series s = Series::constant(x.N, 1);
  Series pw = Series::constant(x.N, 1);
  Rational fact = 1;
  for (int k = 1; k <= x.N; ++k) {
    pw = pw * x;
    fact *= k;
    s = s + scale(pw, Rational(1) / fact);
  }
  return s;
}

Series ps_log1p(const Series& x) {
  if (!x.a[0].zero())
    throw std::invalid_argument("ps_log1p: nonzero constant term");
  Series s(x.N);
  Series pw = Series::constant(x.N, 1);
  for (int k = 1; k <= x.N; ++k) {
    pw = pw * x;
    s = s + scale(pw, Rational(k % 2 ? 1 : -1) / k);
  }
  return s;
}

Series ps_compose(const Series& x, const Series& y) {
  if (x.N != y.N) throw std::invalid_argument("series order mismatch");
  if (!y.a[0].zero())
    throw std::invalid_argument("ps_compose: inner constant term not zero");
  // Horner evaluation from the top coefficient down.
  Series s(x.N);
  for (int k = x.N; k >= 0; --k) {
    s = s * y;
    s.a[0] += x.a[k];
  }
  return s;
}

namespace {
// Multiplicative inverse of a series with constant term 1.
Series ps_inv_unit(const Series& x) {
  Series h = x;
  h.a[0] = Poly2();  // x = 1 + h
  Series s = Series::constant(x.N, 1);
  Series pw = Series::constant(x.N, 1);
  for (int k = 1; k <= x.N; ++k) {
    pw = pw * h;
    if (k % 2)
      s = s - pw;
    else
      s = s + pw;
  }
  return s;
}

Series derivative(const Series& x) {
  Series s(x.N);
  for (int k = 1; k <= x.N; ++k) s.a[k - 1] = x.a[k] * Rational(k);
  return s;
}

void require_rev_arg(const Series& x, const char* who) {
  if (!x.a[0].zero())
    throw std::invalid_argument(std::string(who) + ": constant term not zero");
  if (x.N < 1 || !(x.a[1] == Poly2::constant(1)))
    throw std::invalid_argument(std::string(who) +
                                ": t-coefficient must be exactly 1");
}
}  // namespace

Series ps_reverse(const Series& x) {
  require_rev_arg(x, "ps_reverse");
  // Newton: r <- r - (x(r) - t) / x'(r); each sweep at full order at these
  // sizes is cheap, and convergence doubles the correct valuation.
  Series r = Series::t(x.N);
  Series xp = derivative(x);
  for (int it = 0; it < x.N + 2; ++it) {
    Series err = ps_compose(x, r) - Series::t(x.N);
    bool zero = true;
    for (const auto& p : err.a) zero = zero && p.zero();
    if (zero) break;
    Series denom = ps_compose(xp, r);  // constant term 1
    r = r - (err * ps_inv_unit(denom));
  }
  return r;
}

Series ps_reverse_lagrange(const Series& x) {
  require_rev_arg(x, "ps_reverse_lagrange");
  // psi = x/t has constant term 1; [t^n] rev = (1/n) [t^{n-1}] psi^{-n}.
  Series psi(x.N);
  for (int k = 0; k < x.N; ++k) psi.a[k] = x.a[k + 1];
  Series inv = ps_inv_unit(psi);
  Series r(x.N);
  Series pw = Series::constant(x.N, 1);
  for (int n = 1; n <= x.N; ++n) {
    pw = pw * inv;  // inv^n
    r.a[n] = pw.a[n - 1] * (Rational(1) / n);
  }
  return r;
}

Series ps_forest(const Series& x, bool mark_u) {
  if (!x.a[0].zero())
    throw std::invalid_argument("ps_forest: nonzero constant term");
  Series s(x.N);
  Series pw = Series::constant(x.N, 1);
  Rational fact = 1;
  for (int k = 1; k <= x.N; ++k) {
    pw = pw * x;
    fact *= k;
    Poly2 coef = mark_u ? Poly2::monomial(k - 1, 0, Rational(1) / fact)
                        : Poly2::constant(Rational(1) / fact);
    s = s + scale(pw, coef);
  }
  return s;
}

Series subst_uv(const Series& x, const Rational& u, const Rational& v) {
  Series s(x.N);
  for (int k = 0; k <= x.N; ++k)
    s.a[k] = Poly2::constant(x.a[k].eval(u, v));
  return s;
}

Series hilbert_argument(Family fam, int order) {
  const int N = order;
  Series t = Series::t(N);
  Series emt = ps_exp(scale(t, Rational(-1)));     // e^{-t}
  Series et1(N);                                   // e^t - 1 - t
  {
    Series et = ps_exp(t);
    et1 = et - Series::constant(N, 1) - t;
  }
  // L = log(1 + u t)/u = sum (-1)^{k+1} u^{k-1} t^k / k.
  Series L(N);
  for (int k = 1; k <= N; ++k)
    L.a[k] = Poly2::monomial(k - 1, 0, Rational(k % 2 ? 1 : -1) / k);
  Poly2 v = Poly2::monomial(0, 1);

  switch (fam) {
    case Family::RT:
      return t * emt;
    case Family::Greg:
      // (t - v(e^t - 1 - t)) e^{-t}
      return (t - scale(et1, v)) * emt;
    case Family::FH:
      return L * emt;
    case Family::FG:
      return (L - scale(et1, v)) * emt;
    case Family::FRG: {
      // ((v+1) L + v - v e^L) e^{-t} ; note v - v e^L = -v (e^L - 1).
      Series eL1 = ps_exp(L) - Series::constant(N, 1);
      Poly2 vp1 = v;
      vp1 += Poly2::constant(1);
      return (scale(L, vp1) - scale(eL1, v)) * emt;
    }
  }
  throw std::logic_error("unreachable");
}

Series hilbert_series(Family fam, int order) {
  return ps_reverse(hilbert_argument(fam, order));
}

Series species_series(Family fam, int order) {
  const int N = order;
  Poly2 v = Poly2::monomial(0, 1);
  Series t = Series::t(N);
  auto blacks = [&](const Series& g) {
    // v * (e^g - 1 - g): a black vertex with >= 2 child subtrees.
    return scale(ps_exp(g) - Series::constant(N, 1) - g, v);
  };
  switch (fam) {
    case Family::RT: {
      Series R(N);
      for (int it = 0; it <= N + 1; ++it) R = t * ps_exp(R);
      return R;
    }
    case Family::Greg: {
      Series G(N);
      for (int it = 0; it <= N + 1; ++it) G = t * ps_exp(G) + blacks(G);
      return G;
    }
    case Family::FH: {
      Series f(N), H(N);
      for (int it = 0; it <= N + 1; ++it) {
        H = t * ps_exp(f);
        f = ps_forest(H, true);
      }
      return f;
    }
    case Family::FG: {
      // Single tree: white root over a set of groups, or a black root over
      // >= 2 groups (hyperedges may sit on blacks here).  A group is a
      // u-marked forest of trees.
      Series f(N), G(N);
      for (int it = 0; it <= N + 1; ++it) {
        G = t * ps_exp(f) + blacks(f);
        f = ps_forest(G, true);
      }
      return f;
    }
    case Family::FRG: {
      Series f(N), R(N);
      for (int it = 0; it <= N + 1; ++it) {
        R = t * ps_exp(f) + blacks(R);
        f = ps_forest(R, true);
      }
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

std::map<std::pair<int, int>, Integer> hilbert(Family fam, int n) {
  static std::map<std::pair<Family, int>, Series> memo;
  int order = n;
  // Compute once at a generous order and slice.
  auto key = std::make_pair(fam, 0);
  auto it = memo.find(key);
  if (it == memo.end() || it->second.N < order) {
    int big = std::max(order, 8);
    memo[key] = hilbert_series(fam, big);
    it = memo.find(key);
  }
  const Series& s = it->second;
  std::map<std::pair<int, int>, Integer> out;
  Integer nf = factorial(n);
  for (const auto& [m, r] : s.a[n].c) {
    Rational dim = r * Rational(nf);
    if (boost::multiprecision::denominator(dim) != 1)
      throw std::logic_error("hilbert: non-integer dimension");
    out[m] = boost::multiprecision::numerator(dim);
  }
  return out;
}

Integer hilbert_total(Family fam, int n) {
  Integer total = 0;
  for (const auto& [m, d] : hilbert(fam, n)) {
    (void)m;
    total += d;
  }
  return total;
}

Series pair_series(DualPair p, int order) {
  Family fam = p == DualPair::ComPreLie ? Family::FH : Family::FG;
  return subst_uv(hilbert_series(fam, order), 1, 1);
}

Series pair_dual_series(DualPair p, int order) {
  // f = rev(phi)  ==>  f^! has EGF -phi(-t); here phi is the family's
  // closed-form argument at u = v = 1.
  Family fam = p == DualPair::ComPreLie ? Family::FH : Family::FG;
  Series phi = subst_uv(hilbert_argument(fam, order), 1, 1);
  Series out(order);
  // [t^k] (-phi(-t)) = (-1)^{k+1} phi_k.
  for (int k = 0; k <= order; ++k)
    out.a[k] = phi.a[k] * Rational(k % 2 ? 1 : -1);
  return out;
}

bool koszul_check(const Series& f, const Series& fdual, std::string* why) {
  if (f.N != fdual.N) {
    if (why) *why = "order mismatch";
    return false;
  }
  // g(t) = -f^!(-t); the equation is f(g(t)) = t.
  Series g(f.N);
  for (int k = 0; k <= f.N; ++k)
    g.a[k] = fdual.a[k] * Rational(k % 2 ? 1 : -1);
  if (!g.a[0].zero()) {
    if (why) *why = "dual has nonzero constant term";
    return false;
  }
  Series lhs = ps_compose(f, g);
  Series t = Series::t(f.N);
  if (lhs == t) return true;
  if (why) {
    for (int k = 0; k <= f.N; ++k)
      if (!(lhs.a[k] == t.a[k])) {
        std::ostringstream os;
        os << "f(-f^!(-t)) deviates at t^" << k << ": " << to_string(lhs.a[k]);
        *why = os.str();
        break;
      }
  }
  return false;
}

bool koszul_check(DualPair p, int order, std::string* why) {
  return koszul_check(pair_series(p, order), pair_dual_series(p, order), why);
}

std::vector<Integer> dual_dims(DualPair p, int nmax) {
  Series d = pair_dual_series(p, nmax);
  std::vector<Integer> out;
  for (int n = 1; n <= nmax; ++n) {
    Rational dim = d.a[n].eval(0, 0) * Rational(factorial(n));
    if (boost::multiprecision::denominator(dim) != 1)
      throw std::logic_error("dual_dims: non-integer dimension");
    out.push_back(boost::multiprecision::numerator(dim));
  }
  return out;
}

}  // namespace hyperops
