#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// A scalar is stored as its coordinate vector in the power basis
// 1, x, ..., x^(phi(M)-1) of Q[x]/(Phi_M), where Phi_M is the M-th
// cyclotomic polynomial and x represents a fixed primitive M-th root of
// unity zeta_M.  Coordinates are arbitrary-precision rationals, so every
// operation is exact; vectors are always fully reduced mod Phi_M, which
// makes equality a coordinate-wise test.
//
// Scalars of different orders are comparable/combinable after embedding
// into Q(zeta_lcm); binary operations perform that embedding eagerly.

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

using Rational = mpq_class;

struct scalar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct scalar_parse_error : scalar_error {
  scalar_parse_error(const std::string& what, std::size_t pos)
      : scalar_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

namespace poly {

// Polynomials over Q, coefficients ascending.  Only what the cyclotomic
// layer needs: trim, multiply, exact division, remainder.

using P = std::vector<Rational>;

inline void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// Division with remainder; requires den nonzero.
inline void divmod(P num, const P& den, P& quot, P& rem) {
  if (den.empty()) throw scalar_error("polynomial division by zero");
  trim(num);
  quot.assign(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0,
              Rational(0));
  const Rational& lead = den.back();
  while (num.size() >= den.size()) {
    Rational c = num.back() / lead;
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= c * den[i];
    trim(num);
  }
  rem = std::move(num);
}

// Extended gcd: returns g (monic-ish, not normalized) and s, t with
// s*a + t*b = g.
inline void ext_gcd(P a, P b, P& g, P& s, P& t) {
  P s0{Rational(1)}, s1, t0, t1{Rational(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    P q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    P qs = mul(q, s1), qt = mul(q, t1);
    P ns = s0, nt = t0;
    ns.resize(std::max(ns.size(), qs.size()), Rational(0));
    nt.resize(std::max(nt.size(), qt.size()), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
    for (std::size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
    trim(ns);
    trim(nt);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  g = std::move(a);
  s = std::move(s0);
  t = std::move(t0);
}

}  // namespace poly

inline long euler_phi(long m) {
  long result = m, k = m;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

// Per-order field data: Phi_M and the reduction table x^k mod Phi_M for
// k in [phi, 2*phi-2], which covers products of reduced elements.
struct CycFieldData {
  long order = 0;
  long phi = 0;
  poly::P modulus;                      // Phi_M, monic, size phi+1
  std::vector<poly::P> xpow;            // xpow[k-phi] = x^k mod Phi_M
};

namespace detail {

inline const poly::P& cyclotomic_polynomial(long m,
                                            std::map<long, poly::P>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  poly::P p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;  // x^m - 1
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const poly::P& phid = cyclotomic_polynomial(d, cache);
    poly::P q, r;
    poly::divmod(p, phid, q, r);
    if (!r.empty()) throw scalar_error("cyclotomic polynomial division error");
    p = std::move(q);
  }
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace detail

inline const CycFieldData& cyc_field(long m) {
  if (m < 1) throw scalar_error("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<long, CycFieldData> registry;
  static std::map<long, poly::P> phi_cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(m);
  if (it != registry.end()) return it->second;
  CycFieldData d;
  d.order = m;
  d.phi = euler_phi(m);
  d.modulus = detail::cyclotomic_polynomial(m, phi_cache);
  if ((long)d.modulus.size() != d.phi + 1)
    throw scalar_error("cyclotomic polynomial degree mismatch");
  // x^k mod Phi, for k = phi .. 2*phi-2
  poly::P cur(d.phi, Rational(0));  // x^(phi-1) shifted once below
  if (d.phi >= 1) {
    // start from x^(phi-1)
    cur.assign(d.phi, Rational(0));
    cur[d.phi - 1] = 1;
  }
  for (long k = d.phi; k <= 2 * d.phi - 2; ++k) {
    // multiply by x, reduce by modulus
    poly::P next(d.phi + 1, Rational(0));
    for (long i = 0; i < d.phi; ++i) next[i + 1] = cur[i];
    if (next.size() == (std::size_t)d.phi + 1 && next[d.phi] != 0) {
      Rational c = next[d.phi];
      for (long i = 0; i <= d.phi; ++i) next[i] -= c * d.modulus[i];
    }
    next.resize(d.phi);
    d.xpow.push_back(next);
    cur = std::move(next);
  }
  return registry.emplace(m, std::move(d)).first->second;
}

inline long lcm_long(long a, long b) {
  long g = a, h = b;
  while (h) {
    long t = g % h;
    g = h;
    h = t;
  }
  return a / g * b;
}

class Cyc {
 public:
  Cyc() : order_(1), c_(1, Rational(0)) {}

  static Cyc zero(long m) { return Cyc(m); }
  static Cyc one(long m) { return from_rational(m, Rational(1)); }
  static Cyc from_rational(long m, const Rational& r) {
    Cyc a(m);
    a.c_[0] = r;
    return a;
  }
  // zeta_M as an element of Q(zeta_M).
  static Cyc zeta(long m) {
    Cyc a(m);
    if (cyc_field(m).phi > 1) {
      a.c_[1] = 1;
    } else {
      // phi(m) = 1 means m in {1,2}: zeta_1 = 1, zeta_2 = -1.
      a.c_[0] = (m == 2) ? -1 : 1;
    }
    return a;
  }

  long order() const { return order_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  Rational rational_value() const {
    if (!is_rational()) throw scalar_error("scalar is not rational");
    return c_[0];
  }

  // Embedding into Q(zeta_L) for order_ | L, sending zeta_M to zeta_L^(L/M).
  Cyc promoted(long l) const {
    if (l == order_) return *this;
    if (l % order_ != 0)
      throw scalar_error("cannot embed into non-multiple cyclotomic order");
    long step = l / order_;
    poly::P p;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::size_t e = k * step;
      if (p.size() <= e) p.resize(e + 1, Rational(0));
      p[e] += c_[k];
    }
    Cyc r(l);
    r.assign_reduced(std::move(p));
    return r;
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    const CycFieldData& f = cyc_field(x.order_);
    std::vector<Rational> prod(2 * f.phi - 1, Rational(0));
    for (long i = 0; i < f.phi; ++i) {
      if (x.c_[i] == 0) continue;
      for (long j = 0; j < f.phi; ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    Cyc r(x.order_);
    for (long k = 0; k < f.phi && k < (long)prod.size(); ++k) r.c_[k] = prod[k];
    for (long k = f.phi; k < (long)prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const poly::P& red = f.xpow[k - f.phi];
      for (std::size_t i = 0; i < red.size(); ++i) r.c_[i] += prod[k] * red[i];
    }
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Rational& s) {
    Cyc r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend Cyc operator*(const Rational& s, const Cyc& a) { return a * s; }

  Cyc inverse() const {
    if (is_zero()) throw scalar_error("division by zero");
    const CycFieldData& f = cyc_field(order_);
    poly::P a(c_.begin(), c_.end());
    poly::trim(a);
    poly::P g, s, t;
    poly::ext_gcd(a, f.modulus, g, s, t);
    if (g.size() != 1)
      throw scalar_error("element not invertible (gcd not constant)");
    Rational inv_g = 1 / g[0];
    for (auto& x : s) x *= inv_g;
    Cyc r(order_);
    r.assign_reduced(std::move(s));
    return r;
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    return x * y.inverse();
  }

  Cyc pow(long e) const {
    if (e == 0) return one(order_);
    Cyc base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? (unsigned long)(-(e + 1)) + 1ul : (unsigned long)e;
    Cyc acc = one(order_);
    while (k) {
      if (k & 1ul) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    auto [x, y] = aligned(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Total order for use as map keys / deterministic sorting; compares the
  // common-order coordinate vectors lexicographically.
  friend bool deterministic_less(const Cyc& a, const Cyc& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      int c = cmp(x.c_[i], y.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // Least k >= 1 with a^k = 1, scanning k <= lcm(2, M); every root of
  // unity in Q(zeta_M) has order dividing lcm(2, M), so the scan is
  // complete.  nullopt means "not a root of unity".
  std::optional<long> mult_order() const {
    if (is_zero()) throw scalar_error("multiplicative order of zero");
    long bound = lcm_long(2, order_);
    Cyc p = *this;
    for (long k = 1; k <= bound; ++k) {
      if (p.is_one()) return k;
      p = p * (*this);
    }
    return std::nullopt;
  }

  // Canonical square root of a root of unity: writes a = zeta_L^j with
  // L = lcm(2, M) and the least such j, and returns zeta_{2L}^j.  The
  // result squares to a; its declared order is 2M or a divisor situation
  // covered by promotion.
  Cyc sqrt_root_of_unity() const {
    if (is_zero()) throw scalar_error("square root of zero is not a root of unity");
    long l = lcm_long(2, order_);
    Cyc z = zeta(l);
    Cyc p = one(l);
    Cyc self = promoted(l);
    for (long j = 0; j < l; ++j) {
      if (p == self) {
        if (j % 2 == 0) return zeta(l).pow(j / 2);
        return zeta(2 * l).pow(j);
      }
      p = p * z;
    }
    throw scalar_error("not a root of unity");
  }

  std::string to_string() const;
  static Cyc parse(const std::string& text, long m);

  friend std::ostream& operator<<(std::ostream& os, const Cyc& a) {
    return os << a.to_string();
  }

 private:
  explicit Cyc(long m) : order_(m), c_(cyc_field(m).phi, Rational(0)) {}

  void assign_reduced(poly::P p) {
    const CycFieldData& f = cyc_field(order_);
    poly::trim(p);
    if ((long)p.size() > f.phi) {
      poly::P q, r;
      poly::divmod(p, f.modulus, q, r);
      p = std::move(r);
    }
    p.resize(f.phi, Rational(0));
    c_.assign(p.begin(), p.end());
  }

  static std::pair<Cyc, Cyc> aligned(const Cyc& a, const Cyc& b) {
    if (a.order_ == b.order_) return {a, b};
    long l = lcm_long(a.order_, b.order_);
    return {a.promoted(l), b.promoted(l)};
  }

  long order_;
  std::vector<Rational> c_;
};

// --- textual scalar syntax -------------------------------------------------
//
// Integer- or rational-coefficient expressions in `z`, where z denotes
// zeta_M for the contextual order M: "-z^2", "1", "z^4 + z", "1/2*z - 3".
// Serialization re-emits the canonical reduced form with descending powers.

inline std::string Cyc::to_string() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& co = c_[k];
    if (co == 0) continue;
    bool neg = co < 0;
    Rational mag = neg ? Rational(-co) : co;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string coeff = mag.get_str();
    if (k == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

inline Cyc Cyc::parse(const std::string& text, long m) {
  Cyc result = Cyc::zero(m);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parse_uint = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) throw scalar_parse_error("expected digits", start);
    return text.substr(start, i - start);
  };
  skip_ws();
  if (i >= text.size()) throw scalar_parse_error("empty scalar", 0);
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) throw scalar_parse_error("empty scalar", i);
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw scalar_parse_error("expected '+' or '-' between terms", i);
    }
    first = false;
    // coefficient
    Rational coeff(1);
    bool saw_coeff = false;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      std::string num = parse_uint();
      std::string den;
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        den = parse_uint();
        skip_ws();
      }
      coeff = den.empty() ? Rational(num) : Rational(num + "/" + den);
      coeff.canonicalize();
      saw_coeff = true;
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != 'z')
          throw scalar_parse_error("expected 'z' after '*'", i);
      }
    }
    long expo = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      expo = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::size_t at = i;
        std::string e = parse_uint();
        expo = std::stol(e);
        if (expo < 0) throw scalar_parse_error("negative exponent", at);
      }
    } else if (!saw_coeff) {
      throw scalar_parse_error("expected coefficient or 'z'", i);
    }
    Cyc term = Cyc::zeta(m).pow(expo) * coeff;
    if (sign < 0) term = -term;
    result = result + term;
    skip_ws();
  }
  return result;
}

}  // namespace nichols
