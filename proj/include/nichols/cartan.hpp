#pragma once

// Finite-Cartan-type analysis over a braided space: detected Cartan datum
// (matrix, family, positive roots, N = ord(q_11)), root-label laws, the
// quantum-Serre + root-power presentation with its verification,
// orthogonal-pair scans against the classical X-sets, the exceptional-pair
// predicate, and the Lie dimension bound for the simply-laced/G2 families.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nichols/basis.hpp"
#include "nichols/braiding.hpp"
#include "nichols/cartan_matrix.hpp"
#include "nichols/lie.hpp"
#include "nichols/super_letters.hpp"

namespace nichols {

struct CartanDatum {
  IntMatrix a;
  CartanClass cls;                 // family + standard renumbering
  std::vector<Degree> phi_plus;    // positive roots by reflection closure
  long N = 0;                      // ord(q_11)
  std::vector<mpq_class> sym_d;    // symmetrizing diagonal, min-normalized to 1
};

inline std::optional<CartanDatum> cartan_datum(const BraidedSpace& v) {
  auto a = cartan_detect(v);
  if (!a) return std::nullopt;
  auto cls = classify_cartan_connected(*a);
  if (!cls) return std::nullopt;  // detection requires a connected diagram here
  CartanDatum d;
  d.a = *a;
  d.cls = *cls;
  d.phi_plus = positive_roots(*a);
  auto ord = v.q(1, 1).mult_order();
  d.N = ord ? *ord : 0;
  d.sym_d = *symmetrizer_diagonal(*a);
  return d;
}

// squared length of a root in the normalization where short simple roots
// have length^2 = 2
inline mpq_class root_length_sq(const CartanDatum& datum, const Degree& alpha) {
  mpq_class s = 0;
  int n = (int)datum.a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += datum.sym_d[i] * datum.a[i][j] * alpha[i] * alpha[j];
  return s;
}

// the label of a short simple root (consistent across a connected datum)
inline std::optional<Cyc> short_vertex_label(const BraidedSpace& v, const CartanDatum& datum) {
  std::optional<Cyc> label;
  for (int i = 0; i < v.rank(); ++i) {
    if (datum.sym_d[i] != 1) continue;
    if (!label) {
      label = v.q(i + 1, i + 1);
    } else if (*label != v.q(i + 1, i + 1)) {
      return std::nullopt;
    }
  }
  return label;
}

// --- presentation ----------------------------------------------------------

struct Presentation {
  struct Relation {
    std::string label;
    Degree degree;
    FreeElement value;
  };
  std::vector<Relation> serre;   // ad_c x_i^(1-a_ij) x_j, i != j
  std::vector<Relation> powers;  // x_alpha^N, alpha in Phi+
  std::vector<std::string> unavailable;  // roots with no hard letter within cutoff
};

struct PresentationHypotheses {
  bool odd_orders = true;
  bool coprime_three = true;
  bool finite_entry_orders = true;
  std::vector<std::string> violations;
  bool all() const { return odd_orders && coprime_three && finite_entry_orders; }
};

inline PresentationHypotheses presentation_hypotheses(const BraidedSpace& v) {
  PresentationHypotheses h;
  int n = v.rank();
  std::vector<long> ords(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    auto o = v.q(i, i).mult_order();
    if (!o) {
      h.finite_entry_orders = false;
      h.violations.push_back("q_" + std::to_string(i) + std::to_string(i) + " is not a root of unity");
      continue;
    }
    ords[i] = *o;
    if (*o % 2 == 0) {
      h.odd_orders = false;
      h.violations.push_back("ord(q_" + std::to_string(i) + std::to_string(i) + ") = " +
                             std::to_string(*o) + " is even");
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (!v.q(i, j).mult_order()) {
        h.finite_entry_orders = false;
        h.violations.push_back("q_" + std::to_string(i) + std::to_string(j) + " is not a root of unity");
      }
      Cyc prod = v.q(i, j) * v.q(j, i);
      if ((prod == v.q(i, i).pow(3) || prod == v.q(j, j).pow(3))) {
        if (ords[i] && ords[i] % 3 == 0) {
          h.coprime_three = false;
          h.violations.push_back("ord(q_" + std::to_string(i) + std::to_string(i) +
                                 ") divisible by 3 with a cubic edge at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        }
      }
    }
  return h;
}

// ad_c x^m y iterated: r -> x r - chi(e_x, deg r) r x
inline FreeElement ad_c_power(const BraidedSpace& v, int i, int m, int j) {
  FreeElement r = FreeElement::generator(v, j);
  FreeElement xi = FreeElement::generator(v, i);
  Degree ei = unit_degree(v.rank(), i);
  Degree dr = unit_degree(v.rank(), j);
  for (int t = 0; t < m; ++t) {
    r = xi * r - v.chi(ei, dr) * (r * xi);
    dr = deg_add(dr, ei);
  }
  return r;
}

inline Presentation build_presentation(const BraidedSpace& v, const CartanDatum& datum,
                                       const SuperLetterSet& letters) {
  Presentation p;
  int n = v.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int m = 1 - datum.a[i - 1][j - 1];
      Presentation::Relation rel;
      rel.label = "serre(" + std::to_string(i) + "," + std::to_string(j) + ")";
      rel.degree = deg_add(deg_scale(m, unit_degree(n, i)), unit_degree(n, j));
      rel.value = ad_c_power(v, i, m, j);
      p.serre.push_back(std::move(rel));
    }
  for (const Degree& alpha : datum.phi_plus) {
    const SuperLetterRecord* rec = nullptr;
    for (const auto& r : letters.hard_letters())
      if (r.degree == alpha) rec = &r;
    if (!rec) {
      p.unavailable.push_back("x_" + deg_display(alpha));
      continue;
    }
    Presentation::Relation rel;
    rel.label = "power(" + word_display(rec->word) + "^" + std::to_string(datum.N) + ")";
    rel.degree = deg_scale((int)datum.N, alpha);
    FreeElement x = bracketing(v, rec->word);
    FreeElement val = x;
    for (long t = 1; t < datum.N; ++t) val = val * x;
    rel.value = std::move(val);
    p.powers.push_back(std::move(rel));
  }
  return p;
}

inline std::string presentation_text(const Presentation& p) {
  std::string out;
  out += "relations:\n";
  for (const auto& r : p.serre)
    out += "  " + r.label + " @" + deg_display(r.degree) + ": " + r.value.to_string() + "\n";
  for (const auto& r : p.powers)
    out += "  " + r.label + " @" + deg_display(r.degree) + ": (power of the listed hard letter)\n";
  for (const auto& u : p.unavailable) out += "  unavailable: " + u + "\n";
  return out;
}

// --- orthogonal pairs and the classical X-sets ------------------------------

struct OrthogonalTriple {
  Degree alpha, beta, gamma;  // gamma = alpha + beta, all roots
};

// all unordered pairs of positive roots of B(V) whose chi-product is 1 and
// whose sum is again a root
inline std::vector<OrthogonalTriple> orthogonal_pairs(const BraidedSpace& v,
                                                      const std::vector<Degree>& roots) {
  std::set<Degree> rootset(roots.begin(), roots.end());
  std::vector<OrthogonalTriple> out;
  Cyc one = Cyc::one(v.order());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Degree sum = deg_add(roots[i], roots[j]);
      if (!rootset.count(sum)) continue;
      if (v.chi(roots[i], roots[j]) * v.chi(roots[j], roots[i]) == one)
        out.push_back({roots[i], roots[j], sum});
    }
  return out;
}

// expected orthogonal pairs in simple-root coordinates for B_n, C_n (n<=4)
// and F_4, translated from the orthonormal-basis description
inline std::optional<std::vector<std::pair<Degree, Degree>>> classical_xset(const CartanDatum& datum) {
  char fam = datum.cls.family;
  int n = datum.cls.rank;
  std::vector<std::pair<Degree, Degree>> out;
  auto canon = [](Degree a, Degree b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  if (fam == 'B' && n <= 4) {
    // eps_i = e_i + ... + e_n
    auto eps = [&](int i) {
      Degree d(n, 0);
      for (int k = i; k <= n; ++k) d[k - 1] = 1;
      return d;
    };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back(canon(eps(i), eps(j)));
    return out;
  }
  if (fam == 'C' && n <= 4) {
    // eps_i - eps_j = e_i + ... + e_{j-1};
    // eps_i + eps_j = e_i + ... + e_{j-1} + 2e_j + ... + 2e_{n-1} + e_n
    auto diff = [&](int i, int j) {
      Degree d(n, 0);
      for (int k = i; k < j; ++k) d[k - 1] = 1;
      return d;
    };
    auto sum = [&](int i, int j) {
      Degree d(n, 0);
      for (int k = i; k < j; ++k) d[k - 1] = 1;
      for (int k = j; k <= n - 1; ++k) d[k - 1] += 2;
      d[n - 1] += 1;
      return d;
    };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back(canon(diff(i, j), sum(i, j)));
    return out;
  }
  if (fam == 'F') {
    // eps vectors in simple-root coordinates (standard F4 numbering)
    std::map<int, Degree> eps{{1, {1, 2, 3, 2}}, {2, {1, 1, 1, 0}}, {3, {0, 1, 1, 0}}, {4, {0, 0, 1, 0}}};
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) out.push_back(canon(eps[i], eps[j]));
    // half-sum pairs: (eps1 + s2 eps2 + s3 eps3 + s4 eps4)/2 with exactly one
    // matching sign between the two members (so the pair is orthogonal and
    // the sum is again a root)
    auto half = [&](int s2, int s3, int s4) {
      Degree d(4, 0);
      for (int k = 0; k < 4; ++k)
        d[k] = (eps[1][k] + s2 * eps[2][k] + s3 * eps[3][k] + s4 * eps[4][k]) / 2;
      return d;
    };
    std::vector<std::array<int, 3>> signs;
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        for (int s4 : {1, -1}) signs.push_back({s2, s3, s4});
    for (std::size_t a = 0; a < signs.size(); ++a)
      for (std::size_t b = a + 1; b < signs.size(); ++b) {
        int agree = 0;
        for (int k = 0; k < 3; ++k)
          if (signs[a][k] == signs[b][k]) ++agree;
        if (agree != 1) continue;
        Degree da = half(signs[a][0], signs[a][1], signs[a][2]);
        Degree db = half(signs[b][0], signs[b][1], signs[b][2]);
        if (!deg_nonneg(da) || !deg_nonneg(db)) continue;
        out.push_back(canon(da, db));
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  return std::nullopt;  // no X-set for this family (ADE/G2: empty expectation)
}

// --- exceptional pairs (the eight allowed label patterns) -------------------

inline bool exceptional_pair(const Cyc& p_vv, const Cyc& p_ww) {
  long order = lcm_long(p_vv.order(), p_ww.order());
  Cyc one = Cyc::one(order);
  Cyc minus_one = -one;
  auto not_pm1 = [&](const Cyc& x) { return x != one && x != minus_one; };
  auto ord_is = [&](const Cyc& x, long t) {
    auto o = x.mult_order();
    return o && *o == t;
  };
  if (p_ww == p_vv && not_pm1(p_vv)) return true;                      // (i)
  if (p_ww == -p_vv.inverse() && not_pm1(p_vv)) return true;          // (ii)
  if (p_vv == -(p_ww * p_ww) && ord_is(p_ww, 18)) return true;        // (iii)
  if (p_vv == -p_ww.pow(-4) && ord_is(p_ww, 18)) return true;         // (iv)
  if (p_vv == -p_ww.pow(-4) && ord_is(p_ww, 10)) return true;         // (v)
  if (p_ww == -(p_vv * p_vv) && ord_is(p_vv, 18)) return true;        // (vi)
  if (p_ww == -p_vv.pow(-4) && ord_is(p_vv, 18)) return true;         // (vii)
  if (p_ww == -p_vv.pow(-4) && ord_is(p_vv, 10)) return true;         // (viii)
  return false;
}

// --- dimension bound for A/D/E/G2 -------------------------------------------

inline mpz_class cartan_lie_bound(long n_order, long nroots) {
  mpz_class base = n_order - 1;
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), (unsigned long)nroots);
  mpz_class half = (n_order / 2) - 1;
  return power + half * nroots * (nroots - 1) / 2;
}

}  // namespace nichols
