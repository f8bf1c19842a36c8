#pragma once

// Nichols (braided) Lie algebras: the closure of V inside B(V) under one
// of the three brackets, kept as echelonized per-degree components in
// quotient coordinates.
//
// The closure iterates newest-against-all bracketing.  A bracket landing
// beyond the cutoff is provably zero whenever some Hilbert coefficient
// within the cutoff already vanished (B(V) is generated in degree one);
// otherwise the result is only a lower bound and the span reports
// stabilized = false.

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "nichols/basis.hpp"
#include "nichols/echelon.hpp"
#include "nichols/super_letters.hpp"

namespace nichols {

struct LieGenEntry {
  int result;       // index into elements
  int left, right;  // parent element indices; -1,-1 for the seed generators
};

struct LieSpan {
  Flavor flavor = Flavor::Std;
  bool stabilized = false;
  std::map<Degree, Echelon> comps;
  std::vector<std::pair<Degree, std::vector<Cyc>>> elements;  // insertion order
  std::vector<LieGenEntry> log;

  long long dim() const {
    long long total = 0;
    for (const auto& [d, e] : comps) total += (long long)e.dim();
    return total;
  }
  std::map<Degree, long long> dims_by_degree() const {
    std::map<Degree, long long> out;
    for (const auto& [d, e] : comps)
      if (e.dim()) out.emplace(d, (long long)e.dim());
    return out;
  }
  std::map<int, long long> dims_by_total_degree() const {
    std::map<int, long long> out;
    for (const auto& [d, e] : comps)
      if (e.dim()) out[deg_total(d)] += (long long)e.dim();
    return out;
  }
  bool contains(const Degree& d, const std::vector<Cyc>& coords) const {
    bool zero = true;
    for (const Cyc& c : coords)
      if (!c.is_zero()) {
        zero = false;
        break;
      }
    if (zero) return true;
    auto it = comps.find(d);
    return it != comps.end() && it->second.contains(coords);
  }
  bool contains_nf(const NicholsBasis& basis, const FreeElement& a) const {
    for (const auto& [d, comp] : basis.normal_form(a).homogeneous_components())
      if (!contains(d, basis.coords(d, comp))) return false;
    return true;
  }
};

// coordinate-level bracket of homogeneous elements
inline std::vector<Cyc> bracket_coords(const NicholsBasis& basis, Flavor flavor,
                                       const Degree& da, const std::vector<Cyc>& a,
                                       const Degree& db, const std::vector<Cyc>& b) {
  const BraidedSpace& v = basis.space();
  std::vector<Cyc> ab = basis.product_coords(da, a, db, b);
  std::vector<Cyc> ba = basis.product_coords(db, b, da, a);
  std::vector<Cyc> out(ab.size(), Cyc::zero(v.order()));
  switch (flavor) {
    case Flavor::Std: {
      Cyc p = v.chi(db, da);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = ba[k] - p * ab[k];
      break;
    }
    case Flavor::Minus:
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = ab[k] - ba[k];
      break;
    case Flavor::C: {
      Cyc p = v.chi(da, db);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = ab[k] - p * ba[k];
      break;
    }
  }
  return out;
}

inline LieSpan lie_closure(const NicholsBasis& basis, Flavor flavor) {
  const BraidedSpace& v = basis.space();
  LieSpan span;
  span.flavor = flavor;
  int cutoff = basis.cutoff();
  // first certified-vanishing total degree, if any
  std::optional<int> zero_from;
  for (int m = 1; m <= cutoff; ++m)
    if (basis.hilbert()[m] == 0) {
      zero_from = m;
      break;
    }

  auto insert = [&](const Degree& d, std::vector<Cyc> coords, int left, int right) -> bool {
    auto it = span.comps.find(d);
    if (it == span.comps.end()) it = span.comps.emplace(d, Echelon(v.order())).first;
    if (!it->second.insert(coords)) return false;
    span.elements.emplace_back(d, std::move(coords));
    span.log.push_back({(int)span.elements.size() - 1, left, right});
    return true;
  };

  for (int i = 1; i <= v.rank(); ++i) {
    Degree d = unit_degree(v.rank(), i);
    std::vector<Cyc> coords = basis.coords(d, FreeElement::generator(v, i));
    insert(d, std::move(coords), -1, -1);
  }

  bool cutoff_skipped = false;
  std::size_t next = 0;  // elements before `next` have been bracketed against everything before them
  while (next < span.elements.size()) {
    std::size_t a = next++;
    for (std::size_t b = 0; b <= a && b < span.elements.size(); ++b) {
      // copies: insert() grows span.elements and would invalidate references
      auto [da, ca] = span.elements[a];
      auto [db, cb] = span.elements[b];
      int total = deg_total(da) + deg_total(db);
      if (total > cutoff) {
        if (!(zero_from && total >= *zero_from)) cutoff_skipped = true;
        continue;
      }
      Degree d = deg_add(da, db);
      insert(d, bracket_coords(basis, flavor, da, ca, db, cb), (int)a, (int)b);
      if (a != b) insert(d, bracket_coords(basis, flavor, db, cb, da, ca), (int)b, (int)a);
    }
  }
  span.stabilized = !cutoff_skipped;
  return span;
}

// [u]^t stays in the closure for t up to ord(p_uu) (cutoff permitting);
// returns nullopt when the degree budget is exhausted before t
inline std::optional<bool> powers_in_span(const NicholsBasis& basis, const LieSpan& span,
                                          const SuperLetterRecord& rec, long tmax) {
  Degree cur = rec.degree;
  std::vector<Cyc> pw = rec.nf_coords;
  for (long t = 1; t <= tmax; ++t) {
    if (deg_total(cur) > basis.cutoff()) return std::nullopt;
    if (!span.contains(cur, pw)) return false;
    if (t < tmax) {
      pw = basis.product_coords(cur, pw, rec.degree, rec.nf_coords);
      cur = deg_add(cur, rec.degree);
    }
  }
  return true;
}

}  // namespace nichols
