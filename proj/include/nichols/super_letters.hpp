#pragma once

// Hard super-letters, heights and the PBW data of B(V).
//
// A super-letter [u] (u Lyndon) is hard if its normal form is not a linear
// combination of products of super-letters greater than [u] of the same
// Z^n-degree.  D is the set of hard super-letters; its degrees form the
// positive roots.  The height of a hard [u] with t = ord(p_uu) is t when
// [u]^t falls into the span of products of greater letters at degree
// t*deg(u); hard letters with t > 1 whose height test fails within the
// cutoff are the m-infinity witnesses.  The restricted monomials
// [u_1]^{k_1}...[u_s]^{k_s} (u_s < ... < u_1, 0 <= k_i < h_{u_i}) count
// the PBW basis; their census must reproduce the Hilbert series.
//
// Enumeration prunes Lyndon words whose Shirshov factors are not both
// hard (sons of hard letters are hard); an unpruned mode exists so tests
// can validate the pruning.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "nichols/basis.hpp"
#include "nichols/echelon.hpp"
#include "nichols/free_element.hpp"

namespace nichols {

enum class HeightKind { Finite, Infinite, UnknownAtCutoff };

struct Height {
  HeightKind kind = HeightKind::UnknownAtCutoff;
  long value = 0;        // meaningful for Finite
  bool unit_puu = false; // p_uu = 1 (flagged; the height definition pins h = t = 1)
};

struct SuperLetterRecord {
  Word word;
  Degree degree;
  Cyc p_uu;
  std::optional<long> ord_puu;  // nullopt: not a root of unity
  std::vector<Cyc> nf_coords;   // normal form of the bracketed value
  Height height;
};

class SuperLetterSet {
 public:
  explicit SuperLetterSet(const NicholsBasis& basis, bool prune = true)
      : basis_(&basis) {
    build(prune);
    compute_heights();
  }

  const NicholsBasis& basis() const { return *basis_; }

  // D as a lex-ordered list
  const std::vector<SuperLetterRecord>& hard_letters() const { return records_; }

  const SuperLetterRecord* find(const Word& u) const {
    auto it = index_.find(u);
    return it == index_.end() ? nullptr : &records_[it->second];
  }

  bool is_hard(const Word& u) const {
    if (!is_lyndon(u)) throw std::invalid_argument("is_hard: input must be a Lyndon word");
    if (deg_total(word_degree(u, basis_->space().rank())) > basis_->cutoff())
      throw cutoff_error("is_hard: word degree beyond cutoff");
    auto it = tested_.find(u);
    if (it != tested_.end()) return it->second;
    return hardness_test(u);
  }

  // positive roots: the distinct degrees of hard letters
  std::vector<Degree> positive_roots() const {
    std::set<Degree> s;
    for (const auto& r : records_) s.insert(r.degree);
    return std::vector<Degree>(s.begin(), s.end());
  }

  // unordered pairs of distinct hard letters with p_uv p_vu != 1
  long e_e_prime() const {
    const BraidedSpace& v = basis_->space();
    Cyc one = Cyc::one(v.order());
    long count = 0;
    for (std::size_t i = 0; i < records_.size(); ++i)
      for (std::size_t j = i + 1; j < records_.size(); ++j)
        if (v.chi(records_[i].degree, records_[j].degree) *
                v.chi(records_[j].degree, records_[i].degree) != one)
          ++count;
    return count;
  }

  std::vector<const SuperLetterRecord*> m_infinity_offenders() const {
    std::vector<const SuperLetterRecord*> out;
    for (const auto& r : records_)
      if (r.ord_puu && *r.ord_puu > 1 && r.height.kind == HeightKind::Infinite)
        out.push_back(&r);
    return out;
  }

  // restricted-monomial counts by total degree 0..cutoff
  std::vector<long long> pbw_census() const {
    int cutoff = basis_->cutoff();
    std::vector<long long> poly(cutoff + 1, 0);
    poly[0] = 1;
    for (const auto& r : records_) {
      int step = deg_total(r.degree);
      long kmax = cutoff / step;  // exponents beyond the cutoff never contribute
      if (r.height.kind == HeightKind::Finite) kmax = std::min(kmax, r.height.value - 1);
      if (r.height.kind == HeightKind::UnknownAtCutoff) {
        // unknown heights block the census unless the bound provably
        // exceeds every exponent representable within the cutoff
        if (r.ord_puu && *r.ord_puu * step <= cutoff)
          throw std::logic_error("pbw census blocked: unknown height for " + word_display(r.word));
      }
      std::vector<long long> next(cutoff + 1, 0);
      for (int d = 0; d <= cutoff; ++d) {
        if (poly[d] == 0) continue;
        for (long k = 0; k <= kmax && d + k * step <= cutoff; ++k)
          next[d + k * step] += poly[d];
      }
      poly = std::move(next);
    }
    return poly;
  }

  // span of normal forms of nonincreasing products of hard letters
  // greater than `u`, of total multidegree exactly `target`
  Echelon greater_products_span(const Word& u, const Degree& target) const {
    const BraidedSpace& v = basis_->space();
    Echelon span(v.order());
    std::size_t full = basis_->block(target).basic.size();
    // generators: hard letters > u fitting inside target, descending
    std::vector<const SuperLetterRecord*> gens;
    for (const auto& r : records_)
      if (r.word > u && deg_leq(r.degree, target)) gens.push_back(&r);
    std::sort(gens.begin(), gens.end(),
              [](const SuperLetterRecord* a, const SuperLetterRecord* b) { return a->word > b->word; });
    dfs_products(gens, 0, target, std::nullopt, span, full);
    return span;
  }

 private:
  void dfs_products(const std::vector<const SuperLetterRecord*>& gens, std::size_t from,
                    const Degree& remaining, std::optional<std::pair<Degree, std::vector<Cyc>>> partial,
                    Echelon& span, std::size_t full) const {
    if (span.dim() == full) return;  // span already everything
    if (deg_total(remaining) == 0) {
      if (partial) span.insert(partial->second);
      return;
    }
    for (std::size_t idx = from; idx < gens.size(); ++idx) {
      const SuperLetterRecord* g = gens[idx];
      if (!deg_leq(g->degree, remaining)) continue;
      std::pair<Degree, std::vector<Cyc>> next;
      if (partial) {
        next.first = deg_add(partial->first, g->degree);
        next.second = basis_->product_coords(partial->first, partial->second, g->degree, g->nf_coords);
      } else {
        next = {g->degree, g->nf_coords};
      }
      bool zero = true;
      for (const Cyc& c : next.second)
        if (!c.is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;  // zero products span nothing further
      dfs_products(gens, idx, deg_sub(remaining, g->degree), next, span, full);
      if (span.dim() == full) return;
    }
  }

  bool hardness_test(const Word& u) const {
    Degree d = word_degree(u, basis_->space().rank());
    std::vector<Cyc> nf = basis_->coords(d, basis_->normal_form(bracketing(basis_->space(), u)));
    Echelon span = greater_products_span(u, d);
    bool hard = !span.contains(nf);
    tested_.emplace(u, hard);
    return hard;
  }

  void build(bool prune) {
    const BraidedSpace& v = basis_->space();
    int cutoff = basis_->cutoff();
    for (int len = 1; len <= cutoff; ++len) {
      // candidates of this length, classified in descending lex order so
      // that hardness of same-length greater letters is already known
      std::vector<Word> candidates;
      for (const Word& u : enumerate_lyndon(v.rank(), len))
        if ((int)u.size() == len) candidates.push_back(u);
      std::sort(candidates.rbegin(), candidates.rend());
      for (const Word& u : candidates) {
        if (prune && len >= 2) {
          auto [left, right] = shirshov_decomposition(u);
          if (!find(left) || !find(right)) continue;  // sons of hard letters are hard
        }
        if (!hardness_test(u)) continue;
        SuperLetterRecord rec;
        rec.word = u;
        rec.degree = word_degree(u, v.rank());
        rec.p_uu = v.chi(rec.degree, rec.degree);
        rec.ord_puu = rec.p_uu.mult_order();
        rec.nf_coords = basis_->coords(rec.degree, basis_->normal_form(bracketing(v, u)));
        records_.push_back(std::move(rec));
      }
      std::sort(records_.begin(), records_.end(),
                [](const SuperLetterRecord& a, const SuperLetterRecord& b) { return a.word < b.word; });
      index_.clear();
      for (std::size_t i = 0; i < records_.size(); ++i) index_.emplace(records_[i].word, i);
    }
  }

  void compute_heights() {
    int cutoff = basis_->cutoff();
    for (auto& rec : records_) {
      int step = deg_total(rec.degree);
      if (!rec.ord_puu) {
        rec.height = {HeightKind::Infinite, 0, false};  // order-infinite letter
        continue;
      }
      long t = *rec.ord_puu;
      if (t == 1) {
        // p_uu = 1: the definition pins h = t = 1, which a hard letter
        // cannot satisfy; search larger h anyway and flag the letter
        rec.height = {HeightKind::Infinite, 0, true};
        for (long h = 2; h * step <= cutoff; ++h) {
          if (power_in_greater_span(rec, h)) {
            rec.height = {HeightKind::Finite, h, true};
            break;
          }
        }
        continue;
      }
      if (t * step > cutoff) {
        rec.height = {HeightKind::UnknownAtCutoff, 0, false};
        continue;
      }
      rec.height = power_in_greater_span(rec, t) ? Height{HeightKind::Finite, t, false}
                                                 : Height{HeightKind::Infinite, 0, false};
    }
  }

  bool power_in_greater_span(const SuperLetterRecord& rec, long h) const {
    Degree target = deg_scale((int)h, rec.degree);
    std::vector<Cyc> pw = rec.nf_coords;
    Degree cur = rec.degree;
    for (long k = 1; k < h; ++k) {
      pw = basis_->product_coords(cur, pw, rec.degree, rec.nf_coords);
      cur = deg_add(cur, rec.degree);
    }
    Echelon span = greater_products_span(rec.word, target);
    return span.contains(pw);
  }

  const NicholsBasis* basis_;
  std::vector<SuperLetterRecord> records_;
  std::map<Word, std::size_t> index_;
  mutable std::map<Word, bool> tested_;
};

}  // namespace nichols
