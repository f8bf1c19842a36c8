#pragma once

// The computable model of B(V) = T(V)/S, S = (+) ker S_m: per-degree
// reduction data built bottom-up.
//
// Primary kernel computation (the pairing radical): at positive degree d
// an element u is zero in B(V) iff every skew derivation <y_i, u> is zero
// in B(V).  So the degree-d component of B(V) embeds into
// (+)_i B(V)_{d-e_i} by u |-> (NF<y_i, u>)_i, and the kernel at d is the
// nullspace of that linear map.  Processing the words of each degree in
// lex order and accepting a word as a quotient-basis ("basic") word
// exactly when its image is independent of the images of the accepted
// words yields canonical reduction data: the basic words are the lex
// smallest words not in the leading-term set of the kernel, and every
// other word carries its normal form over lex-smaller basic words.
//
// Secondary kernel computation: the same greedy pass over the columns of
// the materialized quantum symmetrizer block.  Both passes are run for
// every total degree up to `verify_through` and the build aborts on any
// disagreement.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/degree.hpp"
#include "nichols/free_element.hpp"
#include "nichols/symmetrizer.hpp"

namespace nichols {

struct cutoff_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeBlock {
  Degree deg;
  std::vector<Word> words;              // lex ascending
  std::map<Word, int> index;
  std::vector<int> basic;               // indices of quotient-basis words
  std::vector<int> basic_pos;           // word idx -> position in `basic`, or -1
  std::vector<std::vector<Cyc>> rows;   // non-basic word idx -> NF over basic words
  int quotient_dim() const { return (int)basic.size(); }
  int kernel_dim() const { return (int)words.size() - (int)basic.size(); }
};

namespace detail_basis {

// Canonical reduction data from per-word image vectors: word j becomes
// basic iff its image is independent of the images of basic words so far.
// For dependent words the expansion over basic words is recorded.  The
// echelon is kept fully reduced (every vector zero at every other pivot,
// pivots normalized to 1) so a single elimination pass suffices.
struct GreedyReducer {
  explicit GreedyReducer(long order) : order_(order) {}

  // returns (is_basic, expansion-over-basic-so-far for dependent words)
  std::pair<bool, std::vector<Cyc>> offer(std::vector<Cyc> image) {
    std::vector<Cyc> combo(nbasic_, Cyc::zero(order_));
    for (std::size_t k = 0; k < ech_.size(); ++k) {
      Cyc factor = image[pivot_[k]];
      if (factor.is_zero()) continue;
      for (std::size_t t = 0; t < image.size(); ++t)
        if (!ech_[k][t].is_zero()) image[t] = image[t] - factor * ech_[k][t];
      for (std::size_t t = 0; t < expr_[k].size(); ++t)
        if (!expr_[k][t].is_zero()) combo[t] = combo[t] + factor * expr_[k][t];
    }
    int piv = -1;
    for (std::size_t t = 0; t < image.size(); ++t)
      if (!image[t].is_zero()) {
        piv = (int)t;
        break;
      }
    if (piv < 0) return {false, std::move(combo)};
    // new basic word: its echelon vector is A(basic) - A(combo), scaled to
    // pivot 1; the expression tracks that combination of basic words
    Cyc inv = image[piv].inverse();
    for (auto& x : image) x = x * inv;
    std::vector<Cyc> expr = std::move(combo);
    for (auto& x : expr) x = -(inv * x);
    expr.resize(nbasic_ + 1, Cyc::zero(order_));
    expr[nbasic_] = inv;
    // back-substitute into the existing echelon
    for (std::size_t k = 0; k < ech_.size(); ++k) {
      Cyc factor = ech_[k][piv];
      if (factor.is_zero()) continue;
      for (std::size_t t = 0; t < image.size(); ++t)
        if (!image[t].is_zero()) ech_[k][t] = ech_[k][t] - factor * image[t];
      expr_[k].resize(expr.size(), Cyc::zero(order_));
      for (std::size_t t = 0; t < expr.size(); ++t)
        if (!expr[t].is_zero()) expr_[k][t] = expr_[k][t] - factor * expr[t];
    }
    ech_.push_back(std::move(image));
    expr_.push_back(std::move(expr));
    pivot_.push_back(piv);
    ++nbasic_;
    return {true, {}};
  }

  long order_;
  std::size_t nbasic_ = 0;
  std::vector<std::vector<Cyc>> ech_;   // fully reduced images
  std::vector<std::vector<Cyc>> expr_;  // the same vectors over basic words
  std::vector<int> pivot_;
};

}  // namespace detail_basis

struct BasisLimits {
  std::size_t max_block_words = 2000000;
  std::size_t max_total_words = 8000000;
};

class NicholsBasis {
 public:
  using Limits = BasisLimits;

  NicholsBasis(const BraidedSpace& v, int cutoff, int verify_through = -1,
               Limits limits = Limits())
      : space_(&v), cutoff_(cutoff) {
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    verified_through_ = verify_through < 0 ? std::min(cutoff, 8) : std::min(verify_through, cutoff);
    build(limits);
  }

  const BraidedSpace& space() const { return *space_; }
  int cutoff() const { return cutoff_; }
  int verified_through() const { return verified_through_; }

  bool has_block(const Degree& d) const { return blocks_.count(d) != 0; }
  const DegreeBlock& block(const Degree& d) const {
    auto it = blocks_.find(d);
    if (it == blocks_.end())
      throw cutoff_error("degree " + deg_display(d) + " is beyond the computed cutoff");
    return it->second;
  }
  const std::map<Degree, DegreeBlock>& blocks() const { return blocks_; }

  // Hilbert coefficients dim B(V)_m for m = 0..cutoff.
  const std::vector<long long>& hilbert() const { return hilbert_; }

  // B(V) is generated in degree one, so a vanishing coefficient certifies
  // that every higher degree vanishes as well.
  std::optional<long long> certified_dimension() const {
    for (int m = 1; m <= cutoff_; ++m) {
      if (hilbert_[m] == 0) {
        long long total = 0;
        for (int t = 0; t < m; ++t) total += hilbert_[t];
        return total;
      }
    }
    return std::nullopt;
  }

  // --- normal forms ---------------------------------------------------

  std::vector<Cyc> word_nf_coords(const Word& w) const {
    const DegreeBlock& b = block(word_degree(w, space_->rank()));
    int idx = b.index.at(w);
    if (b.basic_pos[idx] >= 0) {
      std::vector<Cyc> unit(b.basic.size(), Cyc::zero(space_->order()));
      unit[b.basic_pos[idx]] = Cyc::one(space_->order());
      return unit;
    }
    std::vector<Cyc> row = b.rows[idx];
    row.resize(b.basic.size(), Cyc::zero(space_->order()));
    return row;
  }

  // coordinates of a homogeneous element over the quotient basis at d
  std::vector<Cyc> coords(const Degree& d, const FreeElement& a) const {
    const DegreeBlock& b = block(d);
    std::vector<Cyc> out(b.basic.size(), Cyc::zero(space_->order()));
    for (const auto& [w, c] : a.terms()) {
      int idx = b.index.at(w);
      if (b.basic_pos[idx] >= 0) {
        out[b.basic_pos[idx]] = out[b.basic_pos[idx]] + c;
      } else {
        const std::vector<Cyc>& row = b.rows[idx];
        for (std::size_t k = 0; k < row.size(); ++k)
          if (!row[k].is_zero()) out[k] = out[k] + c * row[k];
      }
    }
    return out;
  }

  FreeElement element_from_coords(const Degree& d, const std::vector<Cyc>& coords) const {
    const DegreeBlock& b = block(d);
    FreeElement e(*space_);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) e.add_term(b.words[b.basic[k]], coords[k]);
    return e;
  }

  FreeElement normal_form(const FreeElement& a) const {
    FreeElement out(*space_);
    for (const auto& [w, c] : a.terms()) {
      if (w.empty()) {
        out.add_term(w, c);  // constants pass through
        continue;
      }
      Degree d = word_degree(w, space_->rank());
      if (deg_total(d) > cutoff_)
        throw cutoff_error("normal_form: degree " + deg_display(d) + " beyond cutoff");
      const DegreeBlock& b = block(d);
      int idx = b.index.at(w);
      if (b.basic_pos[idx] >= 0) {
        out.add_term(w, c);
      } else {
        const std::vector<Cyc>& row = b.rows[idx];
        for (std::size_t k = 0; k < row.size(); ++k)
          if (!row[k].is_zero()) out.add_term(b.words[b.basic[k]], c * row[k]);
      }
    }
    return out;
  }

  bool is_zero_in_quotient(const FreeElement& a) const { return normal_form(a).is_zero(); }

  // product of quotient-coordinate vectors; concatenations of basic words
  // are reduced through the degree-(d1+d2) block
  std::vector<Cyc> product_coords(const Degree& d1, const std::vector<Cyc>& a,
                                  const Degree& d2, const std::vector<Cyc>& b) const {
    const DegreeBlock& b1 = block(d1);
    const DegreeBlock& b2 = block(d2);
    Degree d = deg_add(d1, d2);
    const DegreeBlock& bt = block(d);
    std::vector<Cyc> out(bt.basic.size(), Cyc::zero(space_->order()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        Cyc c = a[i] * b[j];
        Word w = b1.words[b1.basic[i]] + b2.words[b2.basic[j]];
        int idx = bt.index.at(w);
        if (bt.basic_pos[idx] >= 0) {
          out[bt.basic_pos[idx]] = out[bt.basic_pos[idx]] + c;
        } else {
          const std::vector<Cyc>& row = bt.rows[idx];
          for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) out[k] = out[k] + c * row[k];
        }
      }
    }
    return out;
  }

  // the kernel at degree d as echelonized vectors (pivot word + expansion)
  std::vector<FreeElement> kernel_vectors(const Degree& d) const {
    const DegreeBlock& b = block(d);
    std::vector<FreeElement> out;
    for (std::size_t idx = 0; idx < b.words.size(); ++idx) {
      if (b.basic_pos[idx] >= 0) continue;
      FreeElement e = FreeElement::from_word(*space_, b.words[idx]);
      const std::vector<Cyc>& row = b.rows[idx];
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!row[k].is_zero()) e.add_term(b.words[b.basic[k]], -row[k]);
      out.push_back(std::move(e));
    }
    return out;
  }

 private:
  void build(const Limits& limits) {
    const BraidedSpace& v = *space_;
    hilbert_.assign(cutoff_ + 1, 0);
    hilbert_[0] = 1;
    SymmetrizerLevels sym(v);
    std::size_t total_words = 0;
    for (int m = 1; m <= cutoff_; ++m) {
      bool verify = m <= verified_through_ && m >= 2;
      if (verify) {
        if (sym.level() == 0)
          while (sym.level() < m - 1) sym.advance();
        sym.advance();
      }
      for (const Degree& d : degrees_of_total(m)) {
        DegreeBlock b = build_block(d, limits, total_words);
        if (verify) verify_block(b, sym.blocks().at(d));
        hilbert_[m] += b.quotient_dim();
        blocks_.emplace(d, std::move(b));
      }
      if (m == verified_through_) sym = SymmetrizerLevels(v);  // free the matrices
    }
  }

  DegreeBlock build_block(const Degree& d, const Limits& limits, std::size_t& total_words) {
    const BraidedSpace& v = *space_;
    DegreeBlock b;
    b.deg = d;
    b.words = words_of_degree(d);
    if (b.words.size() > limits.max_block_words)
      throw resource_error("degree block " + deg_display(d) + " has " +
                           std::to_string(b.words.size()) + " words; limit exceeded");
    total_words += b.words.size();
    if (total_words > limits.max_total_words)
      throw resource_error("total word count exceeds limit at degree " + deg_display(d));
    for (std::size_t i = 0; i < b.words.size(); ++i) b.index.emplace(b.words[i], (int)i);
    b.basic_pos.assign(b.words.size(), -1);
    b.rows.assign(b.words.size(), {});

    int m = deg_total(d);
    if (m == 1) {
      b.basic.push_back(0);
      b.basic_pos[0] = 0;
      return b;
    }

    // image dimension: one slot per basic word of each derivative block
    std::vector<int> offset(v.rank() + 1, 0);
    std::vector<const DegreeBlock*> sub(v.rank() + 1, nullptr);
    int image_dim = 0;
    for (int i = 1; i <= v.rank(); ++i) {
      if (d[i - 1] == 0) continue;
      Degree dd = d;
      --dd[i - 1];
      sub[i] = &blocks_.at(dd);
      offset[i] = image_dim;
      image_dim += sub[i]->quotient_dim();
    }

    detail_basis::GreedyReducer reducer(v.order());
    for (std::size_t j = 0; j < b.words.size(); ++j) {
      const Word& w = b.words[j];
      std::vector<Cyc> image(image_dim, Cyc::zero(v.order()));
      Degree prefix = zero_degree(v.rank());
      for (std::size_t t = 0; t < w.size(); ++t) {
        int i = (unsigned char)w[t];
        Cyc c = v.chi_inv(unit_degree(v.rank(), i), prefix);
        Word rest = w.substr(0, t) + w.substr(t + 1);
        const DegreeBlock& s = *sub[i];
        int ridx = s.index.at(rest);
        if (s.basic_pos[ridx] >= 0) {
          int slot = offset[i] + s.basic_pos[ridx];
          image[slot] = image[slot] + c;
        } else {
          const std::vector<Cyc>& row = s.rows[ridx];
          for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) image[offset[i] + k] = image[offset[i] + k] + c * row[k];
        }
        ++prefix[i - 1];
      }
      auto [is_basic, combo] = reducer.offer(std::move(image));
      if (is_basic) {
        b.basic_pos[j] = (int)b.basic.size();
        b.basic.push_back((int)j);
      } else {
        b.rows[j] = std::move(combo);
      }
    }
    for (std::size_t j = 0; j < b.words.size(); ++j)
      if (b.basic_pos[j] < 0) b.rows[j].resize(b.basic.size(), Cyc::zero(v.order()));
    return b;
  }

  // the same greedy pass over symmetrizer columns must reproduce the
  // radical's reduction data exactly
  void verify_block(const DegreeBlock& b, const SymmetrizerBlock& s) const {
    detail_basis::GreedyReducer reducer(space_->order());
    for (std::size_t j = 0; j < s.words.size(); ++j) {
      auto [is_basic, combo] = reducer.offer(s.cols[j]);
      bool radical_basic = b.basic_pos[j] >= 0;
      if (is_basic != radical_basic)
        throw std::logic_error("kernel cross-validation failed at degree " +
                               deg_display(b.deg) + ", word " + word_display(b.words[j]) +
                               ": symmetrizer and derivation kernels disagree");
      if (!is_basic) {
        combo.resize(b.basic.size(), Cyc::zero(space_->order()));
        if (combo != b.rows[j])
          throw std::logic_error("kernel cross-validation failed at degree " +
                                 deg_display(b.deg) + ", word " + word_display(b.words[j]) +
                                 ": normal forms disagree");
      }
    }
  }

  std::vector<Degree> degrees_of_total(int m) const {
    std::vector<Degree> out;
    Degree d(space_->rank(), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == space_->rank() - 1) {
        d[pos] = left;
        out.push_back(d);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        d[pos] = k;
        rec(pos + 1, left - k);
      }
    };
    rec(0, m);
    return out;
  }

  const BraidedSpace* space_;
  int cutoff_;
  int verified_through_;
  std::map<Degree, DegreeBlock> blocks_;
  std::vector<long long> hilbert_;
};

}  // namespace nichols
