#pragma once

// Quantum symmetrizer maps S_m, materialized per Z^n-degree block (S_m
// preserves the Z^n-degree, so the full degree-m matrix is block diagonal
// over multidegrees).
//
//   S_{1,j} = id + C12^-1 + C12^-1 C23^-1 + ... + C12^-1 ... C_{j,j+1}^-1
//   S_m     = prod_{j=1..m-1} (id^(m-j-1) (x) S_{1,j})
//
// with C^-1(x_a (x) x_b) = q_{ba}^-1 x_b (x) x_a and operator products
// composing right to left.  The product telescopes to
// S_m = (id (x) S_{m-1}) o S_{1,m-1}, which is how blocks at total degree
// m are assembled from the blocks one degree lower: the k-th term of
// S_{1,m-1} moves the (k+1)-st letter to the front, picking up the
// factors q_{w_{k+1}, w_s}^{-1} for s = 1..k along the way.

#include <map>
#include <stdexcept>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/degree.hpp"
#include "nichols/free_element.hpp"

namespace nichols {

struct SymmetrizerBlock {
  Degree deg;
  std::vector<Word> words;              // lex ascending
  std::map<Word, int> index;
  std::vector<std::vector<Cyc>> cols;   // cols[j][i]: coeff of words[i] in S(words[j])
};

// Builds the S_m blocks level by level, holding only the current level.
class SymmetrizerLevels {
 public:
  explicit SymmetrizerLevels(const BraidedSpace& v) : v_(&v) {}

  int level() const { return level_; }
  const std::map<Degree, SymmetrizerBlock>& blocks() const { return cur_; }

  const std::map<Degree, SymmetrizerBlock>& advance() {
    int m = level_ + 1;
    std::map<Degree, SymmetrizerBlock> next;
    for (const Degree& d : degrees_of_total(m)) {
      SymmetrizerBlock b;
      b.deg = d;
      b.words = words_of_degree(d);
      for (std::size_t i = 0; i < b.words.size(); ++i) b.index.emplace(b.words[i], (int)i);
      std::size_t nw = b.words.size();
      b.cols.assign(nw, {});
      for (std::size_t j = 0; j < nw; ++j) {
        std::vector<Cyc> col(nw, Cyc::zero(v_->order()));
        if (m == 1) {
          col[j] = Cyc::one(v_->order());
        } else {
          const Word& w = b.words[j];
          // S_{1,m-1}: the k-th term moves w[k] to the front
          for (int k = 0; k < m; ++k) {
            Word shuffled;
            Cyc scale = Cyc::one(v_->order());
            if (k == 0) {
              shuffled = w;
            } else {
              for (int s = 0; s < k; ++s)
                scale = scale * v_->q_inv((unsigned char)w[k], (unsigned char)w[s]);
              shuffled = w.substr(k, 1) + w.substr(0, k) + w.substr(k + 1);
            }
            // apply id (x) S_{m-1} to `shuffled`
            int a = (unsigned char)shuffled[0];
            Word rest = shuffled.substr(1);
            const SymmetrizerBlock& sub = cur_.at(word_degree(rest, v_->rank()));
            const std::vector<Cyc>& subcol = sub.cols[sub.index.at(rest)];
            for (std::size_t i2 = 0; i2 < subcol.size(); ++i2) {
              if (subcol[i2].is_zero()) continue;
              int target = b.index.at((char)a + sub.words[i2]);
              col[target] = col[target] + scale * subcol[i2];
            }
          }
        }
        b.cols[j] = std::move(col);
      }
      next.emplace(d, std::move(b));
    }
    cur_ = std::move(next);
    level_ = m;
    return cur_;
  }

  std::vector<Degree> degrees_of_total(int m) const {
    std::vector<Degree> out;
    Degree d(v_->rank(), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == v_->rank() - 1) {
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

 private:
  const BraidedSpace* v_;
  int level_ = 0;
  std::map<Degree, SymmetrizerBlock> cur_;
};

// One-shot block for callers that want S_m at a single degree.
inline SymmetrizerBlock symmetrizer_block(const BraidedSpace& v, const Degree& d) {
  SymmetrizerLevels levels(v);
  int m = deg_total(d);
  for (int t = 0; t < m; ++t) levels.advance();
  return levels.blocks().at(d);
}

// Apply S_m to a homogeneous element (test convenience).
inline FreeElement apply_symmetrizer(const BraidedSpace& v, const FreeElement& a) {
  if (a.is_zero()) return a;
  Degree d = a.degree();
  SymmetrizerBlock b = symmetrizer_block(v, d);
  FreeElement out(v);
  for (const auto& [w, c] : a.terms()) {
    const std::vector<Cyc>& col = b.cols[b.index.at(w)];
    for (std::size_t i = 0; i < col.size(); ++i) out.add_term(b.words[i], c * col[i]);
  }
  return out;
}

}  // namespace nichols
