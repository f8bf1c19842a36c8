#pragma once

// Incremental echelonized span of exact coordinate vectors.  Kept fully
// reduced (each stored vector has pivot 1 and zeros at the other pivots),
// so membership testing is a single elimination pass.

#include <vector>

#include "nichols/cyclotomic.hpp"

namespace nichols {

class Echelon {
 public:
  explicit Echelon(long order) : order_(order) {}

  std::size_t dim() const { return vecs_.size(); }
  const std::vector<std::vector<Cyc>>& vectors() const { return vecs_; }

  std::vector<Cyc> reduce(std::vector<Cyc> v) const {
    for (std::size_t k = 0; k < vecs_.size(); ++k) {
      Cyc factor = v[pivots_[k]];
      if (factor.is_zero()) continue;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!vecs_[k][t].is_zero()) v[t] = v[t] - factor * vecs_[k][t];
    }
    return v;
  }

  bool contains(const std::vector<Cyc>& v) const {
    std::vector<Cyc> r = reduce(v);
    for (const Cyc& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  // returns true if the span grew
  bool insert(std::vector<Cyc> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (!v[t].is_zero()) {
        piv = (int)t;
        break;
      }
    if (piv < 0) return false;
    Cyc inv = v[piv].inverse();
    for (auto& x : v) x = x * inv;
    for (std::size_t k = 0; k < vecs_.size(); ++k) {
      Cyc factor = vecs_[k][piv];
      if (factor.is_zero()) continue;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero()) vecs_[k][t] = vecs_[k][t] - factor * v[t];
    }
    vecs_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  long order_;
  std::vector<std::vector<Cyc>> vecs_;
  std::vector<int> pivots_;
};

}  // namespace nichols
