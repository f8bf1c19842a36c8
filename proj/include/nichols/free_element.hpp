#pragma once

// The graded free algebra T(V) over a braided space: sparse elements keyed
// by word, concatenation product, the three bracket flavors
//
//   [x, y]     = yx - p_{yx} xy      (std)
//   [x, y]^-   = xy - yx             (minus)
//   [x, y]_c   = xy - p_{xy} yx      (c)
//
// extended bilinearly over Z^n-homogeneous components, the recursive
// bracketing of words through Shirshov decompositions, the skew
// derivations y_i with Leibniz rule
//
//   <y_i, uv> = <y_i, u> v + chi(e_i, deg u)^{-1} u <y_i, v>,
//
// and the braided Jacobi residual.

#include <map>
#include <stdexcept>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/degree.hpp"
#include "nichols/words.hpp"

namespace nichols {

enum class Flavor { Std, Minus, C };

class FreeElement {
 public:
  explicit FreeElement(const BraidedSpace& space) : space_(&space) {}

  static FreeElement generator(const BraidedSpace& space, int i) {
    FreeElement e(space);
    e.add_term(Word(1, (char)i), Cyc::one(space.order()));
    return e;
  }
  static FreeElement from_word(const BraidedSpace& space, const Word& w) {
    FreeElement e(space);
    e.add_term(w, Cyc::one(space.order()));
    return e;
  }

  const BraidedSpace& space() const { return *space_; }
  const std::map<Word, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    a.check_same_space(b);
    FreeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    a.check_same_space(b);
    FreeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
  }
  FreeElement operator-() const {
    FreeElement r(*space_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend FreeElement operator*(const Cyc& s, const FreeElement& a) {
    FreeElement r(*a.space_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
    return r;
  }

  // concatenation product, extended bilinearly
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    a.check_same_space(b);
    FreeElement r(*a.space_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
  }

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  std::map<Degree, FreeElement> homogeneous_components() const {
    std::map<Degree, FreeElement> out;
    for (const auto& [w, c] : terms_) {
      Degree d = word_degree(w, space_->rank());
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, FreeElement(*space_)).first;
      it->second.add_term(w, c);
    }
    return out;
  }

  bool is_homogeneous() const {
    return terms_.empty() || homogeneous_components().size() == 1;
  }
  Degree degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of zero element");
    Degree d = word_degree(terms_.begin()->first, space_->rank());
    for (const auto& [w, c] : terms_)
      if (word_degree(w, space_->rank()) != d)
        throw std::invalid_argument("element is not homogeneous");
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + word_display(w);
    }
    return out;
  }

 private:
  void check_same_space(const FreeElement& other) const {
    if (space_ != other.space_)
      throw std::invalid_argument("elements live in different braided spaces");
  }

  const BraidedSpace* space_;
  std::map<Word, Cyc> terms_;
};

// Bracket of homogeneous elements; bilinear extension over components.
inline FreeElement bracket(const FreeElement& a, const FreeElement& b, Flavor flavor) {
  const BraidedSpace& v = a.space();
  FreeElement r(v);
  for (const auto& [da, xa] : a.homogeneous_components()) {
    for (const auto& [db, xb] : b.homogeneous_components()) {
      switch (flavor) {
        case Flavor::Std:
          // [x, y] = yx - p_{yx} xy
          r = r + (xb * xa - v.chi(db, da) * (xa * xb));
          break;
        case Flavor::Minus:
          r = r + (xa * xb - xb * xa);
          break;
        case Flavor::C:
          // [x, y]_c = xy - p_{xy} yx
          r = r + (xa * xb - v.chi(da, db) * (xb * xa));
          break;
      }
    }
  }
  return r;
}

// Word bracketing: letters map to generators; a Lyndon word u = vw
// (Shirshov) maps to [w][v] - p_{wv}[v][w] for the std flavor and to
// [w]^-[v]^- - [v]^-[w]^- for the minus flavor; a general word brackets
// its nonincreasing Lyndon factors left-nested.
inline FreeElement bracketing(const BraidedSpace& v, const Word& u, Flavor flavor = Flavor::Std) {
  if (u.empty()) throw std::invalid_argument("bracketing: empty word");
  if (flavor == Flavor::C)
    throw std::invalid_argument("bracketing is defined for the std and minus flavors");
  if (u.size() == 1) return FreeElement::generator(v, (unsigned char)u[0]);
  if (is_lyndon(u)) {
    auto [left, right] = shirshov_decomposition(u);
    FreeElement bl = bracketing(v, left, flavor);
    FreeElement br = bracketing(v, right, flavor);
    if (flavor == Flavor::Minus) return br * bl - bl * br;
    return bracket(bl, br, Flavor::Std);
  }
  std::vector<Word> factors = lyndon_factorization(u);
  FreeElement acc = bracketing(v, factors[0], flavor);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    FreeElement next = bracketing(v, factors[i], flavor);
    acc = flavor == Flavor::Minus ? (acc * next - next * acc)
                                  : bracket(acc, next, flavor);
  }
  return acc;
}

// Skew derivation <y_i, .>; on a word it removes one occurrence of the
// letter i at a time, weighting by the inverse bicharacter of the prefix.
inline FreeElement skew_derivation(const BraidedSpace& v, int i, const FreeElement& a) {
  FreeElement r(v);
  Degree ei = unit_degree(v.rank(), i);
  for (const auto& [w, c] : a.terms()) {
    Degree prefix = zero_degree(v.rank());
    for (std::size_t t = 0; t < w.size(); ++t) {
      int letter = (unsigned char)w[t];
      if (letter == i) {
        Word rest = w.substr(0, t) + w.substr(t + 1);
        r.add_term(rest, c * v.chi_inv(ei, prefix));
      }
      ++prefix[letter - 1];
    }
  }
  return r;
}

// Braided Jacobi residual, identically zero in T(V):
//   [[u,v],w] - [u,[v,w]] - p_{vw}^{-1} [[u,w],v] - (p_{wv} - p_{vw}^{-1}) v [u,w]
// in the default bracket [x,y] = yx - p_{yx} xy.
inline FreeElement jacobi_residual(const FreeElement& u, const FreeElement& v,
                                   const FreeElement& w) {
  const BraidedSpace& sp = u.space();
  if (u.is_zero() || v.is_zero() || w.is_zero()) return FreeElement(sp);
  Degree dv = v.degree(), dw = w.degree();
  Cyc pvw = sp.chi(dv, dw);
  Cyc pwv = sp.chi(dw, dv);
  Cyc pvw_inv = pvw.inverse();
  FreeElement lhs = bracket(bracket(u, v, Flavor::Std), w, Flavor::Std);
  FreeElement rhs = bracket(u, bracket(v, w, Flavor::Std), Flavor::Std) +
                    pvw_inv * bracket(bracket(u, w, Flavor::Std), v, Flavor::Std) +
                    (pwv - pvw_inv) * (v * bracket(u, w, Flavor::Std));
  return lhs - rhs;
}

// l_u(x) = [u, x] and r_u(x) = [x, u] in the std bracket.
inline FreeElement l_op(const FreeElement& u, const FreeElement& x) {
  return bracket(u, x, Flavor::Std);
}
inline FreeElement r_op(const FreeElement& u, const FreeElement& x) {
  return bracket(x, u, Flavor::Std);
}

}  // namespace nichols
