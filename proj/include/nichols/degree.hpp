#pragma once

// Z^n degree lattice helpers.  Degrees of words are componentwise
// nonnegative; negated degrees only show up in reports.

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/words.hpp"

namespace nichols {

using Degree = std::vector<int>;

inline Degree zero_degree(int n) { return Degree(n, 0); }

inline Degree unit_degree(int n, int i) {
  Degree d(n, 0);
  d.at(i - 1) = 1;
  return d;
}

inline Degree word_degree(const Word& w, int n) {
  Degree d(n, 0);
  for (char c : w) {
    int l = (unsigned char)c;
    if (l < 1 || l > n) throw std::invalid_argument("letter out of range");
    ++d[l - 1];
  }
  return d;
}

inline Degree deg_add(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Degree deg_sub(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Degree deg_scale(int k, const Degree& a) {
  Degree r = a;
  for (auto& x : r) x *= k;
  return r;
}

inline int deg_total(const Degree& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline bool deg_leq(const Degree& a, const Degree& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool deg_nonneg(const Degree& a) {
  for (int x : a)
    if (x < 0) return false;
  return true;
}

inline std::string deg_display(const Degree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

// All words with the given letter multiplicities, in lex order.
inline std::vector<Word> words_of_degree(const Degree& d) {
  std::vector<Word> out;
  int total = deg_total(d);
  Word cur;
  cur.reserve(total);
  Degree left = d;
  // lexicographic DFS: smaller letters tried first
  std::vector<int> stack_letter;
  std::function<void()> rec = [&]() {
    if ((int)cur.size() == total) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back((char)(i + 1));
      rec();
      cur.pop_back();
      ++left[i];
    }
  };
  rec();
  return out;
}

}  // namespace nichols
