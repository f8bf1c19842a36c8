#pragma once

// Combinatorics on words over the alphabet {1..n}.
//
// A Word stores its letters as raw char values 1..n, so std::string's
// lexicographic order is exactly the word order with x_1 < ... < x_n and a
// proper prefix smaller than its extensions.

#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

using Letter = unsigned char;
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back((char)l);
  return w;
}

inline std::string word_display(const Word& w) {
  bool digits = true;
  for (char c : w)
    if ((unsigned char)c > 9) digits = false;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) out += ",";
    out += std::to_string((int)(unsigned char)w[i]);
  }
  return out;
}

inline Word word_from_display(const std::string& s) {
  Word w;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad word literal: " + s);
      w.push_back((char)(c - '0'));
    }
  } else {
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      w.push_back((char)std::stoi(s.substr(i, j - i)));
      i = j + 1;
    }
  }
  return w;
}

inline bool lex_less(const Word& u, const Word& v) { return u < v; }

// Def: u is Lyndon iff |u| = 1, or u < u2 u1 for every nontrivial split
// u = u1 u2.
inline bool is_lyndon(const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_lyndon: empty word");
  if (u.size() == 1) return true;
  for (std::size_t p = 1; p < u.size(); ++p) {
    Word rotated = u.substr(p) + u.substr(0, p);
    if (!(u < rotated)) return false;
  }
  return true;
}

// Duval's factorization: the unique nonincreasing product of Lyndon words.
inline std::vector<Word> lyndon_factorization(const Word& u) {
  if (u.empty()) throw std::invalid_argument("lyndon_factorization: empty word");
  std::vector<Word> factors;
  std::size_t i = 0, n = u.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && u[k] <= u[j]) {
      if (u[k] < u[j])
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      factors.push_back(u.substr(i, j - k));
      i += j - k;
    }
  }
  return factors;
}

// Shirshov split of a Lyndon word of length >= 2: u = v w with v, w Lyndon
// and v shortest.  Equivalently w is the longest proper Lyndon suffix.
inline std::pair<Word, Word> shirshov_decomposition(const Word& u) {
  if (u.size() < 2 || !is_lyndon(u))
    throw std::invalid_argument("shirshov_decomposition: input must be Lyndon of length >= 2");
  for (std::size_t p = 1; p < u.size(); ++p) {
    Word v = u.substr(0, p), w = u.substr(p);
    if (is_lyndon(v) && is_lyndon(w)) return {v, w};
  }
  throw std::logic_error("shirshov_decomposition: no split found");
}

// All Lyndon words over {1..n} of length <= max_len, in lex order
// (Duval's successor generation).
inline std::vector<Word> enumerate_lyndon(int n, int max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_lyndon: max_len >= 1 required");
  std::vector<Word> out;
  Word w(1, (char)1);
  while (!w.empty()) {
    if ((int)w.size() <= max_len) out.push_back(w);
    // periodic extension to max_len, then increment the last non-maximal letter
    Word t;
    t.reserve(max_len);
    for (int i = 0; i < max_len; ++i) t.push_back(w[i % w.size()]);
    while (!t.empty() && (unsigned char)t.back() == (unsigned char)n) t.pop_back();
    if (!t.empty()) t.back() = (char)((unsigned char)t.back() + 1);
    w = std::move(t);
  }
  return out;
}

}  // namespace nichols
