#pragma once

// Braided vector spaces of diagonal type: braiding matrix (q_ij), the
// bicharacter chi on the degree lattice Z^n, generalized Dynkin diagram,
// connectivity, twist symmetrization and Cartan-type detection.
//
// chi(a, b) = prod_{i,j} q_ij^(a_i b_j); this is the pairing p_{uv} =
// chi(deg u, deg v) used by every bracket and identity downstream.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "nichols/cartan_matrix.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/degree.hpp"

namespace nichols {

class BraidedSpace {
 public:
  BraidedSpace(long order, std::vector<std::vector<Cyc>> q)
      : order_(order), q_(std::move(q)) {
    n_ = (int)q_.size();
    for (const auto& row : q_) {
      if ((int)row.size() != n_) throw std::invalid_argument("braiding matrix must be square");
      for (const auto& e : row)
        if (e.is_zero()) throw std::invalid_argument("braiding matrix entries must be nonzero");
    }
    qinv_.resize(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) qinv_[i].push_back(q_[i][j].inverse());
    init_unit_exponents();
  }

  int rank() const { return n_; }
  long order() const { return order_; }
  const Cyc& q(int i, int j) const { return q_.at(i - 1).at(j - 1); }
  const Cyc& q_inv(int i, int j) const { return qinv_.at(i - 1).at(j - 1); }
  const std::vector<std::vector<Cyc>>& matrix() const { return q_; }

  // chi(a, b); exponents may be negative (inverses of the q_ij).
  Cyc chi(const Degree& a, const Degree& b) const {
    if ((int)a.size() != n_ || (int)b.size() != n_)
      throw std::invalid_argument("degree rank mismatch");
    if (unit_exponents_) {
      long e = 0;
      for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
          if (b[j] == 0) continue;
          e += ((texp_[i][j] * (long)a[i]) % root_count_) * b[j] % root_count_;
        }
      }
      e %= root_count_;
      if (e < 0) e += root_count_;
      return root_powers_[(std::size_t)e];
    }
    Cyc r = Cyc::one(order_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        long e = (long)a[i] * b[j];
        if (e != 0) r = r * q_[i][j].pow(e);
      }
    return r;
  }

  Cyc chi_inv(const Degree& a, const Degree& b) const {
    Degree na = a;
    for (auto& x : na) x = -x;
    return chi(na, b);
  }

  bool roots_of_unity() const { return unit_exponents_; }

 private:
  void init_unit_exponents() {
    // If every q_ij is a power of zeta_L with L = lcm(2, M), chi reduces
    // to modular integer arithmetic plus one table lookup.
    root_count_ = lcm_long(2, order_);
    root_powers_.clear();
    root_powers_.reserve(root_count_);
    // zeta_L inside Q(zeta_M): M even gives zeta_M itself, M odd gives
    // -zeta_M^((M+1)/2) (a primitive 2M-th root).
    Cyc zl = root_count_ == order_
                 ? Cyc::zeta(order_)
                 : -Cyc::zeta(order_).pow((order_ + 1) / 2);
    Cyc p = Cyc::one(order_);
    for (long k = 0; k < root_count_; ++k) {
      root_powers_.push_back(p);
      p = p * zl;
    }
    texp_.assign(n_, std::vector<long>(n_, 0));
    unit_exponents_ = true;
    for (int i = 0; i < n_ && unit_exponents_; ++i)
      for (int j = 0; j < n_ && unit_exponents_; ++j) {
        bool found = false;
        for (long k = 0; k < root_count_; ++k)
          if (root_powers_[(std::size_t)k] == q_[i][j]) {
            texp_[i][j] = k;
            found = true;
            break;
          }
        if (!found) unit_exponents_ = false;
      }
    if (!unit_exponents_) {
      root_powers_.clear();
      texp_.clear();
    }
  }

  long order_;
  int n_ = 0;
  std::vector<std::vector<Cyc>> q_;
  std::vector<std::vector<Cyc>> qinv_;
  bool unit_exponents_ = false;
  long root_count_ = 0;
  std::vector<Cyc> root_powers_;
  std::vector<std::vector<long>> texp_;
};

struct DynkinData {
  std::vector<Cyc> vertex_labels;                 // q_ii
  std::map<std::pair<int, int>, Cyc> edge_labels; // {i<j} -> q_ij q_ji (!= 1 only)
  int edge_count() const { return (int)edge_labels.size(); }
};

inline DynkinData dynkin(const BraidedSpace& v) {
  DynkinData d;
  for (int i = 1; i <= v.rank(); ++i) d.vertex_labels.push_back(v.q(i, i));
  Cyc one = Cyc::one(v.order());
  for (int i = 1; i <= v.rank(); ++i)
    for (int j = i + 1; j <= v.rank(); ++j) {
      Cyc prod = v.q(i, j) * v.q(j, i);
      if (prod != one) d.edge_labels.emplace(std::make_pair(i, j), prod);
    }
  return d;
}

// Connected components of the Dynkin graph (1-based vertex lists).
inline std::vector<std::vector<int>> connected_components(const BraidedSpace& v) {
  DynkinData d = dynkin(v);
  int n = v.rank();
  std::vector<int> comp(n + 1, 0);
  int ncomp = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s]) continue;
    ++ncomp;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [e, lbl] : d.edge_labels) {
        int other = -1;
        if (e.first == x) other = e.second;
        if (e.second == x) other = e.first;
        if (other > 0 && !comp[other]) {
          comp[other] = ncomp;
          stack.push_back(other);
        }
      }
    }
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int i = 1; i <= n; ++i) out[comp[i] - 1].push_back(i);
  return out;
}

inline BraidedSpace induced_subspace(const BraidedSpace& v, const std::vector<int>& vertices) {
  std::vector<std::vector<Cyc>> q;
  for (int i : vertices) {
    std::vector<Cyc> row;
    for (int j : vertices) row.push_back(v.q(i, j));
    q.push_back(row);
  }
  return BraidedSpace(v.order(), std::move(q));
}

// Twist symmetrization: q'_ii = q_ii and q'_ij = q'_ji = sqrt(q_ij q_ji)
// for i != j; preserves all products q_ij q_ji and all vertex labels.
inline BraidedSpace twist_symmetrize(const BraidedSpace& v) {
  int n = v.rank();
  std::vector<std::vector<Cyc>> entries(n, std::vector<Cyc>(n));
  long common = v.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        entries[i - 1][j - 1] = v.q(i, i);
      } else if (i < j) {
        Cyc prod = v.q(i, j) * v.q(j, i);
        if (!prod.mult_order())
          throw std::invalid_argument("twist_symmetrize requires root-of-unity entries");
        Cyc s = prod.sqrt_root_of_unity();
        entries[i - 1][j - 1] = s;
        entries[j - 1][i - 1] = s;
        common = lcm_long(common, s.order());
      }
    }
  for (auto& row : entries)
    for (auto& e : row) e = e.promoted(common);
  return BraidedSpace(common, std::move(entries));
}

// Cartan-type detection: a_ii = 2 and for i != j the largest a_ij in
// {0,-1,-2,-3} with q_ij q_ji = q_ii^(a_ij), where a_ij = 0 iff
// q_ij q_ji = 1.  Absent when no exponent fits or the matrix is not of
// finite type.
inline std::optional<IntMatrix> cartan_detect(const BraidedSpace& v) {
  int n = v.rank();
  IntMatrix a(n, std::vector<int>(n, 0));
  Cyc one = Cyc::one(v.order());
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Cyc prod = v.q(i, j) * v.q(j, i);
      if (prod == one) {
        a[i - 1][j - 1] = 0;
        continue;
      }
      int found = 1;
      for (int e = -1; e >= -3; --e) {
        if (v.q(i, i).pow(e) == prod) {
          found = e;
          break;
        }
      }
      if (found == 1) return std::nullopt;
      a[i - 1][j - 1] = found;
    }
  if (!is_finite_type(a)) return std::nullopt;
  return a;
}

}  // namespace nichols
