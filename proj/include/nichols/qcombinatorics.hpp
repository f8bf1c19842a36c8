#pragma once

// q-integers and q-factorials over an exact scalar type:
//   (k)_q  = 1 + q + ... + q^(k-1)
//   (k)_q! = (1)_q (2)_q ... (k)_q,  (0)_q! = 1

#include "nichols/cyclotomic.hpp"

namespace nichols {

inline Cyc q_int(long k, const Cyc& q) {
  Cyc sum = Cyc::zero(q.order());
  Cyc p = Cyc::one(q.order());
  for (long t = 0; t < k; ++t) {
    sum = sum + p;
    p = p * q;
  }
  return sum;
}

inline Cyc q_factorial(long k, const Cyc& q) {
  Cyc prod = Cyc::one(q.order());
  for (long t = 1; t <= k; ++t) prod = prod * q_int(t, q);
  return prod;
}

}  // namespace nichols
