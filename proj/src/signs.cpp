#include "tpcone/signs.hpp"

#include <cmath>

#include "tpcone/errors.hpp"

namespace tpcone {

SignVariation sign_variation(const Vec& x, double tol) {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw InputError("sign_variation of empty vector");
  const double thr = zero_threshold(max_abs(x), tol);

  SignVariation sv;

  // s_minus: linear scan with zeros discarded.
  int last = 0;
  for (double v : x) {
    const int s = tolerant_sign(v, thr);
    if (s == 0) continue;
    if (last != 0 && s != last) ++sv.s_minus;
    last = s;
  }

  // s_plus: dynamic programming over the sign taken by the last emitted
  // entry. best[s] = max changes so far ending on sign s (0 -> -1, 1 -> +1).
  constexpr int kNone = -1;
  int best[2] = {kNone, kNone};
  bool started = false;
  for (double v : x) {
    const int s = tolerant_sign(v, thr);
    if (!started) {
      if (s == 0) {
        best[0] = best[1] = 0;
      } else {
        best[(s + 1) / 2] = 0;
      }
      started = true;
      continue;
    }
    int next[2] = {kNone, kNone};
    for (int cur = 0; cur < 2; ++cur) {
      if (s != 0 && cur != (s + 1) / 2) continue;  // nonzero entry fixes the sign
      int bestHere = kNone;
      if (best[cur] != kNone) bestHere = best[cur];
      const int other = 1 - cur;
      if (best[other] != kNone) bestHere = std::max(bestHere, best[other] + 1);
      next[cur] = bestHere;
    }
    best[0] = next[0];
    best[1] = next[1];
  }
  sv.s_plus = std::max(best[0], best[1]);
  return sv;
}

Region m_membership(const Vec& x, int j, double tol) {
  const int n = static_cast<int>(x.size());
  if (j < 1 || j > n) throw InputError("m_membership order out of range");
  const double thr = zero_threshold(max_abs(x), tol);
  bool all_zero = true;
  for (double v : x)
    if (tolerant_sign(v, thr) != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return Region::boundary;
  const SignVariation sv = sign_variation(x, tol);
  if (sv.s_plus <= j - 1) return Region::interior;
  if (sv.s_minus > j - 1) return Region::outside;
  return Region::boundary;
}

}  // namespace tpcone
