#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace tpcone {

using Vec = std::vector<double>;

// Default scale-aware comparison tolerance used across the library.
inline constexpr double kDefaultTol = 1e-9;

// Looser default for eigenvalue simplicity / ratio checks; eigenvalue
// perturbation is worse-conditioned than entrywise arithmetic.
inline constexpr double kEigenTol = 1e-7;

inline constexpr std::uint64_t kDefaultSeed = 0;

// Position of a point relative to a closed set with nonempty interior.
enum class Region { outside, boundary, interior };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::outside: return "outside";
    case Region::boundary: return "boundary";
    default: return "interior";
  }
}

// Threshold below which a value counts as zero, relative to a set's scale.
inline double zero_threshold(double scale, double tol = kDefaultTol) {
  return tol * std::max(1.0, scale);
}

// -1 / 0 / +1 with a dead zone of +-threshold around zero.
inline int tolerant_sign(double v, double threshold) {
  if (v > threshold) return 1;
  if (v < -threshold) return -1;
  return 0;
}

inline double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double norm2(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace tpcone
