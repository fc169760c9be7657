#pragma once

#include <optional>
#include <vector>

#include "tpcone/exterior.hpp"
#include "tpcone/matrix.hpp"

namespace tpcone {

// Partition of [1, n] into J and its complement describing a checkerboard
// sign symmetry: nonnegative on (J x J) u (Jc x Jc), nonpositive elsewhere.
// Canonical form keeps 1 in J (J and Jc describe the same class).
struct JPartition {
  int n = 0;
  std::vector<int> members;  // sorted, 1-based, contains 1

  std::vector<int> sign_diagonal() const;  // +1 on J, -1 on Jc
  bool operator==(const JPartition&) const = default;
};

// One-signedness record for a single compound order.
struct OrderSignature {
  int sign = 0;        // +1 or -1
  bool strict = false;  // no entries inside the zero band
};

struct PositivityClass {
  bool nonnegative = false;  // A itself entrywise >= 0 (within tolerance)
  bool positive = false;     // A itself entrywise > 0
  std::optional<std::vector<OrderSignature>> sr_signature;  // per order 1..k
  std::optional<JPartition> js_partition;                   // detect_js(A), non-strict
  bool tp = false;
  bool stp = false;
  bool tjs = false;
  bool stjs = false;
  int k_checked = 0;
};

// Find a J making A (strictly) J-sign-symmetric, or nullopt. Entries with
// |a| <= tol*max(1,|A|_max) are unconstrained (and disqualify strict mode).
// Each connected component of the sign-constraint graph is 2-colored and the
// color class holding its smallest index goes to J; the result is verified
// against every entry before being returned.
std::optional<JPartition> detect_js(const Matrix& a, bool strict = false,
                                    double tol = kDefaultTol);

// Evaluate the first k compound matrices and fill every classification flag.
// k = n decides the full TP/STP/SR/TJS/STJS definitions; k < n decides the
// k-truncated structures.
PositivityClass classify(const Matrix& a, int k, double tol = kDefaultTol,
                         std::uint64_t max_entries = kDefaultCompoundEntryCap);
PositivityClass classify(const Matrix& a);  // k = n

// True when sr_signature is present with every order strict.
bool is_ssr(const PositivityClass& pc);

}  // namespace tpcone
