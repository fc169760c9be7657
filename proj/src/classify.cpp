#include "tpcone/classify.hpp"

#include <cmath>

#include "tpcone/errors.hpp"

namespace tpcone {

std::vector<int> JPartition::sign_diagonal() const {
  std::vector<int> d(n, -1);
  for (int i : members) d[i - 1] = 1;
  return d;
}

namespace {

// Union-find with parity relative to the component root.
struct ParityDsu {
  std::vector<int> parent, parity, min_index;

  explicit ParityDsu(int n) : parent(n), parity(n, 0), min_index(n) {
    for (int i = 0; i < n; ++i) parent[i] = min_index[i] = i;
  }

  std::pair<int, int> find(int v) {
    if (parent[v] == v) return {v, 0};
    auto [root, p] = find(parent[v]);
    parent[v] = root;
    parity[v] ^= p;
    return {root, parity[v]};
  }

  // relation = 0 for "same side", 1 for "opposite"; false on contradiction.
  bool unite(int a, int b, int relation) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == relation;
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ relation;
    min_index[ra] = std::min(min_index[ra], min_index[rb]);
    return true;
  }
};

}  // namespace

std::optional<JPartition> detect_js(const Matrix& a, bool strict, double tol) {
  if (!a.square()) throw InputError("detect_js requires a square matrix");
  const int n = a.rows();
  const double thr = zero_threshold(a.max_abs(), tol);

  ParityDsu dsu(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int s = tolerant_sign(a(i, k), thr);
      if (s == 0) {
        if (strict) return std::nullopt;
        continue;
      }
      if (!dsu.unite(i, k, s > 0 ? 0 : 1)) return std::nullopt;
    }

  // Canonical completion: in each component, the color class holding the
  // smallest index joins J.
  std::vector<int> side(n);  // +1 -> J, -1 -> Jc
  for (int i = 0; i < n; ++i) {
    auto [root, p] = dsu.find(i);
    const int anchor = dsu.min_index[root];
    const int panchor = dsu.find(anchor).second;
    side[i] = (p == panchor) ? 1 : -1;
  }

  // Verify every entry against the completed partition.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double v = a(i, k);
      if (side[i] == side[k]) {
        if (strict ? !(v > thr) : v < -thr) return std::nullopt;
      } else {
        if (strict ? !(v < -thr) : v > thr) return std::nullopt;
      }
    }

  JPartition jp;
  jp.n = n;
  for (int i = 0; i < n; ++i)
    if (side[i] > 0) jp.members.push_back(i + 1);
  return jp;
}

PositivityClass classify(const Matrix& a, int k, double tol, std::uint64_t max_entries) {
  if (!a.square()) throw InputError("classify requires a square matrix");
  a.require_finite("classify");
  const int n = a.rows();
  if (k < 1 || k > n) throw InputError("classify truncation order out of range");

  PositivityClass pc;
  pc.k_checked = k;
  pc.tp = pc.stp = pc.tjs = pc.stjs = true;
  std::vector<OrderSignature> signature;
  bool sr_ok = true;

  for (int j = 1; j <= k; ++j) {
    const Matrix body = (j == 1) ? a : compound(a, j, max_entries).body;
    const double thr = zero_threshold(body.max_abs(), tol);

    int npos = 0, nneg = 0, nzero = 0;
    for (double v : body.entries()) {
      const int s = tolerant_sign(v, thr);
      if (s > 0)
        ++npos;
      else if (s < 0)
        ++nneg;
      else
        ++nzero;
    }

    const bool nonneg = nneg == 0;
    const bool pos = nneg == 0 && nzero == 0;
    if (j == 1) {
      pc.nonnegative = nonneg;
      pc.positive = pos;
      pc.js_partition = detect_js(a, false, tol);
    }
    pc.tp = pc.tp && nonneg;
    pc.stp = pc.stp && pos;

    if (sr_ok) {
      if (npos > 0 && nneg > 0) {
        sr_ok = false;
      } else {
        OrderSignature os;
        os.sign = nneg > 0 ? -1 : 1;
        os.strict = nzero == 0 && (npos > 0 || nneg > 0);
        signature.push_back(os);
      }
    }

    if (pc.tjs && !detect_js(body, false, tol)) pc.tjs = false;
    if (pc.stjs && !detect_js(body, true, tol)) pc.stjs = false;
  }

  if (sr_ok) pc.sr_signature = std::move(signature);
  return pc;
}

PositivityClass classify(const Matrix& a) { return classify(a, a.rows()); }

bool is_ssr(const PositivityClass& pc) {
  if (!pc.sr_signature) return false;
  for (const OrderSignature& os : *pc.sr_signature)
    if (!os.strict) return false;
  return true;
}

}  // namespace tpcone
