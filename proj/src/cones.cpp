#include "tpcone/cones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpcone/errors.hpp"
#include "tpcone/signs.hpp"

namespace tpcone {

namespace {

void check_signs(const std::vector<int>& signs, const char* context) {
  if (signs.empty()) throw InputError(std::string(context) + ": empty sign tuple");
  for (int s : signs)
    if (s != 1 && s != -1) throw InputError(std::string(context) + ": signs must be +1 or -1");
}

Matrix generator_matrix(const std::vector<Vec>& gens) {
  const int n = static_cast<int>(gens.size());
  Matrix g(n, n);
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(gens[c].size()) != n)
      throw InputError("spanned cone needs n generators of dimension n");
    for (int r = 0; r < n; ++r) g(r, c) = gens[c][r];
  }
  return g;
}

Vec negated(const Vec& x) {
  Vec y = x;
  for (double& v : y) v = -v;
  return y;
}

}  // namespace

ConeSpec ConeSpec::basic(std::vector<int> signs) {
  check_signs(signs, "basic cone");
  ConeSpec k;
  k.kind_ = ConeKind::basic;
  k.signs_ = std::move(signs);
  return k;
}

ConeSpec ConeSpec::exterior_basic(int n, int j, std::vector<int> signs) {
  if (j < 1 || j > n) throw InputError("exterior basic cone grade out of range");
  check_signs(signs, "exterior basic cone");
  if (signs.size() != binomial(n, j))
    throw InputError("exterior basic cone needs one sign per basis wedge");
  ConeSpec k;
  k.kind_ = ConeKind::exterior_basic;
  k.n_ = n;
  k.j_ = j;
  k.signs_ = std::move(signs);
  return k;
}

ConeSpec ConeSpec::spanned(std::vector<Vec> generators) {
  const Matrix g = generator_matrix(generators);
  const int n = g.rows();
  if (rank_estimate(g) < n) throw InputError("spanned cone generators are linearly dependent");
  ConeSpec k;
  k.kind_ = ConeKind::spanned;
  k.generators_ = std::move(generators);
  return k;
}

ConeSpec ConeSpec::ice_cream(int n, int axis) {
  if (n < 1) throw InputError("ice-cream cone dimension must be positive");
  if (axis < 1 || axis > n) throw InputError("ice-cream cone axis out of range");
  ConeSpec k;
  k.kind_ = ConeKind::icecream;
  k.n_ = n;
  k.axis_ = axis;
  return k;
}

int ConeSpec::ambient_dim() const {
  switch (kind_) {
    case ConeKind::basic:
    case ConeKind::exterior_basic:
      return static_cast<int>(signs_.size());
    case ConeKind::spanned:
      return static_cast<int>(generators_.size());
    default:
      return n_;
  }
}

bool ConeSpec::uniform_signs() const {
  if (signs_.empty()) return false;
  for (int s : signs_)
    if (s != signs_[0]) return false;
  return true;
}

Region contains(const ConeSpec& k, const Vec& x, double tol) {
  if (static_cast<int>(x.size()) != k.ambient_dim())
    throw InputError("contains: point dimension does not match the cone");
  switch (k.kind()) {
    case ConeKind::basic:
    case ConeKind::exterior_basic: {
      const double thr = zero_threshold(max_abs(x), tol);
      bool strict = true;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = k.signs()[i] * x[i];
        if (v < -thr) return Region::outside;
        if (v <= thr) strict = false;
      }
      return strict ? Region::interior : Region::boundary;
    }
    case ConeKind::spanned: {
      const Vec c = solve(generator_matrix(k.generators()), x);
      const double thr = zero_threshold(max_abs(c), tol);
      bool strict = true;
      for (double v : c) {
        if (v < -thr) return Region::outside;
        if (v <= thr) strict = false;
      }
      return strict ? Region::interior : Region::boundary;
    }
    default: {
      double r2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (static_cast<int>(i) != k.axis() - 1) r2 += x[i] * x[i];
      const double t = x[k.axis() - 1];
      const double margin = t - std::sqrt(r2);
      const double thr = zero_threshold(norm2(x), tol);
      if (margin < -thr) return Region::outside;
      if (margin <= thr) return Region::boundary;
      return Region::interior;
    }
  }
}

ConeSpec adjoint(const ConeSpec& k) {
  switch (k.kind()) {
    case ConeKind::basic:
    case ConeKind::exterior_basic:
    case ConeKind::icecream:
      return k;  // self-adjoint families
    default: {
      // Dual generators: rows of the inverse of the generator matrix satisfy
      // <d_r, g_c> = delta_rc; normalize for a deterministic representative.
      const Matrix inv = inverse(generator_matrix(k.generators()));
      const int n = inv.rows();
      std::vector<Vec> duals(n);
      for (int r = 0; r < n; ++r) {
        Vec d = inv.row(r);
        const double nrm = norm2(d);
        for (double& v : d) v /= nrm;
        duals[r] = std::move(d);
      }
      return ConeSpec::spanned(std::move(duals));
    }
  }
}

MaxAngle max_angle(const ConeSpec& k, int samples, std::uint64_t seed) {
  if (k.ambient_dim() == 1) return {0.0, true};  // half-line
  switch (k.kind()) {
    case ConeKind::basic:
    case ConeKind::exterior_basic:
    case ConeKind::icecream:
      // Orthogonal edges / antipodal boundary rays realize pi/2; no pair of
      // cone points exceeds it.
      return {std::acos(0.0), true};
    default: {
      std::vector<Vec> pts;
      for (const Vec& g : k.generators()) {
        Vec u = g;
        const double nrm = norm2(u);
        for (double& v : u) v /= nrm;
        pts.push_back(std::move(u));
      }
      std::mt19937_64 rng(seed);
      for (int s = 0; s < samples; ++s) pts.push_back(sample_cone_point(k, rng));
      double min_cos = 1.0;
      for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
          min_cos = std::min(min_cos, dot(pts[a], pts[b]));
      return {std::acos(std::clamp(min_cos, -1.0, 1.0)), false};
    }
  }
}

Vec sample_cone_point(const ConeSpec& k, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int dim = k.ambient_dim();
  Vec x(dim, 0.0);

  if (k.kind() == ConeKind::icecream) {
    const int ax = k.axis() - 1;
    const double t = std::abs(gauss(rng)) + 0.1;
    Vec dir(dim, 0.0);
    double nrm = 0.0;
    for (int i = 0; i < dim; ++i)
      if (i != ax) {
        dir[i] = gauss(rng);
        nrm += dir[i] * dir[i];
      }
    nrm = std::sqrt(nrm);
    // radius fraction 1 lands exactly on the boundary; sample it often
    const double rho = (unif(rng) < 0.3 || nrm == 0.0) ? 1.0 : unif(rng);
    if (nrm > 0.0)
      for (int i = 0; i < dim; ++i)
        if (i != ax) dir[i] *= rho * t / nrm;
    x = dir;
    x[ax] = t;
  } else {
    // Nonnegative coefficients, with a sparse mask half the time so faces of
    // the cone are reachable.
    Vec coeff(dim, 0.0);
    const bool sparse = unif(rng) < 0.5;
    int live = 0;
    for (int i = 0; i < dim; ++i) {
      if (sparse && unif(rng) < 0.5) continue;
      coeff[i] = std::abs(gauss(rng));
      ++live;
    }
    if (live == 0) coeff[static_cast<int>(unif(rng) * dim) % dim] = 1.0;
    if (k.kind() == ConeKind::spanned) {
      for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) x[r] += coeff[c] * k.generators()[c][r];
    } else {
      for (int i = 0; i < dim; ++i) x[i] = k.signs()[i] * coeff[i];
    }
  }

  const double nrm = norm2(x);
  if (nrm == 0.0) return sample_cone_point(k, rng);
  for (double& v : x) v /= nrm;
  return x;
}

const char* to_string(TVerdict v) {
  switch (v) {
    case TVerdict::interior: return "interior";
    case TVerdict::closure: return "closure";
    default: return "not_found";
  }
}

namespace {

int resolve_grade(const Vec& x, const ConeSpec& k, int grade) {
  const int n = static_cast<int>(x.size());
  if (k.kind() == ConeKind::exterior_basic) {
    if (k.source_dim() != n) throw InputError("t_membership: cone source dimension mismatch");
    if (grade != 0 && grade != k.grade()) throw InputError("t_membership: grade disagrees with the cone");
    return k.grade();
  }
  const int ambient = k.ambient_dim();
  if (grade != 0) {
    if (grade < 1 || grade > n || binomial(n, grade) != static_cast<std::uint64_t>(ambient))
      throw InputError("t_membership: grade inconsistent with the cone's ambient dimension");
    return grade;
  }
  int found = 0;
  for (int j = 1; j <= n; ++j)
    if (binomial(n, j) == static_cast<std::uint64_t>(ambient)) {
      if (found != 0) throw InputError("t_membership: grade is ambiguous, pass it explicitly");
      found = j;
    }
  if (found == 0) throw InputError("t_membership: cone does not live in any exterior power of R^n");
  return found;
}

TMembershipResult exact_verdict(Region r) {
  switch (r) {
    case Region::interior: return {TVerdict::interior, {}, true};
    case Region::boundary: return {TVerdict::closure, {}, true};
    default: return {TVerdict::not_found, {}, true};
  }
}

// Grade-1 sets T(K) = K u (-K) are decided by direct membership.
TMembershipResult rank_one_verdict(const ConeSpec& k, const Vec& x, double tol) {
  const Region a = contains(k, x, tol);
  const Region b = contains(k, negated(x), tol);
  const Region best = std::max(a, b);
  return exact_verdict(best);
}

// Draw a Gaussian direction orthogonal to every vector in basis (unit span).
Vec orthogonal_direction(const std::vector<Vec>& basis, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec y(n);
    for (double& v : y) v = gauss(rng);
    for (const Vec& b : basis) {
      const double p = dot(y, b);
      for (int i = 0; i < n; ++i) y[i] -= p * b[i];
    }
    const double nrm = norm2(y);
    if (nrm > 1e-6) {
      for (double& v : y) v /= nrm;
      return y;
    }
  }
  throw NumericError("completion sampling degenerated");
}

struct WedgeCheck {
  Region region;   // best of K and -K
  bool nonzero;
};

WedgeCheck check_wedge(const ConeSpec& k, const MultiVector& w, double scale, double tol) {
  const Region a = contains(k, w.coords, tol);
  const Region b = contains(k, negated(w.coords), tol);
  const bool nonzero = max_abs(w.coords) > zero_threshold(scale, tol);
  return {std::max(a, b), nonzero};
}

}  // namespace

TMembershipResult t_membership(const Vec& x, const ConeSpec& k, int grade, int budget,
                               std::uint64_t seed, TSearchPolicy policy, double tol) {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw InputError("t_membership of empty vector");
  const int j = resolve_grade(x, k, grade);

  if (j == 1) return rank_one_verdict(k, x, tol);

  const bool exact_available = k.kind() == ConeKind::exterior_basic && k.uniform_signs();
  if (exact_available && policy != TSearchPolicy::monte_carlo)
    return exact_verdict(m_membership(x, j, tol));
  if (policy == TSearchPolicy::exact_only)
    throw InputError("t_membership: no exact decision for this cone");

  const double xnorm = norm2(x);
  if (xnorm == 0.0) return {TVerdict::not_found, {}, false};
  Vec xhat = x;
  for (double& v : xhat) v /= xnorm;

  std::mt19937_64 rng(seed);
  std::optional<std::vector<Vec>> closure_witness;
  for (int trial = 0; trial < budget; ++trial) {
    std::vector<Vec> basis{xhat};
    std::vector<Vec> completions;
    for (int i = 1; i < j; ++i) {
      Vec y = orthogonal_direction(basis, n, rng);
      basis.push_back(y);
      completions.push_back(std::move(y));
    }
    std::vector<Vec> factors{x};
    factors.insert(factors.end(), completions.begin(), completions.end());
    const MultiVector w = wedge(factors);
    const WedgeCheck c = check_wedge(k, w, xnorm, tol);
    if (c.region == Region::interior) return {TVerdict::interior, std::move(completions), false};
    if (c.region == Region::boundary && c.nonzero && !closure_witness)
      closure_witness = std::move(completions);
  }
  if (closure_witness) return {TVerdict::closure, std::move(*closure_witness), false};
  return {TVerdict::not_found, {}, false};
}

namespace {

void validate_chain(const Vec& x, const std::vector<ConeSpec>& ks) {
  const int n = static_cast<int>(x.size());
  if (ks.empty()) throw InputError("t_chain_membership: empty cone chain");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const int grade = static_cast<int>(i) + 1;
    const ConeSpec& k = ks[i];
    if (k.kind() == ConeKind::exterior_basic) {
      if (k.source_dim() != n || k.grade() != grade)
        throw InputError("t_chain_membership: cone grade/dimension mismatch in chain");
    } else if (binomial(n, grade) != static_cast<std::uint64_t>(k.ambient_dim())) {
      throw InputError("t_chain_membership: cone ambient dimension mismatch in chain");
    }
  }
}

bool chain_is_uniform(const std::vector<ConeSpec>& ks) {
  for (const ConeSpec& k : ks) {
    const bool sign_kind = k.kind() == ConeKind::basic || k.kind() == ConeKind::exterior_basic;
    if (!sign_kind || !k.uniform_signs()) return false;
  }
  return true;
}

// Rejection-sample a vector of the chained set T(K_1..K_m) for completion
// use. m == 1 samples the cone directly (sign flips are irrelevant to the
// wedge test); deeper levels certify Gaussian candidates recursively.
std::optional<Vec> sample_chain_member(const std::vector<ConeSpec>& ks, std::size_t m, int n,
                                       int inner_budget, std::mt19937_64& rng, double tol) {
  if (m == 1) return sample_cone_point(ks[0], rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Vec y(n);
    for (double& v : y) v = gauss(rng);
    std::vector<ConeSpec> prefix(ks.begin(), ks.begin() + m);
    const TMembershipResult r =
        t_chain_membership(y, prefix, inner_budget, rng(), TSearchPolicy::automatic, tol);
    if (r.verdict != TVerdict::not_found) return y;
  }
  return std::nullopt;
}

}  // namespace

TMembershipResult t_chain_membership(const Vec& x, const std::vector<ConeSpec>& ks, int budget,
                                     std::uint64_t seed, TSearchPolicy policy, double tol) {
  validate_chain(x, ks);
  const int n = static_cast<int>(x.size());
  const int j = static_cast<int>(ks.size());

  if (j == 1) return rank_one_verdict(ks[0], x, tol);

  if (chain_is_uniform(ks) && policy != TSearchPolicy::monte_carlo)
    return exact_verdict(m_membership(x, j, tol));
  if (policy == TSearchPolicy::exact_only)
    throw InputError("t_chain_membership: no exact decision for this chain");

  const double xnorm = norm2(x);
  if (xnorm == 0.0) return {TVerdict::not_found, {}, false};

  std::mt19937_64 rng(seed);
  const int inner_budget = std::max(50, budget / 100);
  std::optional<std::vector<Vec>> closure_witness;
  for (int trial = 0; trial < budget; ++trial) {
    std::vector<Vec> completions;
    bool ok = true;
    for (int i = 2; i <= j; ++i) {
      auto y = sample_chain_member(ks, static_cast<std::size_t>(i) - 1, n, inner_budget, rng, tol);
      if (!y) {
        ok = false;
        break;
      }
      completions.push_back(std::move(*y));
    }
    if (!ok) continue;
    std::vector<Vec> factors{x};
    factors.insert(factors.end(), completions.begin(), completions.end());
    const MultiVector w = wedge(factors);
    const WedgeCheck c = check_wedge(ks.back(), w, xnorm, tol);
    if (c.region == Region::interior) return {TVerdict::interior, std::move(completions), false};
    if (c.region == Region::boundary && c.nonzero && !closure_witness)
      closure_witness = std::move(completions);
  }
  if (closure_witness) return {TVerdict::closure, std::move(*closure_witness), false};
  return {TVerdict::not_found, {}, false};
}

}  // namespace tpcone
