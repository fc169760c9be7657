// Acceptance suite: one self-contained check per criterion, one PASS/FAIL
// line each, nonzero exit when anything fails. Run a single criterion with
// `acceptance --only N`.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "tpcone/cones.hpp"
#include "tpcone/exterior.hpp"
#include "tpcone/generators.hpp"
#include "tpcone/matrix.hpp"
#include "tpcone/signs.hpp"
#include "tpcone/spectral.hpp"

using namespace tpcone;

namespace {

const double kPi = std::acos(-1.0);

double rel_residual(const Matrix& got, const Matrix& want) {
  double num = 0.0;
  for (std::size_t i = 0; i < got.entries().size(); ++i)
    num = std::max(num, std::abs(got.entries()[i] - want.entries()[i]));
  return num / std::max(1.0, want.max_abs());
}

Matrix random_uniform(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, n);
  for (double& v : m.entries()) v = u(rng);
  return m;
}

Vec gaussian_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (double& x : v) x = g(rng);
  return v;
}

int splus_enumerated(const Vec& x, double thr) {
  std::vector<int> zeros;
  std::vector<int> base(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > thr)
      base[i] = 1;
    else if (x[i] < -thr)
      base[i] = -1;
    else
      zeros.push_back(static_cast<int>(i));
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << zeros.size()); ++mask) {
    std::vector<int> s = base;
    for (std::size_t z = 0; z < zeros.size(); ++z) s[zeros[z]] = (mask & (1u << z)) ? 1 : -1;
    int changes = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] != s[i - 1]) ++changes;
    best = std::max(best, changes);
  }
  return best;
}

// ---- criterion 1: rotation compound, determinant, round-cone invariance --
bool criterion1(std::string& detail) {
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (double th : {kPi / 6, kPi / 4, kPi / 3}) {
    const Matrix a = rotation3(th);
    const double c = std::cos(th), s = std::sin(th);
    const Matrix expected{{1, 0, 0}, {0, c, -s}, {0, s, c}};
    const Matrix a2 = compound(a, 2).body;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(a2(i, k) - expected(i, k)));
    worst = std::max(worst, std::abs(compound(a, 3).body(0, 0) - 1.0));

    const ConeSpec k1 = ConeSpec::ice_cream(3, 3);
    const ConeSpec k2 = ConeSpec::ice_cream(3, 1);
    for (int rep = 0; rep < 1000; ++rep) {
      if (contains(k1, a * sample_cone_point(k1, rng)) == Region::outside) {
        detail = "rotation left the grade-1 round cone";
        return false;
      }
      if (contains(k2, a2 * sample_cone_point(k2, rng)) == Region::outside) {
        detail = "compound left the grade-2 round cone";
        return false;
      }
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst << " (tol 1e-12), 3000+3000 cone points kept";
  detail = os.str();
  return worst <= 1e-12;
}

// ---- criterion 2: functorial identities at order j ----------------------
bool criterion2(std::string& detail) {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    Matrix a = random_uniform(rng, 6), b = random_uniform(rng, 6);
    // keep the corpus invertible enough for the inverse identity
    while (inverse(a).max_abs() > 25.0) a = random_uniform(rng, 6);
    while (inverse(b).max_abs() > 25.0) b = random_uniform(rng, 6);
    const Matrix a3 = a * a * a;
    const Matrix ainv = inverse(a);
    for (int j = 1; j <= 6; ++j) {
      const Matrix aj = compound(a, j).body;
      worst = std::max(worst, rel_residual(compound(a * b, j).body,
                                           aj * compound(b, j).body));
      worst = std::max(worst, rel_residual(aj.transposed(), compound(a.transposed(), j).body));
      worst = std::max(worst, rel_residual(inverse(aj), compound(ainv, j).body));
      worst = std::max(worst, rel_residual(aj * aj * aj, compound(a3, j).body));
    }
  }
  std::ostringstream os;
  os << "100 matrices, worst relative residual " << worst << " (tol 1e-8)";
  detail = os.str();
  return worst <= 1e-8;
}

// ---- criterion 3: compound spectra are eigenvalue products --------------
bool criterion3(std::string& detail) {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const Matrix a = random_uniform(rng, 6);
    const auto base = eigen(a).values;
    for (int j = 1; j <= 6; ++j) {
      const auto want = kronecker_eigs(base, j);
      const auto got = eigen(compound(a, j).body).values;
      worst = std::max(worst, oracles::multiset_mismatch(got, want));
    }
  }
  std::ostringstream os;
  os << "50 matrices, worst relative mismatch " << worst << " (tol 1e-6)";
  detail = os.str();
  return worst <= 1e-6;
}

// Generated strictly-totally-positive corpus: symmetric exponentials plus
// nonsymmetric products of two of them (closed under multiplication).
Matrix corpus_stp(int n, std::uint64_t seed, bool product) {
  const Matrix a = random_stp(n, seed);
  return product ? a * random_stp(n, seed + 500) : a;
}

// ---- criterion 4: spectral verification over the generated corpus -------
bool criterion4(std::string& detail) {
  double worst_ratio = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + i % 5;
    const Matrix a = corpus_stp(n, 1 + static_cast<std::uint64_t>(i), i % 3 == 2);
    const SpectralReport r = gk_verify(a, 1e-7, 200, 1000 + i);
    for (double v : r.ratio_residuals) worst_ratio = std::max(worst_ratio, v);
    if (!r.pass || r.combo_passed != r.combo_total) {
      detail = "matrix " + std::to_string(i) + " failed clause " + r.first_failing_clause;
      return false;
    }
    for (int j = 1; j <= n; ++j)
      if (r.eigvec_variations[j - 1].s_minus != j - 1 || r.eigvec_variations[j - 1].s_plus != j - 1) {
        detail = "matrix " + std::to_string(i) + " eigenvector " + std::to_string(j) +
                 " has wrong variation count";
        return false;
      }
  }
  std::ostringstream os;
  os << "50 matrices (n=3..7, incl. nonsymmetric products), worst ratio residual " << worst_ratio
     << " (tol 1e-7), 200/200 combination checks each";
  detail = os.str();
  return true;
}

// ---- criterion 5: variation diminishing trials ---------------------------
bool criterion5(std::string& detail) {
  int total = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + i % 5;
    const Matrix a = corpus_stp(n, 101 + static_cast<std::uint64_t>(i), i % 3 == 2);
    const VdpReport r = vdp_check(a, 10000, 5000 + i);
    total += r.total;
    if (r.violations != 0) {
      detail = "matrix " + std::to_string(i) + " produced " + std::to_string(r.violations) +
               " violations";
      return false;
    }
  }
  detail = std::to_string(total) + " trials across 20 matrices, zero violations";
  return true;
}

// ---- criterion 6: sign-symmetric partition machinery ---------------------
bool criterion6(std::string& detail) {
  std::mt19937_64 rng(6);

  // planted partitions recovered
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 4;
    const Matrix a = random_stp(n, 201 + static_cast<std::uint64_t>(i));
    std::vector<int> signs(n);
    for (int& s : signs) s = (rng() & 1) ? 1 : -1;
    const Matrix b = signature_conjugate(a, signs);
    const auto jp = detect_js(b, true);
    std::vector<int> expected;
    for (int t = 0; t < n; ++t)
      if (signs[t] == signs[0]) expected.push_back(t + 1);
    if (!jp || jp->members != expected) {
      detail = "conjugate " + std::to_string(i) + " did not recover the planted partition";
      return false;
    }
  }

  // exactly 2^(n-1) strict sign types for n = 3
  std::set<std::vector<int>> types;
  const Matrix base = random_stp(3, 77);
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> signs{(mask & 1) ? 1 : -1, (mask & 2) ? 1 : -1, (mask & 4) ? 1 : -1};
    const auto jp = detect_js(signature_conjugate(base, signs), true);
    if (!jp) {
      detail = "a sign conjugate of a positive matrix lost strict sign symmetry";
      return false;
    }
    types.insert(jp->members);
  }
  if (types.size() != 4) {
    detail = "expected 4 strict sign types for n=3, found " + std::to_string(types.size());
    return false;
  }

  // closure under principal submatrices and permutation similarity, and
  // positive principal minors with a quantitative floor
  double min_rel_minor = 1.0;
  for (int i = 0; i < 10; ++i) {
    const int n = 4 + i % 3;
    std::vector<int> signs(n);
    for (int& s : signs) s = (rng() & 1) ? 1 : -1;
    const Matrix b = signature_conjugate(random_stp(n, 301 + static_cast<std::uint64_t>(i)), signs);
    if (!classify(b, n).stjs) {
      detail = "conjugate " + std::to_string(i) + " is not STJS";
      return false;
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> keep;
      for (int t = 0; t < n; ++t)
        if (mask & (1u << t)) keep.push_back(t);
      const int m = static_cast<int>(keep.size());
      Matrix sub(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sub(r, c) = b(keep[r], keep[c]);
      const PositivityClass pc = classify(sub, m);
      if (!pc.stjs || !pc.tjs) {
        detail = "a principal submatrix fell out of the STJS class";
        return false;
      }
    }
    std::vector<int> perm(n);
    for (int t = 0; t < n; ++t) perm[t] = t + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!classify(permutation_similar(b, perm), n).stjs) {
      detail = "permutation similarity lost the STJS class";
      return false;
    }
    for (int j = 1; j <= n; ++j) {
      const Matrix body = compound(b, j).body;
      const double scale = std::max(1.0, body.max_abs());
      for (int d = 0; d < body.rows(); ++d) {
        min_rel_minor = std::min(min_rel_minor, body(d, d) / scale);
        if (!(body(d, d) > 1e-10 * scale)) {
          detail = "a principal minor fell below the positivity floor";
          return false;
        }
      }
    }
  }
  std::ostringstream os;
  os << "100 partitions recovered, 4 sign types, closures hold, min principal minor "
     << min_rel_minor << " x scale";
  detail = os.str();
  return true;
}

// ---- criterion 7: exact sign-count set vs completion search --------------
bool criterion7(std::string& detail) {
  std::mt19937_64 rng(7);
  const int n = 4;
  std::ostringstream os;
  for (int j : {2, 3}) {
    const ConeSpec k =
        ConeSpec::exterior_basic(n, j, std::vector<int>(binomial(n, j), 1));
    int interior_total = 0, interior_found = 0;
    for (int rep = 0; rep < 500; ++rep) {
      const Vec x = gaussian_vector(rng, n);
      const TMembershipResult exact = t_membership(x, k);
      const TMembershipResult mc =
          t_membership(x, k, 0, 10000, 9000 + rep, TSearchPolicy::monte_carlo);
      if (mc.verdict == TVerdict::interior && exact.verdict != TVerdict::interior) {
        detail = "search certified a vector the exact test rejects (j=" + std::to_string(j) + ")";
        return false;
      }
      if (exact.verdict == TVerdict::interior) {
        ++interior_total;
        if (mc.verdict == TVerdict::interior) ++interior_found;
      }
    }
    if (interior_found * 100 < interior_total * 99) {
      detail = "search found only " + std::to_string(interior_found) + "/" +
               std::to_string(interior_total) + " interior vectors (j=" + std::to_string(j) + ")";
      return false;
    }
    os << "j=" << j << ": " << interior_found << "/" << interior_total << " interior recovered; ";
  }
  detail = os.str() + "no disagreements in 1000 vectors";
  return true;
}

// ---- criterion 8: chained sets over the mixed-sign wedge orthant ---------
bool criterion8(std::string& detail) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1.0);
  const std::vector<ConeSpec> chain{ConeSpec::basic({1, 1, 1}),
                                    ConeSpec::exterior_basic(3, 2, {1, -1, 1})};

  for (int rep = 0; rep < 60; ++rep) {
    Vec x(3);
    for (double& v : x) {
      v = g(rng);
      while (std::abs(v) < 0.1) v = g(rng);
    }
    x[rep % 3] = 0.0;  // exactly one zero coordinate
    const TMembershipResult r = t_chain_membership(x, chain, 4000, 10000 + rep);
    if (r.verdict != TVerdict::closure) {
      detail = "one-zero vector not classed as closure member (rep " + std::to_string(rep) + ")";
      return false;
    }
  }

  for (int rep = 0; rep < 50; ++rep) {
    Vec x(3);
    const double sign = (rep % 2) ? 1.0 : -1.0;
    for (double& v : x) v = sign * (std::abs(g(rng)) + 0.1);
    const TMembershipResult r = t_chain_membership(x, chain, 4000, 20000 + rep);
    if (r.verdict != TVerdict::not_found) {
      detail = "strictly one-signed vector admitted a completion (rep " + std::to_string(rep) + ")";
      return false;
    }
  }

  // a first cone strictly inside the orthant empties the chained set
  const std::vector<ConeSpec> shifted{ConeSpec::spanned({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}),
                                      ConeSpec::exterior_basic(3, 2, {1, -1, 1})};
  for (int rep = 0; rep < 30; ++rep) {
    Vec x = gaussian_vector(rng, 3);
    if (rep % 2) x[rep % 3] = 0.0;
    const TMembershipResult r = t_chain_membership(x, shifted, 4000, 30000 + rep);
    if (r.verdict != TVerdict::not_found) {
      detail = "shifted chain produced a member (rep " + std::to_string(rep) + ")";
      return false;
    }
  }

  detail = "60 closure members, 50 rejections, 30 empty-chain rejections";
  return true;
}

// ---- criterion 9: S+ scan vs exhaustive assignment ------------------------
bool criterion9(std::string& detail) {
  long checked = 0;
  for (int n = 1; n <= 10; ++n) {
    std::vector<int> digits(n, 0);
    for (;;) {
      Vec x(n);
      for (int i = 0; i < n; ++i) x[i] = digits[i] - 1;
      if (sign_variation(x).s_plus != splus_enumerated(x, 0.5)) {
        detail = "ternary mismatch at n=" + std::to_string(n);
        return false;
      }
      ++checked;
      int i = 0;
      while (i < n && digits[i] == 2) digits[i++] = 0;
      if (i == n) break;
      ++digits[i];
    }
  }

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Vec x = gaussian_vector(rng, n);
    for (double& v : x)
      if (u(rng) < 0.3) v = 0.0;
    const double thr = zero_threshold(max_abs(x));
    if (sign_variation(x).s_plus != splus_enumerated(x, thr)) {
      detail = "random mismatch at rep " + std::to_string(rep);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " vectors, scan equals enumeration everywhere";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

  struct Criterion {
    int id;
    const char* summary;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rotation compound reproduction and round-cone invariance", criterion1},
      {2, "product/transpose/inverse/power identities for compounds", criterion2},
      {3, "compound spectra equal eigenvalue products", criterion3},
      {4, "spectral verification passes on the generated corpus", criterion4},
      {5, "variation-diminishing trials show zero violations", criterion5},
      {6, "sign-symmetric partition machinery", criterion6},
      {7, "sign-count set agrees with the completion search", criterion7},
      {8, "chained membership reproduces the worked example", criterion8},
      {9, "S+ scan equals exhaustive assignment", criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d [%s] %s -- %s\n", c.id, ok ? "PASS" : "FAIL", c.summary,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
