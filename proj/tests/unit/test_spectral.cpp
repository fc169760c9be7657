#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tpcone/errors.hpp"
#include "tpcone/generators.hpp"
#include "tpcone/spectral.hpp"

using namespace tpcone;

namespace {

// residual |A v - lambda v| per eigenpair, the accuracy contract
double pair_residual(const Matrix& a, const Complex& lambda, const std::vector<Complex>& v) {
  const int n = a.rows();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex r = -lambda * v[i];
    for (int k = 0; k < n; ++k) r += a(i, k) * v[k];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

std::vector<Complex> sorted_values(std::vector<Complex> v) {
  sort_complex(v);
  return v;
}

}  // namespace

TEST_CASE("eigen on hand matrices") {
  const EigenDecomposition d = eigen(Matrix{{3, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  auto vals = sorted_values(d.values);
  CHECK(std::abs(vals[0] - Complex(1.0)) < 1e-12);
  CHECK(std::abs(vals[1] - Complex(2.0)) < 1e-12);
  CHECK(std::abs(vals[2] - Complex(3.0)) < 1e-12);

  const Matrix a{{2, 1}, {1, 1}};
  const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
  auto vals2 = sorted_values(eigen(a).values);
  CHECK(std::abs(vals2[1].real() - golden) < 1e-12);
  CHECK(std::abs(vals2[0].real() - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-12);

  // plane rotation spectrum: {1, cos t +- i sin t}
  const double t = std::acos(-1.0) / 3.0;
  auto vals3 = sorted_values(eigen(rotation3(t)).values);
  CHECK(std::abs(vals3[0] - Complex(0.5, -std::sin(t))) < 1e-12);
  CHECK(std::abs(vals3[1] - Complex(0.5, std::sin(t))) < 1e-12);
  CHECK(std::abs(vals3[2] - Complex(1.0)) < 1e-12);

  CHECK_THROWS_AS(eigen(Matrix(2, 3)), InputError);
}

TEST_CASE("eigen satisfies the residual contract with canonical vectors") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Matrix a = oracles::random_matrix(rng, n, n);
    const EigenDecomposition d = eigen(a);
    const Matrix at = a.transposed();
    for (int i = 0; i < n; ++i) {
      CHECK(pair_residual(a, d.values[i], d.right[i]) < 1e-10 * std::max(1.0, a.max_abs()));
      CHECK(pair_residual(at, d.values[i], d.left[i]) < 1e-10 * std::max(1.0, a.max_abs()));
      // unit norm, first significant component positive real
      double nrm = 0.0;
      for (const Complex& c : d.right[i]) nrm += std::norm(c);
      CHECK(std::sqrt(nrm) == doctest::Approx(1.0));
      for (const Complex& c : d.right[i]) {
        if (std::abs(c) > 1e-9) {
          CHECK(c.real() > 0.0);
          CHECK(std::abs(c.imag()) < 1e-9);
          break;
        }
      }
    }
  }
}

TEST_CASE("perron_root") {
  const PerronResult r = perron_root(Matrix{{2, 1}, {1, 1}});
  CHECK(r.rho == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  for (double v : r.right) CHECK(v > 0.0);
  for (double v : r.left) CHECK(v > 0.0);

  Matrix ones(4, 4);
  for (double& v : ones.entries()) v = 1.0;
  const PerronResult ro = perron_root(ones);
  CHECK(ro.rho == doctest::Approx(4.0));
  for (double v : ro.right) CHECK(v == doctest::Approx(0.5));  // 1/sqrt(4)

  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Matrix m = oracles::random_matrix(rng, n, n, 0.1, 2.0);
    const PerronResult pr = perron_root(m);
    double dominant = 0.0;
    double second = 0.0;
    for (const Complex& v : eigen(m).values) {
      const double mag = std::abs(v);
      if (mag > dominant) {
        second = dominant;
        dominant = mag;
      } else {
        second = std::max(second, mag);
      }
    }
    CHECK(pr.rho == doctest::Approx(dominant).epsilon(1e-9));
    CHECK(second < pr.rho * (1.0 - 1e-9));  // strict dominance
  }

  CHECK_THROWS_AS(perron_root(Matrix{{1, 0}, {1, 1}}), InputError);
  CHECK_THROWS_AS(perron_root(Matrix{{1, -1}, {1, 1}}), InputError);
}

TEST_CASE("gk_verify on hand and generated matrices") {
  const SpectralReport r1 = gk_verify(Matrix{{2, 1}, {1, 1}});
  CHECK(r1.pass);
  CHECK(r1.eigenvalues[0].real() == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0));
  CHECK(r1.eigvec_variations[0].s_minus == 0);
  CHECK(r1.eigvec_variations[1].s_minus == 1);
  CHECK(r1.eigvec_variations[1].s_plus == 1);

  // Vandermonde on nodes 1,2,3: first confirm strict positivity of every
  // minor with the cofactor oracle, then verify the spectral claims
  const Matrix v{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}};
  for (int j = 1; j <= 3; ++j)
    for (const auto& rows : oracles::lex_subsets(3, j))
      for (const auto& cols : oracles::lex_subsets(3, j)) {
        Matrix sub(j, j);
        for (int i = 0; i < j; ++i)
          for (int k = 0; k < j; ++k) sub(i, k) = v(rows[i] - 1, cols[k] - 1);
        CHECK(oracles::det_cofactor(sub) > 0.0);
      }
  const SpectralReport r2 = gk_verify(v);
  CHECK(r2.pass);
  for (int j = 1; j <= 3; ++j) {
    CHECK(r2.eigvec_variations[j - 1].s_minus == j - 1);
    CHECK(r2.eigvec_variations[j - 1].s_plus == j - 1);
    CHECK(r2.ratio_residuals[j - 1] <= 1e-7);
  }
  CHECK(r2.combo_passed == r2.combo_total);

  CHECK_THROWS_AS(gk_verify(Matrix::identity(3)), ClassificationError);
  CHECK_THROWS_AS(gk_verify(rotation3(0.3)), ClassificationError);
}

TEST_CASE("gk_verify takes the sign-conjugated route for STJS input") {
  const Matrix a = random_stp(4, 9);
  const Matrix b = signature_conjugate(a, {1, -1, 1, -1});
  const SpectralReport rb = gk_verify(b);
  CHECK(rb.pass);
  CHECK(rb.conjugated);

  // similarity leaves the spectrum alone
  const SpectralReport ra = gk_verify(a);
  for (int i = 0; i < 4; ++i)
    CHECK(rb.eigenvalues[i].real() ==
          doctest::Approx(ra.eigenvalues[i].real()).epsilon(1e-9));
}

TEST_CASE("similar matrices share the spectrum but not the verification basis") {
  const Matrix a = random_stp(4, 13);
  std::mt19937_64 rng(131);
  Matrix t = oracles::random_matrix(rng, 4, 4);
  for (int i = 0; i < 4; ++i) t(i, i) += 3.0;
  const Matrix sim = t * a * inverse(t);

  auto va = sorted_values(eigen(a).values);
  auto vs = sorted_values(eigen(sim).values);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(va[i] - vs[i]) < 1e-7 * std::max(1.0, std::abs(va[i])));

  // the conjugated matrix is generally not STP/STJS, so verification refuses
  CHECK_THROWS_AS(gk_verify(sim), ClassificationError);
}

TEST_CASE("compound spectra are the eigenvalue products") {
  std::mt19937_64 rng(107);
  std::vector<Matrix> corpus;
  for (int rep = 0; rep < 6; ++rep)
    corpus.push_back(oracles::random_matrix(rng, 5, 5));
  corpus.push_back(rotation3(0.9));
  corpus.push_back(random_stp(5, 5));
  for (const Matrix& a : corpus) {
    const auto base = eigen(a).values;
    for (int j = 1; j <= a.rows(); ++j) {
      const auto expected = kronecker_eigs(base, j);
      const auto got = eigen(compound(a, j).body).values;
      REQUIRE(expected.size() == got.size());
      CHECK(oracles::multiset_mismatch(got, expected) < 1e-6);
    }
  }
}

TEST_CASE("inverse of a strictly positive-class matrix has reciprocal spectrum") {
  const Matrix a = random_stp(5, 17);
  const auto va = sorted_values(eigen(a).values);
  auto vi = sorted_values(eigen(inverse(a)).values);
  for (int i = 0; i < 5; ++i) {
    const Complex expect = 1.0 / va[4 - i].real();
    CHECK(std::abs(vi[i] - expect) < 1e-8 * std::max(1.0, std::abs(expect)));
    CHECK(vi[i].real() > 0.0);
    CHECK(std::abs(vi[i].imag()) < 1e-9);
  }
}

TEST_CASE("vdp_check") {
  // hand example: x = (1,-1) against [[2,1],[1,1]] maps to (1,0)
  const Matrix a{{2, 1}, {1, 1}};
  const Vec ax = a * Vec{1, -1};
  CHECK(sign_variation(ax).s_plus <= sign_variation({1, -1}).s_minus);

  const VdpReport r = vdp_check(random_stp(5, 23), 10000, 7);
  CHECK(r.total == 10000);
  CHECK(r.violations == 0);
  CHECK(r.worst_margin >= 0.0);

  // strictly one-signed input maps to strictly one-signed output
  Matrix pos(3, 3);
  for (double& v : pos.entries()) v = 1.0;
  pos = pos + Matrix::identity(3);
  const Vec y = pos * Vec{1, 2, 3};
  CHECK(sign_variation(y).s_plus == 0);

  // sign-conjugated route
  const VdpReport rc = vdp_check(signature_conjugate(random_stp(4, 29), {1, -1, -1, 1}), 2000, 11);
  CHECK(rc.violations == 0);
  CHECK(rc.conjugated);

  CHECK_THROWS_AS(vdp_check(rotation3(0.4), 100, 1), ClassificationError);
  CHECK_THROWS_AS(vdp_check(Matrix::identity(3), 100, 1), ClassificationError);
}

TEST_CASE("nonsingular TP matrices preserve the closed variation bands") {
  // closure form of the invariant-set statement: S-(Ax) <= S-(x) for
  // nonsingular totally nonnegative matrices
  const std::vector<Matrix> corpus{Matrix::identity(4),
                                   Matrix{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}};
  std::mt19937_64 rng(109);
  for (const Matrix& a : corpus) {
    REQUIRE(classify(a, a.rows()).tp);
    for (int rep = 0; rep < 2000; ++rep) {
      const Vec x = oracles::random_vector(rng, a.rows());
      const Vec y = a * x;
      CHECK(sign_variation(y).s_minus <= sign_variation(x).s_minus);
    }
  }
}
