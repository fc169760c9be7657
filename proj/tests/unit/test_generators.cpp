#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tpcone/cones.hpp"
#include "tpcone/errors.hpp"
#include "tpcone/generators.hpp"
#include "tpcone/serialize.hpp"
#include "tpcone/spectral.hpp"

using namespace tpcone;

TEST_CASE("vandermonde") {
  const Matrix v = vandermonde({1, 2, 3});
  CHECK(approx_equal(v, Matrix{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}));

  const Matrix v2 = vandermonde({1, 2});
  CHECK(oracles::det_cofactor(v2) == doctest::Approx(1.0));
  CHECK(classify(v2, 2).stp);

  CHECK_THROWS_AS(vandermonde({1, 1, 2}), InputError);
  CHECK_THROWS_AS(vandermonde({-1, 2}), InputError);
  CHECK_THROWS_AS(vandermonde({}), InputError);
}

TEST_CASE("random_stp is deterministic, validated and closed under products") {
  const Matrix a = random_stp(4, 99);
  const Matrix b = random_stp(4, 99);
  CHECK(a.entries() == b.entries());

  for (int n = 2; n <= 9; ++n) {
    const Matrix m = random_stp(n, 7 * n + 1);
    CHECK(classify(m, n).stp);
    CHECK(m.max_abs() > 0.0);
  }

  const Matrix p = random_stp(4, 1) * random_stp(4, 2);
  CHECK(classify(p, 4).stp);
  const Matrix p7 = random_stp(7, 1) * random_stp(7, 2);
  CHECK(classify(p7, 7).stp);
  CHECK(gk_verify(p7).pass);  // nonsymmetric member of the class

  CHECK_THROWS_AS(random_stp(1, 0), InputError);
  CHECK_THROWS_AS(random_stp(10, 0), InputError);
}

TEST_CASE("signature conjugation") {
  const Matrix a{{2, 1}, {1, 1}};
  CHECK(approx_equal(signature_conjugate(a, {1, 1}), a));

  const Matrix c = signature_conjugate(a, {1, -1});
  CHECK(approx_equal(c, Matrix{{2, -1}, {-1, 1}}));
  const auto jp = detect_js(c, true);
  REQUIRE(jp.has_value());
  CHECK(jp->members == std::vector<int>{1});
  CHECK(classify(c, 2).stjs);

  // involution
  CHECK(approx_equal(signature_conjugate(c, {1, -1}), a));

  CHECK_THROWS_AS(signature_conjugate(a, {1, -1, 1}), InputError);
  CHECK_THROWS_AS(signature_conjugate(a, {1, 0}), InputError);
}

TEST_CASE("rotation3") {
  CHECK(approx_equal(rotation3(0.0), Matrix::identity(3)));

  const double th = 0.7853981633974483;
  const double c = std::cos(th), s = std::sin(th);
  CHECK(approx_equal(compound(rotation3(th), 2).body, Matrix{{1, 0, 0}, {0, c, -s}, {0, s, c}},
                     1e-13));
  CHECK(compound(rotation3(th), 3).body(0, 0) == doctest::Approx(1.0));

  // principal 2x2 block has the complex pair cos t +- i sin t
  const Matrix block{{c, -s}, {s, c}};
  auto vals = eigen(block).values;
  sort_complex(vals);
  CHECK(std::abs(vals[0] - Complex(c, -s)) < 1e-12);
  CHECK(std::abs(vals[1] - Complex(c, s)) < 1e-12);

  CHECK_THROWS_AS(rotation3(std::nan("")), InputError);
}

TEST_CASE("rotation is a positivity counterexample with invariant round cones") {
  std::mt19937_64 rng(211);
  for (double th : {0.5, 0.9, 1.3}) {
    const Matrix a = rotation3(th);
    const PositivityClass pc = classify(a, 3);
    CHECK_FALSE(pc.tp);
    CHECK_FALSE(pc.tjs);

    // complex spectrum despite every round cone below being preserved
    int complex_count = 0;
    for (const Complex& v : eigen(a).values)
      if (std::abs(v.imag()) > 1e-9) ++complex_count;
    CHECK(complex_count == 2);

    const ConeSpec k1 = ConeSpec::ice_cream(3, 3);
    const ConeSpec k2 = ConeSpec::ice_cream(3, 1);  // grade-2 cone about e1^e2
    const Matrix a2 = compound(a, 2).body;
    for (int rep = 0; rep < 300; ++rep) {
      CHECK(contains(k1, a * sample_cone_point(k1, rng)) != Region::outside);
      CHECK(contains(k2, a2 * sample_cone_point(k2, rng)) != Region::outside);
    }
  }
}

TEST_CASE("permutation similarity keeps sign-symmetric structure") {
  std::mt19937_64 rng(223);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<int> signs(n);
    for (int& s : signs) s = (rng() & 1) ? 1 : -1;
    const Matrix stjs = signature_conjugate(random_stp(n, 400 + rep), signs);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(classify(permutation_similar(stjs, perm), n).stjs);
  }

  const Matrix a{{1, 2}, {3, 4}};
  CHECK(approx_equal(permutation_similar(a, {2, 1}), Matrix{{4, 3}, {2, 1}}));
  CHECK_THROWS_AS(permutation_similar(a, {1, 1}), InputError);
  CHECK_THROWS_AS(permutation_similar(a, {1}), InputError);
}

TEST_CASE("every generated STP matrix passes the spectral verification") {
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + rep % 4;
    CHECK(gk_verify(random_stp(n, 500 + rep)).pass);
  }
  CHECK(gk_verify(vandermonde({1, 2, 3})).pass);
  CHECK(gk_verify(vandermonde({0.5, 1.0, 1.5, 2.0})).pass);
}

TEST_CASE("generator specs build matrices") {
  const Matrix v = generate_from_json(Json::parse(R"({"kind":"vandermonde","nodes":[1,2,3]})"));
  CHECK(approx_equal(v, vandermonde({1, 2, 3})));

  const Matrix r = generate_from_json(Json::parse(R"({"kind":"random_stp","n":4,"seed":9})"));
  CHECK(approx_equal(r, random_stp(4, 9)));

  const Json nested = Json::parse(
      R"({"kind":"signature_conjugate","base":{"kind":"random_stp","n":3,"seed":2},"signs":[1,-1,1]})");
  CHECK(approx_equal(generate_from_json(nested),
                     signature_conjugate(random_stp(3, 2), {1, -1, 1})));

  const Json perm = Json::parse(
      R"({"kind":"permutation_similar","base":{"kind":"matrix","entries":[[1,2],[3,4]]},"permutation":[2,1]})");
  CHECK(approx_equal(generate_from_json(perm), Matrix{{4, 3}, {2, 1}}));

  CHECK_THROWS_AS(generate_from_json(Json::parse(R"({"kind":"mystery"})")), InputError);
  CHECK_THROWS_AS(generate_from_json(Json::parse(R"({"nodes":[1,2]})")), InputError);
}
