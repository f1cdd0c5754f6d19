#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sln/gallery.hpp"

using namespace sln;
using namespace sln::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("example 1 at n = 3 with (1, 2, -3)") {
  Example1Data<Rational> data = example1_pair<Rational>(3, {1, 2, -3});
  CHECK(data.partial_sums == std::vector<Rational>{1, 3});
  CHECK(matrices_equal(naive_bracket(data.a, data.b),
                       diagonal_matrix<Rational>({1, 2, -3})));
  CHECK(data.generates);
  CHECK(data.closure_dim == 8);
}

TEST_CASE("example 1 at n = 4 with the default scalars") {
  auto alphas = default_example1_alphas(4);
  CHECK(alphas == std::vector<Rational>{1, 2, 4, -7});
  Example1Data<Rational> data = example1_pair(4, alphas);
  CHECK(data.generates);
  CHECK(data.closure_dim == 15);
}

TEST_CASE("example 1 rejects scalar sets with vanishing partial sums") {
  try {
    example1_pair<Rational>(4, {1, -1, 1, -1});
    FAIL("expected ConditionsViolated");
  } catch (const ConditionsViolated& e) {
    // s_2 = 0 violates condition (4); the repeated difference also trips (3)
    bool has4 = false;
    for (int f : e.failed) has4 = has4 || f == 4;
    CHECK(has4);
  }
}

TEST_CASE("example 1 bracket identity for every valid scalar set") {
  Rng rng(83);
  for (Index n = 2; n <= 6; ++n) {
    for (int iter = 0; iter < 5; ++iter) {
      // random scalars meeting the example's conditions, by rejection
      std::vector<Rational> alphas;
      for (;;) {
        alphas.clear();
        Rational sum(0);
        for (Index i = 0; i + 1 < n; ++i) {
          Rational v(rng.int_in(-20, 20));
          alphas.push_back(v);
          sum += v;
        }
        alphas.push_back(-sum);
        if (example1_violations(alphas).empty()) break;
      }
      Example1Data<Rational> data = example1_pair(n, alphas);
      CHECK(matrices_equal(naive_bracket(data.a, data.b), diagonal_matrix(alphas)));
      CHECK(data.generates);
    }
  }
}

TEST_CASE("example 2 dichotomy at small n") {
  CHECK(example2_pair<Rational>(3, kQ).generates);
  CHECK(!example2_pair<Rational>(4, kQ).generates);
  CHECK(example2_pair<Rational>(5, kQ).generates);
}

TEST_CASE("lambda subalgebra for even n traps the example 2 pair") {
  ObstructionReport<Rational> report = lambda_subalgebra<Rational>(4, kQ);
  CHECK(report.lambda_dim == 10);
  CHECK(report.bracket_closed);
  CHECK(report.proper);
  CHECK(report.contains_m);
  CHECK(report.contains_n);
  CHECK(report.closure_contained);
  CHECK(report.closure_dim < 15);

  // every basis element satisfies the defining equation
  MatrixOf<Rational> c = obstruction_form<Rational>(4);
  MatrixOf<Rational> c_inv = invert(c);
  for (const auto& a : report.lambda_basis) {
    MatrixOf<Rational> residual = a * c_inv + c_inv * a.transpose();
    CHECK(is_zero_matrix(residual));
    CHECK(is_zero(trace(a)));
  }
}

TEST_CASE("lambda subalgebra for odd n is proper but misses the pair") {
  ObstructionReport<Rational> report = lambda_subalgebra<Rational>(3, kQ);
  CHECK(report.lambda_dim == 3);
  CHECK(report.lambda_dim < 8);
  CHECK(report.bracket_closed);
  CHECK(report.proper);
  CHECK(report.closure_dim == 8);  // the odd pair generates
}

TEST_CASE("lambda dimensions follow the symplectic/orthogonal pattern") {
  for (Index n = 3; n <= 6; ++n) {
    ObstructionReport<Rational> report = lambda_subalgebra<Rational>(n, kQ);
    const Index expected = n % 2 == 0 ? n * (n + 1) / 2 : n * (n - 1) / 2;
    CHECK(report.lambda_dim == expected);
  }
}

TEST_CASE("brackets of random lambda members stay in lambda") {
  Rng rng(89);
  ObstructionReport<Rational> report = lambda_subalgebra<Rational>(4, kQ);
  RrefAccumulator<Rational> span(16);
  for (const auto& b : report.lambda_basis) span.insert(flatten(b));
  for (int iter = 0; iter < 20; ++iter) {
    // random combinations of basis elements
    MatrixOf<Rational> u = zero_matrix<Rational>(4);
    MatrixOf<Rational> v = zero_matrix<Rational>(4);
    for (const auto& b : report.lambda_basis) {
      u = MatrixOf<Rational>(u + Rational(rng.int_in(-3, 3)) * b);
      v = MatrixOf<Rational>(v + Rational(rng.int_in(-3, 3)) * b);
    }
    CHECK(span.contains(flatten(MatrixOf<Rational>(bracket(u, v)))));
  }
}

TEST_CASE("the F_2 census is complete and negative") {
  F2Report report = f2_counterexample();
  CHECK(report.total == 512);
  CHECK(report.nilpotent_count == 64);
  CHECK(report.nilpotent_count == nilpotent_count_formula(2, 3));
  CHECK(report.no_partner);
  CHECK(report.max_closure_dim < 8);
  // y = E_12 itself spans a single line with E_12
  CHECK(report.closure_dim_counts.at(1) >= 1);
  int enumerated = 0;
  for (const auto& [dim, cnt] : report.closure_dim_counts) enumerated += cnt;
  CHECK(enumerated == 64);
  // the case analysis of the source argument
  CHECK(report.rank1_candidates == 8);
  CHECK(report.persymmetric_candidates == 2);
  for (Index d : report.representative_dims) CHECK(d < 8);
}

TEST_CASE("lambda_1 and lambda_2 are bracket-closed with the stated members") {
  Lambda12Report report = lambda12_check();
  CHECK(report.lambda1_dim == 4);
  CHECK(report.lambda2_dim == 5);
  CHECK(report.lambda1_closed);
  CHECK(report.lambda2_closed);
  CHECK(report.a1_in_lambda1);
  CHECK(report.b_in_lambda1);
  CHECK(report.a2_in_lambda2);
  CHECK(report.a3_in_lambda2);
  CHECK(report.b_in_lambda2);
  CHECK(report.all_hold());
}
