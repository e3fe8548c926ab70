#include "doctest.h"
#include "nsym/error.hpp"
#include "nsym/expansions.hpp"
#include "nsym/oracles.hpp"
#include "nsym/serialize.hpp"
#include "support/generators.hpp"
#include "support/laplace.hpp"

using namespace nsym;
namespace oracle = testing_oracle;

TEST_CASE("Jacobi-Trudi matrices") {
  CHECK(jacobi_trudi_matrix({-1, 3, 2}).entries ==
        std::vector<std::vector<int>>{{-1, 0, 1}, {2, 3, 4}, {0, 1, 2}});
  CHECK(jacobi_trudi_matrix({2, 5, 3}, IntSeq{1, 3, 0}).entries ==
        std::vector<std::vector<int>>{{1, 0, 4}, {3, 2, 6}, {0, -1, 3}});
  CHECK(jacobi_trudi_matrix({4, 1, 2}) == jacobi_trudi_matrix({4, 1, 2}, IntSeq{0, 0, 0}));
  CHECK(jacobi_trudi_matrix({4, 1, 2}, IntSeq{1}).size() == 3);
}

TEST_CASE("ndet expansion") {
  CHECK(ndet_expand(jacobi_trudi_matrix({-1, 3, 2})) == parse_text("H(4) - H(2,2) + H(1,2,1) - H(1,3)"));
  CHECK(ndet_expand(jacobi_trudi_matrix({2, 5, 3}, IntSeq{1, 3, 0})) ==
        parse_text("H(1,2,3) - H(3,3) + H(6) - H(4,2)"));
  CHECK(ndet_expand(jacobi_trudi_matrix({5})) == parse_text("H(5)"));
  CHECK(ndet_expand(jacobi_trudi_matrix({0})) == BasisExpr::unit(Basis::H));
  CHECK(ndet_expand(jacobi_trudi_matrix({-2})).empty());
  CHECK_THROWS_AS(ndet_expand(jacobi_trudi_matrix(IntSeq(11, 1))), Error);
}

TEST_CASE("property: permutation-sum ndet equals recursive Laplace for k <= 4") {
  testing_gen::Rng rng(41);
  for (int t = 0; t < 400; ++t) {
    const int k = testing_gen::uniform(rng, 1, 4);
    const IntSeq mu = testing_gen::random_seq(rng, k, -3, 6);
    const IntSeq nu = testing_gen::random_seq(rng, k, -3, 6);
    CHECK(oracle::to_poly(ndet_expand(jacobi_trudi_matrix(mu, nu))) == oracle::laplace_ndet(oracle::jt_matrix(mu, nu)));
  }
}

TEST_CASE("commutative Jacobi-Trudi") {
  CHECK(commutative_jacobi_trudi({4, 3, 3}, IntSeq{2, 2, 0}) == parse_text("h(3,2,1) - h(3,3) + h(6) - h(4,2)"));
  CHECK(commutative_jacobi_trudi({5}) == parse_text("h(5)"));
  CHECK(commutative_jacobi_trudi({2, 1}, IntSeq{2, 1}) == BasisExpr::unit(Basis::h_sym));
}

TEST_CASE("skew forgetful instance") {
  CHECK(forgetful_to_h(skew_immaculate_to_H({{4, 3, 3}, {2, 2}})) == commutative_jacobi_trudi({4, 3, 3}, IntSeq{2, 2}));
}

TEST_CASE("property: forgetful image of ndet is the commutative determinant") {
  testing_gen::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const int k = testing_gen::uniform(rng, 1, 5);
    const IntSeq mu = testing_gen::random_seq(rng, k, -2, 6);
    const IntSeq nu = testing_gen::random_seq(rng, k, -2, 3);
    CHECK(forgetful_to_h(ndet_expand(jacobi_trudi_matrix(mu, nu))) == commutative_jacobi_trudi(mu, nu));
  }
}

TEST_CASE("duality transpose check") {
  for (int n = 1; n <= 6; ++n) {
    const CheckReport r = duality_transpose_check(n);
    CHECK(r.pass);
    CHECK_FALSE(r.counterexample.has_value());
  }
  CHECK(duality_transpose_check(3).to_json() ==
        R"({"check":"duality_transpose","n":3,"pass":true,"counterexample":null})");
}
