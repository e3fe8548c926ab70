#include <algorithm>

#include "doctest.h"
#include "nsym/error.hpp"
#include "nsym/combinatorics.hpp"
#include "nsym/expansions.hpp"
#include "nsym/ribbon.hpp"
#include "nsym/serialize.hpp"
#include "support/generators.hpp"
#include "support/laplace.hpp"

using namespace nsym;
namespace oracle = testing_oracle;

TEST_CASE("ribbon to H") {
  CHECK(ribbon_to_H(parse_text("R(2,1)")) == parse_text("H(2,1) - H(3)"));
  CHECK(ribbon_to_H(parse_text("R(5)")) == parse_text("H(5)"));
  CHECK(ribbon_to_H(parse_text("R(1,1)")) == parse_text("H(1,1) - H(2)"));
  CHECK_THROWS_AS(ribbon_to_H(parse_text("H(1)")), Error);
}

TEST_CASE("H to ribbon") {
  CHECK(H_to_ribbon(parse_text("H(2,1)")) == parse_text("R(2,1) + R(3)"));
  CHECK(H_to_ribbon(parse_text("H(1,1,1)")) == parse_text("R(1,1,1) + R(2,1) + R(1,2) + R(3)"));
  CHECK(H_to_ribbon(BasisExpr::unit(Basis::H)) == BasisExpr::unit(Basis::R));
}

TEST_CASE("conversions are mutually inverse on compositions of n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Composition& c : compositions_of(n)) {
      CHECK(ribbon_to_H(H_to_ribbon(BasisExpr::term(Basis::H, c))) == BasisExpr::term(Basis::H, c));
      CHECK(H_to_ribbon(ribbon_to_H(BasisExpr::term(Basis::R, c))) == BasisExpr::term(Basis::R, c));
    }
  }
}

TEST_CASE("conversions match an independent coarsening sum") {
  testing_gen::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    BasisExpr h(Basis::H);
    for (int i = 0; i < 3; ++i) {
      h.add_term(Composition(testing_gen::random_composition(rng, testing_gen::uniform(rng, 1, 5), 3)),
                 testing_gen::uniform(rng, -2, 2));
    }
    CHECK(oracle::to_poly(H_to_ribbon(h)) == oracle::coarsen_all(oracle::to_poly(h), false));
    CHECK(ribbon_to_H(H_to_ribbon(h)) == h);
  }
}

TEST_CASE("ribbon product") {
  CHECK(ribbon_product({2}, {1}) == parse_text("R(2,1) + R(3)"));
  CHECK(ribbon_product({1, 1}, {2}) == parse_text("R(1,1,2) + R(1,3)"));
  CHECK_THROWS_AS(ribbon_product({}, {1}), Error);
}

TEST_CASE("ribbon product agrees with H multiplication") {
  testing_gen::Rng rng(32);
  for (int t = 0; t < 50; ++t) {
    const Composition a(testing_gen::random_composition(rng, testing_gen::uniform(rng, 1, 4), 4));
    const Composition b(testing_gen::random_composition(rng, testing_gen::uniform(rng, 1, 4), 4));
    CHECK(ribbon_to_H(ribbon_product(a, b)) ==
          h_multiply(ribbon_to_H(BasisExpr::term(Basis::R, a)), ribbon_to_H(BasisExpr::term(Basis::R, b))));
  }
}

TEST_CASE("class membership") {
  CHECK_FALSE(im2rib_class({1, 1, 2, 3}).has_value());
  CHECK(im2rib_class({4, 4, 2, 2, 2}) == 2);
  CHECK(im2rib_class({3, 3, 3, 3, 3}) == 3);
  CHECK(im2rib_class({5, 5, 3, 3, 3, 3}) == 3);
  CHECK(im2rib_class({1, 2, 3, 4}) == 4);
  CHECK(im2rib_class({2, 5, 3}) == 3);
  CHECK(im2rib_class({7}) == 1);
  CHECK(im2rib_class({1, 1, 1}) == 1);
}

TEST_CASE("two-rectangle shapes fall in the class") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= std::min(a, 4); ++b) {
      for (int c = b; c <= 6; ++c) {
        for (int d = 1; d <= 4; ++d) {
          std::vector<int> parts(b, a);
          parts.insert(parts.end(), d, c);
          const int k = b + d;
          const auto j = im2rib_class(Composition(parts));
          REQUIRE(j.has_value());
          CHECK(*j == std::min(c, k));
        }
      }
    }
  }
}

TEST_CASE("direct ribbon formula") {
  CHECK(immaculate_to_ribbon_direct({1, 1, 2, 3}, true) ==
        parse_text("R(1,1,2,3) - R(1,1,3,2) - R(1,2,1,3) + R(1,2,3,1) + R(1,3,1,2) - R(1,3,2,1)"));
  CHECK(H_to_ribbon(immaculate_to_H({1, 1, 2, 3})) == immaculate_to_ribbon_direct({1, 1, 2, 3}, true));
  CHECK(immaculate_to_ribbon_direct({6}) == parse_text("R(6)"));
  CHECK(immaculate_to_ribbon_direct({2, 2}) == parse_text("R(2,2) - R(3,1)"));
  CHECK(H_to_ribbon(parse_text("H(2,2) - H(3,1)")) == parse_text("R(2,2) - R(3,1)"));
  CHECK_THROWS_AS(immaculate_to_ribbon_direct({1, 1, 2, 3}), Error);
}

TEST_CASE("property: direct formula on the class, |alpha| <= 8, k <= 5") {
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& c : compositions_of(n)) {
      if (c.size() > 5 || !im2rib_class(c)) continue;
      CHECK(immaculate_to_ribbon_direct(c) == H_to_ribbon(immaculate_to_H(c.as_seq())));
    }
  }
}

TEST_CASE("property: direct formula on rectangles up to twelve cells") {
  for (int k = 1; k <= 12; ++k) {
    for (int m = 1; m * k <= 12; ++m) {
      const Composition rect(std::vector<int>(k, m));
      CHECK(immaculate_to_ribbon_direct(rect, false, kHardMaxRows) ==
            H_to_ribbon(immaculate_to_H(rect.as_seq(), {kHardMaxRows, 1})));
    }
  }
}

TEST_CASE("property: transposition involution cancels short ribbon terms on rectangles") {
  for (int k = 2; k <= 6; ++k) {
    for (int m = 1; m * k <= 12; ++m) {
      const IntSeq rect(k, m);
      EnumerationOptions opt;
      opt.prune_negative = true;
      BasisExpr short_terms(Basis::R);
      for (const auto& g : enumerate_coverings(rect, IntSeq(k, 0), opt)) {
        const IntSeq& delta = g.delta_seq;
        PositionSet zeros;
        for (int i = 2; i <= k; ++i) {
          if (delta[i - 1] == 0) zeros.push_back(i - 1);
        }
        for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
          PositionSet s;
          for (int i = 1; i < k; ++i) {
            if (mask & (1u << (i - 1))) s.push_back(i);
          }
          if (!std::includes(s.begin(), s.end(), zeros.begin(), zeros.end())) continue;
          const Composition beta(coarsen(delta, s));
          short_terms.add_term(beta, g.total_sign);

          const int i = s.front();
          CHECK(delta[i - 1] > 0);
          const auto f = transpose_covering(g, i);
          CHECK(f.total_sign == -g.total_sign);
          CHECK(std::all_of(f.delta_seq.begin(), f.delta_seq.end(), [](int x) { return x >= 0; }));
          for (int r = 2; r <= k; ++r) {
            if (f.delta_seq[r - 1] == 0) CHECK(std::binary_search(s.begin(), s.end(), r - 1));
          }
          CHECK(Composition(coarsen(f.delta_seq, s)) == beta);
          CHECK(transpose_covering(f, i).terminal_cells() == g.terminal_cells());
        }
      }
      CHECK(short_terms.empty());
    }
  }
}
