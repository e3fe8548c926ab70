#include <limits>
#include <set>

#include "doctest.h"
#include "nsym/combinatorics.hpp"
#include "nsym/expr.hpp"
#include "nsym/serialize.hpp"
#include "support/generators.hpp"

using namespace nsym;

namespace {

BasisExpr H(std::initializer_list<std::pair<std::vector<int>, Coeff>> terms) {
  BasisExpr e(Basis::H);
  for (const auto& [idx, c] : terms) e.add_term(Composition(idx), c);
  return e;
}

}  // namespace

TEST_CASE("normalize_h_index drops zeros and kills negatives") {
  CHECK(normalize_h_index({3, 0, 3}) == Composition{3, 3});
  CHECK_FALSE(normalize_h_index({1, -1, 2}).has_value());
  CHECK(normalize_h_index({2, 5, 3}) == Composition{2, 5, 3});
  CHECK(normalize_h_index({0, 0}) == Composition{});
}

TEST_CASE("normalize_h_index is idempotent on survivors") {
  testing_gen::Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    IntSeq raw = testing_gen::random_seq(rng, testing_gen::uniform(rng, 0, 6), -1, 3);
    if (auto c = normalize_h_index(raw)) CHECK(normalize_h_index(c->as_seq()) == c);
  }
}

TEST_CASE("composition rejects nonpositive parts") {
  CHECK_THROWS_AS(Composition({1, 0}), Error);
  CHECK(Composition{2, 1}.weight() == 3);
  CHECK(Composition{3, 1, 1}.is_partition());
  CHECK_FALSE(Composition{1, 2}.is_partition());
}

TEST_CASE("compositions and partitions of n") {
  CHECK(compositions_of(0) == std::vector<Composition>{Composition{}});
  CHECK(compositions_of(3) ==
        std::vector<Composition>{Composition{1, 1, 1}, Composition{1, 2}, Composition{2, 1}, Composition{3}});
  for (int n = 1; n <= 8; ++n) CHECK(compositions_of(n).size() == (1u << (n - 1)));
  CHECK(partitions_of(4) == std::vector<Composition>{Composition{1, 1, 1, 1}, Composition{2, 1, 1},
                                                     Composition{2, 2}, Composition{3, 1}, Composition{4}});
  CHECK(partitions_of(7).size() == 15);
}

TEST_CASE("expr_add") {
  CHECK(expr_add(H({{{2}, 1}}), H({{{2}, -1}})).empty());
  CHECK(expr_add(H({{{3}, 1}}), H({{{2, 1}, 1}})) == H({{{3}, 1}, {{2, 1}, 1}}));
  CHECK(expr_add(H({{{1}, 2}}), H({{{1}, 3}})) == H({{{1}, 5}}));
  CHECK_THROWS_AS(expr_add(H({{{1}, 1}}), BasisExpr::term(Basis::R, {1})), Error);
}

TEST_CASE("coefficient overflow is reported, never wrapped") {
  BasisExpr e = BasisExpr::term(Basis::H, {1}, std::numeric_limits<Coeff>::max());
  CHECK_THROWS_AS(e.add_term(Composition{1}, 1), Error);
  CHECK_THROWS_AS(e.scaled(2), Error);
}

TEST_CASE("h_multiply concatenates in order") {
  CHECK(h_multiply(H({{{2}, 1}}), H({{{3, 1}, 1}})) == H({{{2, 3, 1}, 1}}));
  CHECK(h_multiply(H({{{1}, 1}, {{2}, -1}}), H({{{1}, 1}})) == H({{{1, 1}, 1}, {{2, 1}, -1}}));
  const BasisExpr x = H({{{2, 1}, 3}, {{1}, -1}});
  CHECK(h_multiply(BasisExpr::unit(Basis::H), x) == x);
  CHECK(h_multiply(x, BasisExpr::unit(Basis::H)) == x);
}

TEST_CASE("h_multiply is associative on random triples") {
  testing_gen::Rng rng(12);
  auto random_expr = [&] {
    BasisExpr e(Basis::H);
    const int terms = testing_gen::uniform(rng, 0, 4);
    for (int i = 0; i < terms; ++i) {
      e.add_term(Composition(testing_gen::random_composition(rng, testing_gen::uniform(rng, 0, 3), 3)),
                 testing_gen::uniform(rng, -3, 3));
    }
    return e;
  };
  for (int t = 0; t < 200; ++t) {
    BasisExpr a = random_expr(), b = random_expr(), c = random_expr();
    CHECK(h_multiply(h_multiply(a, b), c) == h_multiply(a, h_multiply(b, c)));
  }
}

TEST_CASE("coarsen") {
  CHECK(coarsen({5, 2, 1, 4, 3, 3, 2, 6, 2, 3}, {2, 3, 5, 8}) == IntSeq{5, 7, 6, 2, 8, 3});
  CHECK(coarsen({4, 1, 2}, {}) == IntSeq{4, 1, 2});
  CHECK(coarsen({1, 1}, {1}) == IntSeq{2});
  CHECK_THROWS_AS(coarsen({1, 1}, {2}), Error);
  CHECK_THROWS_AS(coarsen({1, 1}, {0}), Error);
}

TEST_CASE("coarsenings") {
  CHECK(coarsenings({1, 2}) == std::vector<Composition>{Composition{1, 2}, Composition{3}});
  CHECK(coarsenings({1, 1, 1}) ==
        std::vector<Composition>{Composition{1, 1, 1}, Composition{1, 2}, Composition{2, 1}, Composition{3}});
  CHECK(coarsenings({7}) == std::vector<Composition>{Composition{7}});
  for (const Composition& c : compositions_of(7)) {
    const auto all = coarsenings(c);
    CHECK(all.size() == (1u << (c.size() - 1)));
    CHECK(std::set<Composition>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("flatten") {
  CHECK(flatten({5, 0, 3, 0, 1, 5, 0, 4}) == Composition{5, 3, 1, 5, 4});
  CHECK(flatten({2, 1, 2}) == Composition{2, 1, 2});
  CHECK(flatten({0, 0, 0}) == Composition{});
  CHECK_THROWS_AS(flatten({1, -1}), Error);
}

TEST_CASE("allowable_flat_subsets") {
  CHECK(allowable_flat_subsets({5, 0, 3, 0, 1, 5, 0, 4}, {5, 3, 1, 9}) ==
        std::vector<PositionSet>{{1, 3, 6, 7}});
  CHECK(allowable_flat_subsets({2, 1, 2}, {2, 1, 2}) == std::vector<PositionSet>{{}});
  CHECK(allowable_flat_subsets({5, 0, 3, 0, 1, 5, 0, 4}, {5, 3, 1, 5, 4}) == std::vector<PositionSet>{{1, 3, 6}});
}

TEST_CASE("allowable flat subset is unique for every coarsening of the flattening") {
  for (int len = 1; len <= 6; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      IntSeq delta;
      for (int i = 0, c = code; i < len; ++i, c /= 3) delta.push_back(c % 3);
      if (delta[0] == 0) continue;
      for (const Composition& target : coarsenings(flatten(delta))) {
        CHECK(allowable_flat_subsets(delta, target).size() == 1);
      }
    }
  }
}

TEST_CASE("lehmer code and permutation sign") {
  CHECK(lehmer_code(Permutation({4, 7, 3, 1, 6, 2, 5})) == IntSeq{3, 5, 2, 0, 2, 0, 0});
  CHECK(permutation_sign(Permutation({4, 7, 3, 1, 6, 2, 5})) == 1);
  CHECK(lehmer_code(Permutation::identity(4)) == IntSeq{0, 0, 0, 0});
  CHECK(permutation_sign(Permutation::identity(4)) == 1);
  CHECK(lehmer_code(Permutation({2, 1})) == IntSeq{1, 0});
  CHECK(permutation_sign(Permutation({2, 1})) == -1);
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
}

TEST_CASE("permutation sign matches brute-force inversion parity on S_5") {
  for (const auto& p : testing_gen::all_permutations(5)) {
    CHECK(permutation_sign(Permutation(p)) == (testing_gen::inversions(p) % 2 ? -1 : 1));
  }
}

TEST_CASE("linear permutations") {
  const auto two = linear_permutations(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].chosen() == std::vector<int>{1});
  CHECK(linear_sign(two[0]) == 1);
  CHECK(two[1].chosen() == std::vector<int>{2});
  CHECK(linear_sign(two[1]) == -1);
  CHECK(linear_permutations(4, 2).size() == 12);
  CHECK(linear_permutations(5, 3).size() == 60);
  for (const auto& pi : linear_permutations(5, 5)) {
    CHECK(linear_sign(pi) == permutation_sign(Permutation(pi.chosen())));
  }
}

TEST_CASE("linear permutations stream in lexicographic order") {
  const auto all = linear_permutations(4, 2);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].chosen() < all[i].chosen());
}

TEST_CASE("text serialization") {
  const BasisExpr e = H({{{3, 1, 3}, 1}, {{3, 2, 2}, -1}, {{1}, 2}});
  CHECK(to_text(e) == "2*H(1) + H(3,1,3) - H(3,2,2)");
  CHECK(to_text(BasisExpr(Basis::R)) == "0");
  CHECK(to_text(BasisExpr::unit(Basis::H)) == "H()");
  CHECK(to_text(BasisExpr::term(Basis::H, {2}, -3)) == "-3*H(2)");
  CHECK(to_text(BasisExpr::term(Basis::h_sym, {2, 1})) == "h(2,1)");
  CHECK(parse_text(to_text(e)) == e);
  CHECK(parse_text("0", Basis::R) == BasisExpr(Basis::R));
  CHECK(parse_text("H()") == BasisExpr::unit(Basis::H));
  CHECK(parse_text(" - H(3,2) +H(4,1)") == H({{{3, 2}, -1}, {{4, 1}, 1}}));
  CHECK_THROWS_AS(parse_text("H(1) R(2)"), Error);
  CHECK_THROWS_AS(parse_text("H(1) + R(2)"), Error);
  CHECK_THROWS_AS(parse_text("H(0)"), Error);
  CHECK_THROWS_AS(parse_text("Q(1)"), Error);
}

TEST_CASE("json serialization") {
  const BasisExpr e = H({{{1, 2, 3}, 1}, {{3, 3}, -1}, {{6}, 1}, {{4, 2}, -1}});
  CHECK(to_json(e) ==
        R"({"basis":"H","terms":[{"coeff":1,"index":[1,2,3]},{"coeff":-1,"index":[3,3]},)"
        R"({"coeff":-1,"index":[4,2]},{"coeff":1,"index":[6]}]})");
  CHECK(parse_json(to_json(e)) == e);
  const BasisExpr d = BasisExpr::term(Basis::dI, {2, 1}, -4);
  CHECK(parse_json(to_json(d)) == d);
  CHECK_THROWS_AS(parse_json("{\"basis\":\"H\"}"), Error);
  CHECK_THROWS_AS(parse_json("not json"), Error);
}

TEST_CASE("latex serialization") {
  CHECK(to_latex(H({{{3, 2}, -1}, {{4, 1}, 1}})) == "-H_{(3,2)} + H_{(4,1)}");
  CHECK(to_latex(BasisExpr::term(Basis::R, {2}, 2)) == "2 R_{(2)}");
  CHECK(to_latex(BasisExpr(Basis::H)) == "0");
}
