#include <doctest.h>

#include <random>

#include "gordan/covariant.hpp"
#include "gordan/transvectant.hpp"

using namespace gordan;

TEST_CASE("generic forms carry the binomial convention") {
  auto s2 = FormSpace::make({2});
  auto u = generic_form(s2, 0);
  CHECK(u.cov->value().str() == "a0*x^2 + 2*a1*x*y + a2*y^2");

  auto s0 = FormSpace::make({0});
  CHECK(generic_form(s0, 0).cov->value().str() == "a0");

  auto s3 = FormSpace::make({3});
  CHECK(generic_form(s3, 0).cov->value().str() ==
        "a0*x^3 + 3*a1*x^2*y + 3*a2*x*y^2 + a3*y^3");

  CHECK_THROWS_AS(generic_form(s3, 1), UsageError);
}

TEST_CASE("generic forms are bihomogeneous") {
  for (int n : {1, 2, 5}) {
    auto space = FormSpace::make({n});
    auto f = generic_form(space, 0);
    CHECK(f.cov->order() == n);
    CHECK(f.cov->multidegree() == std::vector<int>{1});
    CHECK(f.cov->homogeneous());
    CHECK(f.cov->covariant_consistent());
  }
}

TEST_CASE("unimodular matrices") {
  CHECK_THROWS_AS(UnimodularMatrix(1, 1, 1, 1), UsageError);
  UnimodularMatrix g(2, 3, 1, 2);
  CHECK(g * g.inverse() == UnimodularMatrix::identity());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto m = UnimodularMatrix::random(rng);
    CHECK(m.a * m.d - m.b * m.c == 1);
    CHECK(abs(m.a) <= 10);
  }
}

TEST_CASE("identity acts trivially, inverses cancel") {
  auto space = FormSpace::make({3});
  auto f = *generic_form(space, 0).cov;
  auto h = transvectant(f, transvectant(f, f, 2), 1);
  CHECK(sl2_act(UnimodularMatrix::identity(), h).same_polynomial(h));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    auto g = UnimodularMatrix::random(rng, 6);
    auto back = sl2_act(g, sl2_act(g.inverse(), h));
    CHECK(back.same_polynomial(h));
  }
}

TEST_CASE("group action composes") {
  auto space = FormSpace::make({2});
  auto u = *generic_form(space, 0).cov;
  std::mt19937_64 rng(19);
  for (int i = 0; i < 4; ++i) {
    auto g = UnimodularMatrix::random(rng, 5);
    auto h = UnimodularMatrix::random(rng, 5);
    auto lhs = sl2_act(g, sl2_act(h, u));
    auto rhs = sl2_act(g * h, u);
    CHECK(lhs.same_polynomial(rhs));
  }
}

TEST_CASE("pipeline invariants are fixed points of the action") {
  auto space = FormSpace::make({3});
  auto f = *generic_form(space, 0).cov;
  auto h22 = transvectant(f, f, 2);
  auto h33 = transvectant(f, h22, 1);
  auto disc = transvectant(f, h33, 3);
  REQUIRE(disc.order() == 0);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 6; ++i) {
    auto g = UnimodularMatrix::random(rng, 8);
    CHECK(sl2_act(g, disc).same_polynomial(disc));
  }
}

TEST_CASE("coefficient vectors") {
  auto space = FormSpace::make({2});
  const auto& vars = space->vars();
  // monomial list (x^2, x*y, y^2)
  std::vector<Exp> basis;
  for (int j = 0; j <= 2; ++j) {
    Exp e(vars->size(), 0);
    e[space->x_index()] = static_cast<std::uint16_t>(2 - j);
    e[space->y_index()] = static_cast<std::uint16_t>(j);
    basis.push_back(std::move(e));
  }
  Exp x2(vars->size(), 0);
  x2[space->x_index()] = 2;
  auto c = Covariant::from_value(space, MultiPoly::monomial(vars, x2, 1));
  auto v = coefficient_vector(c, basis);
  CHECK(v == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

  auto z = Covariant::zero(space);
  CHECK(coefficient_vector(z, basis) == std::vector<Rat>(3, Rat(0)));

  // a term outside the list is a consistency error
  auto u = *generic_form(space, 0).cov;
  CHECK_THROWS_AS(coefficient_vector(u, basis), InternalError);

  // round trip on a random covariant: vector against its own support
  auto h = transvectant(u, u, 2);
  std::vector<Exp> support;
  for (const auto& t : h.value().terms()) support.push_back(t.exp);
  auto coords = coefficient_vector(h, support);
  MultiPoly back = MultiPoly::zero(vars);
  for (std::size_t i = 0; i < support.size(); ++i)
    back += MultiPoly::monomial(vars, support[i], coords[i]);
  CHECK(back == h.value());
}

TEST_CASE("source layers rebuild the full polynomial") {
  auto space = FormSpace::make({4, 3});
  auto f = *generic_form(space, 0).cov;
  auto g = *generic_form(space, 1).cov;
  for (int r = 0; r <= 3; ++r) {
    auto t = transvectant(f, g, r);  // source-backed
    auto direct = transvectant_operator_route(f, g, r);
    CHECK(t.value() == direct.value());
  }
}
