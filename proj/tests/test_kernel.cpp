#include <doctest.h>

#include <random>

#include "gordan/exact_matrix.hpp"
#include "gordan/multipoly.hpp"
#include "gordan/rank_tracker.hpp"

using namespace gordan;

namespace {

MultiPoly random_poly(const VarSpacePtr& vars, std::mt19937_64& rng, int terms,
                      int max_exp = 3) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-6, 6);
  std::vector<MultiPoly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    Exp exp(vars->size());
    for (auto& x : exp) x = static_cast<std::uint16_t>(e(rng));
    int num = c(rng);
    if (num == 0) num = 1;
    ts.push_back({std::move(exp), Rat(num)});
  }
  return MultiPoly::from_terms(vars, std::move(ts));
}

}  // namespace

TEST_CASE("polynomial ring axioms on random triples") {
  auto vars = VarSpace::make({"x", "y", "z"});
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_poly(vars, rng, 4);
    auto q = random_poly(vars, rng, 4);
    auto r = random_poly(vars, rng, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("basic products") {
  auto vars = VarSpace::make({"x", "y"});
  auto x = MultiPoly::variable(vars, 0);
  auto y = MultiPoly::variable(vars, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  auto p = random_poly(vars, *new std::mt19937_64(7), 5);
  CHECK((p * MultiPoly::zero(vars)).is_zero());
}

TEST_CASE("degree of zero is an error") {
  auto vars = VarSpace::make({"x"});
  CHECK_THROWS_AS(MultiPoly::zero(vars).total_degree(), UsageError);
}

TEST_CASE("derivative power rule and Leibniz") {
  auto vars = VarSpace::make({"x", "y"});
  auto x = MultiPoly::variable(vars, 0);
  auto y = MultiPoly::variable(vars, 1);
  CHECK(x.pow(3) * y == (x * x * x * y));
  CHECK((x.pow(3) * y).diff(0) == x.pow(2) * y * Rat(3));
  CHECK((y * y).diff(0).is_zero());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_poly(vars, rng, 4);
    auto q = random_poly(vars, rng, 4);
    CHECK((p * q).diff(0) == p.diff(0) * q + p * q.diff(0));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto vars = VarSpace::make({"x", "y"});
  auto x = MultiPoly::variable(vars, 0);
  auto y = MultiPoly::variable(vars, 1);
  std::mt19937_64 rng(13);
  std::map<std::size_t, MultiPoly> bind;
  bind[0] = random_poly(vars, rng, 3, 2);
  for (int trial = 0; trial < 15; ++trial) {
    auto p = random_poly(vars, rng, 4, 2);
    auto q = random_poly(vars, rng, 4, 2);
    CHECK((p * q).substitute(bind, vars) ==
          p.substitute(bind, vars) * q.substitute(bind, vars));
    CHECK((p + q).substitute(bind, vars) ==
          p.substitute(bind, vars) + q.substitute(bind, vars));
  }
  // renaming duplicated variables back to the base pair
  auto dup = VarSpace::make({"xa", "ya", "x", "y"});
  auto xa = MultiPoly::variable(dup, 0);
  auto ya = MultiPoly::variable(dup, 1);
  std::map<std::size_t, MultiPoly> trace;
  trace[0] = MultiPoly::variable(dup, 2);
  trace[1] = MultiPoly::variable(dup, 3);
  auto p = xa * ya * ya;
  auto traced = p.substitute(trace, dup);
  auto xv = MultiPoly::variable(dup, 2);
  auto yv = MultiPoly::variable(dup, 3);
  CHECK(traced == xv * yv * yv);
  // evaluation at zero
  std::map<std::size_t, MultiPoly> at0;
  at0[0] = MultiPoly::zero(dup);
  CHECK((xa * xa + ya).substitute(at0, dup) == ya);
}

TEST_CASE("mismatched spaces are usage errors") {
  auto a = VarSpace::make({"x"});
  auto b = VarSpace::make({"y"});
  auto p = MultiPoly::variable(a, 0);
  auto q = MultiPoly::variable(b, 0);
  CHECK_THROWS_AS(p * q, UsageError);
  CHECK_THROWS_AS(p.diff("z"), UsageError);
}

TEST_CASE("kernel of the identity is empty") {
  ExactMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.set(i, i, Rat(1));
  CHECK(m.rank() == 3);
  CHECK(m.kernel().empty());
}

TEST_CASE("kernel of a single relation") {
  ExactMatrix m(1, 2);
  m.set(0, 0, Rat(1));
  m.set(0, 1, Rat(1));
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Rat(-1));
  CHECK(ker[0][1] == Rat(1));
}

namespace {

// rank modulo a prime, for the modular cross-check
std::size_t rank_mod_p(const std::vector<std::vector<long>>& m, std::uint64_t p) {
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % p);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> w(m.size(),
                                            std::vector<std::uint64_t>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j)
      w[i][j] = static_cast<std::uint64_t>(((m[i][j] % (long)p) + (long)p) % (long)p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m[0].size() && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && w[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(w[sel], w[rank]);
    std::uint64_t inv = powmod(w[rank][col], p - 2);
    for (auto& x : w[rank]) x = mulmod(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || w[r][col] == 0) continue;
      std::uint64_t f = w[r][col];
      for (std::size_t c = 0; c < m[0].size(); ++c)
        w[r][c] = (w[r][c] + p - mulmod(f, w[rank][c])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rational rank agrees with modular rank on random 20x30") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-50, 50);
  std::vector<std::vector<long>> raw(20, std::vector<long>(30));
  ExactMatrix m(20, 30);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 30; ++j) {
      raw[i][j] = entry(rng);
      m.set(i, j, Rat(raw[i][j]));
    }
  std::size_t exact = m.rank();
  // retry with fresh primes on disagreement (an unlucky prime can only drop)
  std::vector<std::uint64_t> primes{(1ull << 61) - 1, 2305843009213693951ull,
                                    4611686018427387847ull};
  bool matched = false;
  for (auto p : primes) {
    if (rank_mod_p(raw, p) == exact) {
      matched = true;
      break;
    }
  }
  CHECK(matched);
  // kernel residuals vanish exactly
  for (const auto& v : m.kernel()) {
    for (const auto& r : m.apply(v)) CHECK(r == 0);
  }
}

TEST_CASE("kernel is deterministic") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-9, 9);
  ExactMatrix a(6, 10), b(6, 10);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 10; ++j) {
      long v = entry(rng);
      a.set(i, j, Rat(v));
      b.set(i, j, Rat(v));
    }
  auto ka = a.kernel(), kb = b.kernel();
  REQUIRE(ka.size() == kb.size());
  for (std::size_t i = 0; i < ka.size(); ++i) CHECK(ka[i] == kb[i]);
  CHECK(ka.size() == 10 - a.rank());
}

TEST_CASE("incremental tracker matches full elimination") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<int> dims(3, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int cols = dims(rng), rows = dims(rng);
    RankTracker tracker(cols);
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      std::vector<Int> v(cols);
      for (int j = 0; j < cols; ++j) {
        long x = entry(rng);
        v[j] = x;
        m.set(i, j, Rat(x));
      }
      tracker.add(std::move(v));
    }
    CHECK(tracker.rank() == m.rank());
  }
}

TEST_CASE("tracker rescales leading columns during reduction") {
  // row (1,1,0) against pivot row (0,2,1): the reduction must scale the
  // whole vector, keeping it inside the common row space
  RankTracker t(3);
  CHECK(t.add({0, 2, 1}));
  CHECK(t.add({1, 1, 0}));
  CHECK_FALSE(t.add({2, 0, -1}));  // 2*(1,1,0) - (0,2,1)
  CHECK(t.rank() == 2);
}
