#include <cmath>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "switchchain/chain.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/errors.hpp"
#include "switchchain/verify.hpp"

using namespace swc;

namespace {

struct Frozen {
  int n, d;
  std::size_t count;
  int tau25, tau01;
};

// values computed once by the brute-force oracle and frozen here
constexpr Frozen kFrozen[] = {
    {4, 1, 9, 5, 19}, {5, 1, 44, 6, 18}, {6, 1, 265, 7, 19}, {4, 2, 9, 23, 93}, {5, 2, 216, 21, 59},
};

}  // namespace

TEST_CASE("oracle reproduces the frozen values") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.n);
    CAPTURE(f.d);
    const oracle::Chain c = oracle::chain(f.n, f.d);
    CHECK(c.states.size() == f.count);
    CHECK(oracle::connected(c));
    CHECK(oracle::mixing_time(c, 0.25) == f.tau25);
    CHECK(oracle::mixing_time(c, 0.01) == f.tau01);
  }
  CHECK(oracle::omega(6, 2).size() == 7570);
  CHECK(oracle::derangements(4) == 9);
  CHECK(oracle::derangements(5) == 44);
}

TEST_CASE("derangement counts") {
  for (int n = 0; n <= 10; ++n) CHECK(derangements(n) == oracle::derangements(n));
  CHECK(derangements(6) == 265);
}

TEST_CASE("enumeration matches the oracle state by state") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.n);
    CAPTURE(f.d);
    const StateSpace s = enumerate_omega(f.n, f.d);
    REQUIRE(s.size() == f.count);
    std::set<std::vector<std::uint32_t>> mine;
    for (const Digraph& g : s.states) {
      std::vector<std::uint32_t> rows;
      for (int v = 0; v < f.n; ++v) rows.push_back(static_cast<std::uint32_t>(g.out_row(v)));
      mine.insert(rows);
    }
    const auto ref = oracle::omega(f.n, f.d);
    CHECK(mine == std::set<std::vector<std::uint32_t>>(ref.begin(), ref.end()));
  }
  CHECK(enumerate_omega(6, 2).size() == 7570);
}

TEST_CASE("complement symmetry of counts") {
  CHECK(enumerate_omega(5, 3).size() == enumerate_omega(5, 1).size());
  CHECK(enumerate_omega(6, 4).size() == 265);
}

TEST_CASE("state cap") {
  CHECK_THROWS_AS(enumerate_omega(6, 2, 100), CapExceeded);
}

TEST_CASE("transition matrix agrees with the oracle") {
  for (auto [n, d] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    const StateSpace s = enumerate_omega(n, d);
    const TransitionMatrix p(s, build_metagraph(s));
    const oracle::Chain c = oracle::chain(n, d);
    std::vector<std::size_t> at(c.states.size());  // oracle index -> library index
    for (std::size_t k = 0; k < c.states.size(); ++k) {
      std::vector<Arc> arcs;
      for (int t = 0; t < n; ++t)
        for (int h = 0; h < n; ++h)
          if ((c.states[k][t] >> h) & 1u) arcs.push_back({t, h});
      at[k] = s.index_of(Digraph::from_arcs(n, d, arcs));
    }
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y)
        CHECK(p.value(at[x], at[y]) == doctest::Approx(c.p[x][y]).epsilon(1e-12));
    CHECK(p.symmetric());
    CHECK(p.rows_sum_to_one());
    for (std::size_t x = 0; x < s.size(); ++x) CHECK(p.stay_count(x) >= 1);
  }
}

TEST_CASE("(4,1) off-diagonal entries are 1/6") {
  const StateSpace s = enumerate_omega(4, 1);
  const TransitionMatrix p(s, build_metagraph(s));
  CHECK(p.denominator() == 6);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y : p.neighbours(x)) CHECK(p.entry(x, y) == Rational64(1, 6));
}

TEST_CASE("spectrum and exact mixing time") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.n);
    CAPTURE(f.d);
    const StateSpace s = enumerate_omega(f.n, f.d);
    const TransitionMatrix p(s, build_metagraph(s));
    const Spectrum sp = spectrum(p);
    CHECK(sp.lambda0() == doctest::Approx(1.0));
    CHECK(sp.lambda_min() > -1.0);
    CHECK(1.0 / (1.0 + sp.lambda_min()) <= 0.25 * f.d * f.d * f.n * f.n + 1e-8);
    CHECK(exact_mixing_time(p, sp, 0.25).tau == f.tau25);
    CHECK(exact_mixing_time(p, sp, 0.01).tau == f.tau01);
    CHECK(std::log(static_cast<double>(s.size())) <= f.d * f.n * std::log(f.d * f.n));
  }
}

TEST_CASE("sampler is deterministic and stays in Omega") {
  const StateSpace s = enumerate_omega(5, 2);
  Rng a(42), b(42);
  const Digraph x = sample(circulant(5, 2), 500, a);
  const Digraph y = sample(circulant(5, 2), 500, b);
  CHECK(x == y);
  CHECK(s.find(x).has_value());
  Rng c(43);
  Digraph z = circulant(5, 2);
  for (int t = 0; t < 200; ++t) {
    z = step(z, c);
    REQUIRE(z.is_regular());
  }
}

TEST_CASE("pair unranking") {
  std::size_t r = 0;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b) CHECK(unrank_pair(r++, 7) == std::pair{a, b});
  CHECK(choose2(7) == 21);
}
