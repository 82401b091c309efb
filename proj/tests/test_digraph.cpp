#include <sstream>

#include "doctest.h"
#include "switchchain/digraph.hpp"
#include "switchchain/errors.hpp"

using namespace swc;

namespace {
Digraph from(int n, int d, std::vector<Arc> arcs) {
  for (Arc& a : arcs) a = {a.tail - 1, a.head - 1};
  return Digraph::from_arcs(n, d, arcs);
}
}  // namespace

TEST_CASE("switch validity") {
  const Digraph g = from(4, 1, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK_FALSE(switch_valid(g, {0, 1}, {1, 2}));  // incident arcs
  CHECK(switch_valid(g, {0, 1}, {2, 3}));

  // (1,2),(3,4) present together with (1,4): the switch would duplicate (1,4)
  const Digraph h = Digraph::from_arcs(4, 2, {{0, 1}, {0, 3}, {1, 2}, {1, 0}, {2, 3}, {2, 1}, {3, 0}, {3, 2}});
  CHECK_FALSE(switch_valid(h, {0, 1}, {2, 3}));
}

TEST_CASE("switch [a b c d] moves heads") {
  const Digraph g = from(4, 1, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const Switch s{{0, 1, 2, 3}};
  REQUIRE(switch_applicable(g, s));
  const Digraph z = apply_switch(g, s);
  CHECK(z.has(0, 3));
  CHECK(z.has(2, 1));
  CHECK_FALSE(z.has(0, 1));
  CHECK_FALSE(z.has(2, 3));
  CHECK(z.is_regular());
  CHECK(apply_switch(z, Switch{{0, 3, 2, 1}}) == g);
  CHECK(s.same_move(Switch{{2, 3, 0, 1}}));
}

TEST_CASE("converse and complement commute") {
  for (int d = 1; d <= 3; ++d) {
    const Digraph g = circulant(5, d);
    CHECK(complement(converse(g)) == converse(complement(g)));
    CHECK(converse(converse(g)) == g);
    CHECK(complement(g).d() == 4 - d);
    CHECK(complement(g).is_regular());
  }
}

TEST_CASE("resolved zeta chi switches") {
  auto eq = [](const Switch& s, std::array<Vertex, 4> v) { return s.v == v; };
  CHECK(eq(resolve_zeta_chi_switch(0, 0, 1, 2, 3, 4), {1, 2, 3, 4}));
  CHECK(eq(resolve_zeta_chi_switch(0, 1, 1, 2, 3, 4), {1, 4, 3, 2}));
  CHECK(eq(resolve_zeta_chi_switch(1, 0, 1, 2, 3, 4), {2, 1, 4, 3}));
  CHECK(eq(resolve_zeta_chi_switch(1, 1, 1, 2, 3, 4), {2, 3, 4, 1}));
}

TEST_CASE("digraph text round trip") {
  const Digraph g = circulant(6, 2);
  CHECK(from_text(to_text(g)) == g);
  CHECK(to_text(circulant(4, 1)) == "4 1\n1 2\n2 3\n3 4\n4 1\n");
  CHECK_THROWS_AS(from_text("4 1\n1 2\n2"), ContractError);
}

TEST_CASE("symmetric difference is balanced") {
  const Digraph g = circulant(5, 2);
  const Digraph g2 = converse(g);
  const ColouredDiff h = sym_diff(g, g2);
  CHECK(h.balanced());
  CHECK(h.blue.arc_count() == h.red.arc_count());
  for (const Arc& a : h.blue_arcs()) CHECK_FALSE(g2.has(a));
}
