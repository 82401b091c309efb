#include <sstream>

#include "doctest.h"
#include "switchchain/canonical_path.hpp"
#include "switchchain/encoding.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/errors.hpp"

using namespace swc;

namespace {

PathTrace path(const StateSpace& s, std::size_t a, std::size_t b, std::uint64_t k) {
  return build_canonical_path(s.states[a], s.states[b], pairing_at(sym_diff(s.states[a], s.states[b]), k));
}

}  // namespace

TEST_CASE("encoding labels") {
  const StateSpace s = enumerate_omega(4, 2);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      const Digraph &g = s.states[a], &g2 = s.states[b];
      const PathTrace tr = path(s, a, b, 0);
      for (const Digraph& z : tr.states) {
        const Encoding l = encoding_of(g, g2, z);
        REQUIRE(l.sums_ok());
        for (const LabelledArc& la : l.bad_arcs()) {
          CHECK(g.has(la.arc) == g2.has(la.arc));  // never in the symmetric difference
          if (la.label == -1) CHECK((!g.has(la.arc) && z.has(la.arc)));
          if (la.label == 2) CHECK((g.has(la.arc) && !z.has(la.arc)));
        }
        CHECK(is_z_valid(l, z));
      }
      CHECK(encoding_of(g, g2, g).to_digraph() == g2);
    }
}

TEST_CASE("encoding text round trip") {
  const StateSpace s = enumerate_omega(5, 2);
  const PathTrace tr = path(s, 3, 150, 0);
  const Encoding l = encoding_of(s.states[3], s.states[150], tr.states[tr.states.size() / 2]);
  std::stringstream io;
  write_encoding(io, l);
  CHECK(read_encoding(io) == l);
  std::istringstream bad("2 1\n0 3\n1 0\n");
  CHECK_THROWS_AS(read_encoding(bad), ContractError);
}

TEST_CASE("encoding switches") {
  Encoding l(4, 1);
  l.at(0, 1) = 1;
  l.at(2, 3) = 1;
  l.at(1, 2) = 1;
  l.at(3, 0) = 1;
  CHECK(encoding_switch_legal(l, 0, 0, 1, 2, 3));
  CHECK_FALSE(encoding_switch_legal(l, 0, 0, 1, 1, 2));
  Encoding m = l;
  apply_encoding_switch(m, 0, 0, 1, 2, 3);
  CHECK(m.at(0, 3) == 1);
  CHECK(m.at(2, 1) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.sums_ok());
  Encoding r = l;
  apply_encoding_switch(r, 1, 1, 0, 3, 2);  // same move through the converse
  CHECK(r == m);
}

TEST_CASE("repair on (4,1) and (4,2) paths") {
  for (auto [n, d] : {std::pair{4, 1}, std::pair{4, 2}}) {
    const StateSpace s = enumerate_omega(n, d);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        const ColouredDiff h = sym_diff(s.states[a], s.states[b]);
        for_each_pairing(h, [&](const Pairing& p) {
          const PathTrace tr = build_canonical_path(s.states[a], s.states[b], p);
          for (const Digraph& z : tr.states) {
            const RepairResult rr = repair(encoding_of(s.states[a], s.states[b], z), z);
            CHECK(rr.switches.size() <= 3);
            CHECK(rr.fallbacks == 0);
            CHECK(s.find(rr.result).has_value());
            const ReverseCount rc = count_reverse_reachable(rr.result, z);
            CHECK(rc.step_bounds_hold);
            CHECK(static_cast<double>(rc.total) <= rc.bound);
          }
        });
      }
  }
}

TEST_CASE("repair when the (-1,2) vertex delta is missing") {
  // found by the exhaustive (5,2) sweep: the only label-1 arc into gamma
  // starts at beta, or meets a -1 at (delta, beta)
  const StateSpace s = enumerate_omega(5, 2);
  struct Case {
    std::size_t a, b;
    std::uint64_t pairing;
    std::size_t state;
  };
  for (const Case& c : {Case{0, 179, 3, 3}, Case{18, 59, 2, 1}}) {
    const PathTrace tr = path(s, c.a, c.b, c.pairing);
    const Digraph& z = tr.states[c.state];
    const Encoding l = encoding_of(s.states[c.a], s.states[c.b], z);
    REQUIRE(is_z_valid(l, z));
    REQUIRE(l.bad_count() == 3);
    const RepairResult rr = repair(l, z);
    CHECK(rr.fallbacks >= 1);
    CHECK(rr.switches.size() <= 3);
    for (std::size_t j = 0; j + 1 < rr.bad_counts.size(); ++j) CHECK(rr.bad_counts[j + 1] < rr.bad_counts[j]);
    CHECK(s.find(rr.result).has_value());
  }
}

TEST_CASE("preimages on (4,1)") {
  const StateSpace s = enumerate_omega(4, 1);
  std::size_t worst = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      const ColouredDiff h = sym_diff(s.states[a], s.states[b]);
      for_each_pairing(h, [&](const Pairing& p) {
        const PathTrace tr = build_canonical_path(s.states[a], s.states[b], p);
        for (std::size_t k = 0; k < tr.length(); ++k) {
          const Encoding l = encoding_of(s.states[a], s.states[b], tr.states[k]);
          const std::size_t c = count_preimages(s, tr.states[k], tr.states[k + 1], l, pair_template(p));
          CHECK(c >= 1);
          worst = std::max(worst, c);
        }
      });
    }
  CHECK(worst <= 4);
}
