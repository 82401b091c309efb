#include "doctest.h"
#include "switchchain/flow.hpp"
#include "switchchain/verify.hpp"

using namespace swc;

TEST_CASE("exact flow on (4,1)") {
  const StateSpace s = enumerate_omega(4, 1);
  const TransitionMatrix p(s, build_metagraph(s));
  const Spectrum sp = spectrum(p);
  const FlowAudit au = build_flow(s);
  CHECK_FALSE(au.sampled);
  CHECK(au.paths == 72);
  CHECK(au.conservation_failures == 0);
  CHECK(au.simplicity_violations.empty());
  CHECK(au.path_failures.empty());
  CHECK(au.max_path_length <= 4);
  CHECK(au.bad_pair_limits_hold);
  BigRational total = 0;
  for (const auto& [e, f] : au.flow) total += f;
  CHECK(total > 0);
  const BoundsReport br = verify_bounds(au, sp, 4, 1);
  CHECK(br.all_hold());
  CHECK(to_string(BigRational(3, 6)) == "1/2");
}

TEST_CASE("consistent pairings") {
  const StateSpace s = enumerate_omega(5, 2);
  for (std::size_t a = 0; a < s.size(); a += 37)
    for (std::size_t b = 1; b < s.size(); b += 41) {
      if (a == b) continue;
      const Digraph &g = s.states[a], &g2 = s.states[b];
      const ColouredDiff h = sym_diff(g, g2);
      const BigInt psi = count_pairings(h);
      const PathTrace tr = build_canonical_path(g, g2, pairing_at(h, 0));
      for (const Digraph& z : tr.states) {
        const BigInt c = count_consistent_pairings(g, g2, z);
        CHECK(c >= 1);
        CHECK(c <= psi * BigInt(65536));  // d^16 with d = 2
        const BadPairReport bp = bad_pairs(g, g2, z, pairing_at(h, 0));
        CHECK(bp.within_limits);
      }
    }
}

TEST_CASE("suite on (4,1)") {
  const CheckList cl = run_suite(4, 1);
  for (const Check& c : cl.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}
