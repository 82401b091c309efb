// Random instances too large to enumerate: sampled pairs, random pairing.

#include <vector>

#include "doctest.h"
#include "switchchain/canonical_path.hpp"
#include "switchchain/chain.hpp"
#include "switchchain/encoding.hpp"

using namespace swc;

TEST_CASE("random instances: canonical paths, encodings and repair") {
  std::size_t paths = 0, long_paths = 0, repeats = 0;
  for (auto [n, d] : std::vector<std::pair<int, int>>{{7, 2}, {7, 3}, {8, 3}, {10, 4}, {12, 5}})
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Rng r(seed * 1000 + n * 10 + d);
      const Digraph g = sample(circulant(n, d), 400, r);
      const Digraph g2 = sample(g, 400, r);
      if (g == g2) continue;
      const ColouredDiff h = sym_diff(g, g2);
      const BigInt count = count_pairings(h);
      const std::uint64_t idx =
          count > BigInt(1'000'000'000) ? r.below(1'000'000'000) : r.below(static_cast<std::uint64_t>(count));
      CAPTURE(n);
      CAPTURE(d);
      CAPTURE(seed);
      PathTrace tr;
      REQUIRE_NOTHROW(tr = build_canonical_path(g, g2, pairing_at(h, idx)));
      ++paths;
      CHECK(tr.states.front() == g);
      CHECK(tr.states.back() == g2);
      long_paths += tr.length() > static_cast<std::size_t>(d * n);
      repeats += !tr.simple();
      for (const Digraph& z : tr.states) {
        const Encoding l = encoding_of(g, g2, z);
        REQUIRE(is_z_valid(l, z));
        RepairResult rr;
        REQUIRE_NOTHROW(rr = repair(l, z));
        CHECK(rr.switches.size() <= 3);
        CHECK(rr.result.is_regular());
      }
    }
  CHECK(paths > 900);
  MESSAGE(paths << " paths, " << long_paths << " longer than dn, " << repeats << " revisit a state");
}
