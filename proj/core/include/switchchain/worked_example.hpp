#pragma once

#include <string>
#include <vector>

#include "switchchain/canonical_path.hpp"
#include "switchchain/digraph.hpp"
#include "switchchain/flow.hpp"
#include "switchchain/pairing.hpp"

namespace swc {

// 23-vertex example: H, its pairing, and a frozen d-regular completion.
struct WorkedExample {
  std::vector<std::string> names;  // names[v] for 0-based v
  Digraph g, g2;
  std::vector<Circuit> circuits;  // as listed, all forward
  Pairing psi;
  std::vector<Switch> expected;             // Z_0 -> Z_13
  std::vector<Arc> z4_interesting;          // sorted
  std::vector<std::pair<Arc, Arc>> z4_green, z4_yellow;  // expected bad pairs

  Vertex vertex(const std::string& name) const;
  std::string name(Vertex v) const { return names[static_cast<std::size_t>(v)]; }
  std::string describe(const Switch& s) const;  // "[z10 x11 x10 v]"
};

const WorkedExample& worked_example();

struct WorkedExampleResult {
  PathTrace trace;
  BadPairReport z4_bad;
  std::vector<std::string> failures;  // empty on success
  bool ok() const { return failures.empty(); }
};

WorkedExampleResult run_worked_example();

}  // namespace swc
