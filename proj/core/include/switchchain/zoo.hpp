#pragma once

#include <optional>
#include <string>
#include <vector>

#include "switchchain/digraph.hpp"

namespace swc {

// label -1: newly present relative to Z_J; label 2: newly absent
struct LabelledArc {
  Arc arc;
  int label = 0;
  friend bool operator==(const LabelledArc&, const LabelledArc&) = default;
  friend auto operator<=>(const LabelledArc&, const LabelledArc&) = default;
};

enum class LabelSym { Mu, Nu, Xi, Omega };

struct ShapeArc {
  int tail;
  int head;
  LabelSym label;
};

struct ZooShape {
  std::string name;
  int vertices = 0;
  std::vector<ShapeArc> arcs;
};

// Eight base configurations. Each is read up to the swaps mu<->nu,
// xi<->omega (with {mu,nu} = {xi,omega} = {-1,2}) and global reversal.
const std::vector<ZooShape>& zoo_catalogue();

// catalogue shapes with some non-hub vertices identified
const std::vector<ZooShape>& zoo_merged_shapes();

struct ZooMatch {
  std::size_t shape = 0;
  bool reversed = false;
  int mu = -1;
  int xi = -1;
  bool merged = false;  // shape indexes zoo_merged_shapes() after the catalogue
};

std::optional<ZooMatch> match_zoo(const std::vector<LabelledArc>& config);

// five-arc structure: hub w with three arcs not all equal in label, a fourth
// arc back at w whose far end u carries the fifth arc
bool five_arc_structure(const std::vector<LabelledArc>& config);

}  // namespace swc
