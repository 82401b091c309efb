#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "switchchain/digraph.hpp"
#include "switchchain/pairing.hpp"

namespace swc {

// Closed alternating string s_0 ... s_{2k-1}. With orient 0 the arc at an
// even position p is (s_p, s_{p+1}) and at an odd position (s_{p+1}, s_p);
// orient 1 reverses every arc.
struct Circuit {
  std::vector<Vertex> verts;
  int orient = 0;

  std::size_t size() const { return verts.size(); }
  Vertex at(std::size_t p) const { return verts[p % verts.size()]; }
  Arc arc_at(std::size_t p) const;
  std::vector<Arc> arcs() const;
  std::string to_string() const;  // "v0 v1 ..." 1-based, with direction
};

// follows psi alternately at heads and tails starting from the least unused arc
std::vector<Circuit> decompose_circuits(const ColouredDiff& h, const Pairing& psi);

enum class RawKind { OneCircuit, TwoCircuit };

struct RawSegment {
  RawKind kind = RawKind::OneCircuit;
  Circuit s;                  // begins at the circuit's start vertex v
  std::size_t circuit = 0;    // index into the circuit list
  std::size_t first_pos = 0;  // position in the parent circuit of the first block

  Vertex start() const { return s.verts.front(); }
};

std::vector<RawSegment> split_raw_segments(const Circuit& c, std::size_t circuit_index = 0);

// successive arcs share a psi-pair at their common vertex, except at v
bool well_paired(const RawSegment& seg, const Pairing& psi);

// pairing that pairs successive arcs of each given circuit
Pairing pairing_from_circuits(const ColouredDiff& h, const std::vector<Circuit>& circuits);

}  // namespace swc
