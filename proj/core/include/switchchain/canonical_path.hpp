#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "switchchain/circuits.hpp"
#include "switchchain/digraph.hpp"
#include "switchchain/pairing.hpp"
#include "switchchain/zoo.hpp"

namespace swc {

enum class StepType { Type1, Type2, Type3 };
const char* to_string(StepType t);

enum class TwoCircuitClass { Normal, Eccentric, Triangle };
const char* to_string(TwoCircuitClass c);

struct PathStep {
  Switch sw;
  std::size_t segment = 0;
  StepType type = StepType::Type1;
  std::string kind;   // e.g. "one-circuit", "normal/Na2", "eccentric/Ea/Nc", "triangle/T1"
  std::string role;   // "phase", "shortcut", "eccentric", "triangle"
  int one_circuit = -1;  // index of the 1-circuit within the segment
  int phase = 0;         // 1-based phase number for 1-circuit steps
  std::vector<LabelledArc> interesting;  // after the step, sorted
};

struct PathTrace {
  std::vector<Digraph> states;  // Z_0 .. Z_M
  std::vector<PathStep> steps;
  std::vector<Circuit> circuits;
  std::vector<RawSegment> segments;
  std::size_t schedule_fallbacks = 0;  // 1-circuits whose odd-chord schedule B was not a valid switch sequence

  std::size_t length() const { return steps.size(); }
  bool simple() const;  // no state repeated
};

struct PathOptions {
  bool check = true;  // run every structural assertion along the way
};

PathTrace build_canonical_path(const Digraph& g, const Digraph& g2, const Pairing& psi,
                               const PathOptions& opt = {});

// Forward form v x00 ... x10 v x11 ... x01 with x00 the smaller out-neighbour of v.
struct TwoCircuitLabels {
  Circuit t;
  std::size_t p = 0;  // position of the second v

  Vertex v() const { return t.verts[0]; }
  Vertex x(int i, int j) const;
  Vertex y(int i, int j) const;
  Vertex z(int i, int j) const;
  std::vector<Vertex> half_from(int j, int i) const;  // half j, from its x_{i,j} end
};

TwoCircuitLabels label_two_circuit(const Circuit& s);
TwoCircuitClass classify_two_circuit(const Circuit& s, const Digraph& zj);

// Switch sequences for a single segment starting from Z_J.
std::vector<Switch> process_one_circuit(const Circuit& s, const Digraph& zj);
std::vector<Switch> process_normal(const Circuit& s, const Digraph& zj);
std::vector<Switch> process_eccentric(const Circuit& s, const Digraph& zj);
std::vector<Switch> process_triangle(const Circuit& s, const Digraph& zj);

}  // namespace swc
