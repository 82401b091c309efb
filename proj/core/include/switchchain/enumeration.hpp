#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "switchchain/digraph.hpp"

namespace swc {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;
inline constexpr const char* kStateCapEnv = "SWITCHCHAIN_MAX_STATES";

// default cap, overridden by the SWITCHCHAIN_MAX_STATES environment variable
std::size_t configured_state_cap();

// row-major bit key, first matrix entry most significant (n <= 8)
std::uint64_t state_key(const Digraph& g);

struct StateSpace {
  int n = 0;
  int d = 0;
  std::vector<Digraph> states;    // ascending key order
  std::vector<std::uint64_t> keys;

  std::size_t size() const { return states.size(); }
  std::optional<std::size_t> find(const Digraph& g) const;
  std::size_t index_of(const Digraph& g) const;  // throws if absent
};

StateSpace enumerate_omega(int n, int d, std::size_t cap = configured_state_cap());

struct Metagraph {
  std::vector<std::vector<std::size_t>> adj;  // sorted neighbour indices
  std::vector<std::size_t> rejected_moves;    // per state: arc pairs that are not valid switches
  bool connected = false;
  int diameter = -1;                          // -1 when disconnected
  std::size_t edge_count() const;
};

Metagraph build_metagraph(const StateSpace& s);

// W^{(i,j)}(U,G); index 2*i + j
struct WSets {
  std::array<std::vector<Vertex>, 4> sets;
  const std::vector<Vertex>& at(int i, int j) const { return sets[2 * i + j]; }
  bool contains(int i, int j, Vertex x) const;
  int class_of(Vertex x) const;  // 2*i+j or -1
};

WSets w_sets(const Digraph& g, const std::vector<Vertex>& u);

bool is_directed_triangle(const Digraph& g, const std::array<Vertex, 3>& t);

struct UsefulNeighbour {
  Vertex x = 0;
  int i = 0;
  int h = 0;
};

std::optional<UsefulNeighbour> find_useful_neighbour(const Digraph& z, const std::array<Vertex, 3>& t);

enum class UsefulArcCase { U1, U2 };

struct UsefulArc {
  Arc arc;
  UsefulArcCase tag = UsefulArcCase::U1;
};

std::optional<UsefulArc> find_useful_arc(const Digraph& z, const std::array<Vertex, 3>& t);

// all vertex triples (sorted) inducing a directed 3-cycle
std::vector<std::array<Vertex, 3>> directed_triangles(const Digraph& g);

}  // namespace swc
