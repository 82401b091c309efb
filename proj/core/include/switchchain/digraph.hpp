#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace swc {

using Vertex = int;  // 0-based internally, printed 1-based

inline constexpr int kMaxVertices = 64;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline Arc reversed(Arc a) { return {a.head, a.tail}; }
// zeta^i applied to a single arc
inline Arc zeta(int i, Arc a) { return (i & 1) ? reversed(a) : a; }

// [a b c d]: deletes (a,b),(c,d) and adds (a,d),(c,b).
struct Switch {
  std::array<Vertex, 4> v{};

  Arc del1() const { return {v[0], v[1]}; }
  Arc del2() const { return {v[2], v[3]}; }
  Arc add1() const { return {v[0], v[3]}; }
  Arc add2() const { return {v[2], v[1]}; }
  // sorted pair of deleted arcs; two switches are the same move iff these agree
  std::pair<Arc, Arc> deleted() const;
  std::pair<Arc, Arc> added() const;
  bool same_move(const Switch& o) const { return deleted() == o.deleted(); }
  bool distinct_vertices() const;
  std::string to_string() const;  // "[a b c d]" 1-based

  friend bool operator==(const Switch&, const Switch&) = default;
};

Switch switch_from_arcs(Arc a1, Arc a2);

class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, int d);
  static Digraph from_arcs(int n, int d, const std::vector<Arc>& arcs);

  int n() const { return n_; }
  int d() const { return d_; }

  bool has(Vertex t, Vertex h) const { return (out_[t] >> h) & 1u; }
  bool has(Arc a) const { return has(a.tail, a.head); }
  void add(Arc a);
  void remove(Arc a);
  void toggle(Arc a);

  std::uint64_t out_row(Vertex v) const { return out_[v]; }
  std::uint64_t in_col(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;
  std::size_t arc_count() const;
  std::vector<Arc> arcs() const;  // lexicographic by (tail, head)
  bool is_regular() const;
  bool is_simple() const;  // no loops; duplicates impossible by representation

  std::uint64_t hash() const;
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

struct DigraphHash {
  std::size_t operator()(const Digraph& g) const { return static_cast<std::size_t>(g.hash()); }
};

bool switch_valid(const Digraph& g, Arc a1, Arc a2);
bool switch_applicable(const Digraph& g, const Switch& s);
Digraph apply_switch(const Digraph& g, const Switch& s);
void apply_switch_in_place(Digraph& g, const Switch& s);

Digraph converse(const Digraph& g);
Digraph complement(const Digraph& g);

// blue = A(G) - A(G2), red = A(G2) - A(G)
struct ColouredDiff {
  int n = 0;
  Digraph blue;
  Digraph red;

  std::vector<Arc> blue_arcs() const { return blue.arcs(); }
  std::vector<Arc> red_arcs() const { return red.arcs(); }
  std::vector<Arc> arcs() const;  // union, lexicographic
  bool empty() const { return blue.arc_count() == 0 && red.arc_count() == 0; }
  bool balanced() const;
  int theta(Vertex v) const { return blue.in_degree(v); }
  int phi(Vertex v) const { return blue.out_degree(v); }
  bool contains(Arc a) const { return blue.has(a) || red.has(a); }
};

ColouredDiff sym_diff(const Digraph& g, const Digraph& g2);
ColouredDiff coloured_diff(int n, const std::vector<Arc>& blue, const std::vector<Arc>& red);

// zeta^i chi^h [a b c d] resolved to a plain switch
Switch resolve_zeta_chi_switch(int i, int h, Vertex a, Vertex b, Vertex c, Vertex d);

Digraph circulant(int n, int d);

// "n d" then "tail head" per line, 1-based
void write_digraph(std::ostream& os, const Digraph& g);
Digraph read_digraph(std::istream& is);
std::string to_text(const Digraph& g);
Digraph from_text(const std::string& text);

std::string arc_string(Arc a);  // "(t,h)" 1-based

}  // namespace swc
