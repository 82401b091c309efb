#include "switchchain/digraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "switchchain/errors.hpp"

namespace swc {

std::pair<Arc, Arc> Switch::deleted() const {
  Arc a = del1(), b = del2();
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::pair<Arc, Arc> Switch::added() const {
  Arc a = add1(), b = add2();
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

bool Switch::distinct_vertices() const {
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (v[x] == v[y]) return false;
  return true;
}

std::string Switch::to_string() const {
  std::ostringstream os;
  os << '[' << v[0] + 1 << ' ' << v[1] + 1 << ' ' << v[2] + 1 << ' ' << v[3] + 1 << ']';
  return os.str();
}

Switch switch_from_arcs(Arc a1, Arc a2) { return Switch{{a1.tail, a1.head, a2.tail, a2.head}}; }

Digraph::Digraph(int n, int d) : n_(n), d_(d), out_(n, 0), in_(n, 0) {
  require(n >= 0 && n <= kMaxVertices, "digraph: n must be in [0, 64]");
}

Digraph Digraph::from_arcs(int n, int d, const std::vector<Arc>& arcs) {
  Digraph g(n, d);
  for (const Arc& a : arcs) {
    require(a.tail >= 0 && a.tail < n && a.head >= 0 && a.head < n, "digraph: vertex out of range");
    require(a.tail != a.head, "digraph: loops are not allowed");
    require(!g.has(a), "digraph: duplicate arc");
    g.add(a);
  }
  return g;
}

void Digraph::add(Arc a) {
  out_[a.tail] |= std::uint64_t{1} << a.head;
  in_[a.head] |= std::uint64_t{1} << a.tail;
}

void Digraph::remove(Arc a) {
  out_[a.tail] &= ~(std::uint64_t{1} << a.head);
  in_[a.head] &= ~(std::uint64_t{1} << a.tail);
}

void Digraph::toggle(Arc a) {
  out_[a.tail] ^= std::uint64_t{1} << a.head;
  in_[a.head] ^= std::uint64_t{1} << a.tail;
}

int Digraph::out_degree(Vertex v) const { return std::popcount(out_[v]); }
int Digraph::in_degree(Vertex v) const { return std::popcount(in_[v]); }

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (auto r : out_) c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (Vertex t = 0; t < n_; ++t) {
    std::uint64_t r = out_[t];
    while (r) {
      int h = std::countr_zero(r);
      out.push_back({t, h});
      r &= r - 1;
    }
  }
  return out;
}

bool Digraph::is_regular() const {
  for (Vertex v = 0; v < n_; ++v)
    if (out_degree(v) != d_ || in_degree(v) != d_) return false;
  return true;
}

bool Digraph::is_simple() const {
  for (Vertex v = 0; v < n_; ++v)
    if (has(v, v)) return false;
  return true;
}

std::uint64_t Digraph::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (auto r : out_) {
    h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool switch_valid(const Digraph& g, Arc a1, Arc a2) {
  require(g.has(a1) && g.has(a2), "switch_valid: arcs must belong to G");
  require(a1 != a2, "switch_valid: arcs must be distinct");
  Switch s = switch_from_arcs(a1, a2);
  if (!s.distinct_vertices()) return false;
  return !g.has(s.add1()) && !g.has(s.add2());
}

bool switch_applicable(const Digraph& g, const Switch& s) {
  for (Vertex x : s.v)
    if (x < 0 || x >= g.n()) return false;
  return s.distinct_vertices() && g.has(s.del1()) && g.has(s.del2()) && !g.has(s.add1()) &&
         !g.has(s.add2());
}

void apply_switch_in_place(Digraph& g, const Switch& s) {
  if (!switch_applicable(g, s)) throw ContractError("apply_switch: switch " + s.to_string() + " is not valid");
  g.remove(s.del1());
  g.remove(s.del2());
  g.add(s.add1());
  g.add(s.add2());
}

Digraph apply_switch(const Digraph& g, const Switch& s) {
  Digraph out = g;
  apply_switch_in_place(out, s);
  return out;
}

Digraph converse(const Digraph& g) {
  Digraph out(g.n(), g.d());
  for (const Arc& a : g.arcs()) out.add(reversed(a));
  return out;
}

Digraph complement(const Digraph& g) {
  Digraph out(g.n(), g.n() - 1 - g.d());
  for (Vertex t = 0; t < g.n(); ++t)
    for (Vertex h = 0; h < g.n(); ++h)
      if (t != h && !g.has(t, h)) out.add({t, h});
  return out;
}

std::vector<Arc> ColouredDiff::arcs() const {
  std::vector<Arc> a = blue.arcs();
  std::vector<Arc> r = red.arcs();
  a.insert(a.end(), r.begin(), r.end());
  std::sort(a.begin(), a.end());
  return a;
}

bool ColouredDiff::balanced() const {
  for (Vertex v = 0; v < n; ++v) {
    if (blue.in_degree(v) != red.in_degree(v)) return false;
    if (blue.out_degree(v) != red.out_degree(v)) return false;
  }
  for (Vertex v = 0; v < n; ++v)
    if (blue.out_row(v) & red.out_row(v)) return false;
  return true;
}

ColouredDiff sym_diff(const Digraph& g, const Digraph& g2) {
  require(g.n() == g2.n() && g.d() == g2.d(), "sym_diff: mismatched n or d");
  ColouredDiff h{g.n(), Digraph(g.n(), 0), Digraph(g.n(), 0)};
  for (const Arc& a : g.arcs())
    if (!g2.has(a)) h.blue.add(a);
  for (const Arc& a : g2.arcs())
    if (!g.has(a)) h.red.add(a);
  return h;
}

ColouredDiff coloured_diff(int n, const std::vector<Arc>& blue, const std::vector<Arc>& red) {
  ColouredDiff h{n, Digraph::from_arcs(n, 0, blue), Digraph::from_arcs(n, 0, red)};
  require(h.balanced(), "coloured_diff: blue and red degrees differ");
  return h;
}

Switch resolve_zeta_chi_switch(int i, int h, Vertex a, Vertex b, Vertex c, Vertex d) {
  require(Switch{{a, b, c, d}}.distinct_vertices(), "resolve_zeta_chi_switch: vertices must be distinct");
  switch (((i & 1) << 1) | (h & 1)) {
    case 0: return Switch{{a, b, c, d}};
    case 1: return Switch{{a, d, c, b}};
    case 2: return Switch{{b, a, d, c}};
    default: return Switch{{b, c, d, a}};
  }
}

Digraph circulant(int n, int d) {
  require(n >= 2 && n <= kMaxVertices, "circulant: n out of range");
  require(d >= 1 && d <= n - 1, "circulant: d must satisfy 1 <= d <= n-1");
  Digraph g(n, d);
  for (Vertex v = 0; v < n; ++v)
    for (int s = 1; s <= d; ++s) g.add({v, (v + s) % n});
  return g;
}

void write_digraph(std::ostream& os, const Digraph& g) {
  os << g.n() << ' ' << g.d() << '\n';
  for (const Arc& a : g.arcs()) os << a.tail + 1 << ' ' << a.head + 1 << '\n';
}

Digraph read_digraph(std::istream& is) {
  int n = 0, d = 0;
  if (!(is >> n >> d)) throw ContractError("read_digraph: missing 'n d' header");
  require(n >= 1 && n <= kMaxVertices, "read_digraph: n out of range");
  std::vector<int> ends;
  int x = 0;
  while (is >> x) ends.push_back(x);
  if (!is.eof() || ends.size() % 2 != 0) throw ContractError("read_digraph: malformed arc line");
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < ends.size(); k += 2) {
    require(ends[k] >= 1 && ends[k] <= n && ends[k + 1] >= 1 && ends[k + 1] <= n, "read_digraph: vertex out of range");
    arcs.push_back({ends[k] - 1, ends[k + 1] - 1});
  }
  Digraph g = Digraph::from_arcs(n, d, arcs);
  require(g.arc_count() == arcs.size() && g.is_simple() && g.is_regular(), "read_digraph: not a simple d-regular digraph");
  return g;
}

std::string to_text(const Digraph& g) {
  std::ostringstream os;
  write_digraph(os, g);
  return os.str();
}

Digraph from_text(const std::string& text) {
  std::istringstream is(text);
  return read_digraph(is);
}

std::string arc_string(Arc a) {
  return "(" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) + ")";
}

}  // namespace swc
