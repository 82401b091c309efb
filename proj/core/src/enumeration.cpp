#include "switchchain/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <string>

#include "switchchain/errors.hpp"

namespace swc {

std::size_t configured_state_cap() {
  if (const char* env = std::getenv(kStateCapEnv)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultStateCap;
}

std::uint64_t state_key(const Digraph& g) {
  const int n = g.n();
  require(n <= 8, "state_key: n must be at most 8");
  std::uint64_t key = 0;
  for (Vertex r = 0; r < n; ++r)
    for (Vertex c = 0; c < n; ++c) key = (key << 1) | (g.has(r, c) ? 1u : 0u);
  return key;
}

std::optional<std::size_t> StateSpace::find(const Digraph& g) const {
  if (g.n() != n) return std::nullopt;
  std::uint64_t k = state_key(g);
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - keys.begin());
}

std::size_t StateSpace::index_of(const Digraph& g) const {
  auto i = find(g);
  if (!i) throw ContractError("StateSpace: digraph is not in the enumerated state space");
  return *i;
}

namespace {

struct Enumerator {
  int n, d;
  std::size_t cap;
  std::vector<std::vector<std::uint64_t>> rows;  // per row: candidate masks, lex order
  std::vector<int> col_count;
  std::vector<std::uint64_t> chosen;
  StateSpace* out;

  bool feasible(int next_row) const {
    for (int c = 0; c < n; ++c) {
      int need = d - col_count[c];
      if (need < 0) return false;
      int avail = n - next_row - (c >= next_row ? 1 : 0);
      if (need > avail) return false;
    }
    return true;
  }

  void emit() {
    if (out->states.size() >= cap)
      throw CapExceeded("enumerate_omega: state count exceeds cap of " + std::to_string(cap));
    Digraph g(n, d);
    std::uint64_t key = 0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        bool bit = (chosen[r] >> c) & 1u;
        key = (key << 1) | (bit ? 1u : 0u);
        if (bit) g.add({r, c});
      }
    }
    out->states.push_back(std::move(g));
    out->keys.push_back(key);
  }

  void run(int r) {
    if (r == n) {
      emit();
      return;
    }
    for (std::uint64_t m : rows[r]) {
      chosen[r] = m;
      for (int c = 0; c < n; ++c)
        if ((m >> c) & 1u) ++col_count[c];
      if (feasible(r + 1)) run(r + 1);
      for (int c = 0; c < n; ++c)
        if ((m >> c) & 1u) --col_count[c];
    }
  }
};

// bit c of mask = column c; lex order on the row string (column 0 first)
std::uint64_t row_string_value(std::uint64_t mask, int n) {
  std::uint64_t v = 0;
  for (int c = 0; c < n; ++c) v = (v << 1) | ((mask >> c) & 1u);
  return v;
}

}  // namespace

StateSpace enumerate_omega(int n, int d, std::size_t cap) {
  require(n >= 1 && n <= 7, "enumerate_omega: n must be at most 7");
  require(d >= 0 && d <= n - 1, "enumerate_omega: d out of range");
  StateSpace s;
  s.n = n;
  s.d = d;
  Enumerator e{n, d, cap, std::vector<std::vector<std::uint64_t>>(n), std::vector<int>(n, 0),
               std::vector<std::uint64_t>(n, 0), &s};
  for (int r = 0; r < n; ++r) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (std::popcount(m) == d && !((m >> r) & 1u)) e.rows[r].push_back(m);
    std::sort(e.rows[r].begin(), e.rows[r].end(), [n](std::uint64_t a, std::uint64_t b) {
      return row_string_value(a, n) < row_string_value(b, n);
    });
  }
  e.run(0);
  return s;
}

std::size_t Metagraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& a : adj) c += a.size();
  return c / 2;
}

Metagraph build_metagraph(const StateSpace& s) {
  Metagraph m;
  const std::size_t N = s.size();
  m.adj.assign(N, {});
  m.rejected_moves.assign(N, 0);
  for (std::size_t x = 0; x < N; ++x) {
    const Digraph& g = s.states[x];
    std::vector<Arc> arcs = g.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      for (std::size_t b = a + 1; b < arcs.size(); ++b) {
        if (!switch_valid(g, arcs[a], arcs[b])) {
          ++m.rejected_moves[x];
          continue;
        }
        Digraph y = apply_switch(g, switch_from_arcs(arcs[a], arcs[b]));
        m.adj[x].push_back(s.index_of(y));
      }
    }
    std::sort(m.adj[x].begin(), m.adj[x].end());
    ensure(std::adjacent_find(m.adj[x].begin(), m.adj[x].end()) == m.adj[x].end(), "metagraph",
           "two distinct switches produced the same neighbour");
  }
  if (N == 0) return m;
  m.connected = true;
  m.diameter = 0;
  for (std::size_t src = 0; src < N; ++src) {
    std::vector<int> dist(N, -1);
    std::deque<std::size_t> q{src};
    dist[src] = 0;
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      for (std::size_t y : m.adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    for (int dd : dist) {
      if (dd < 0) {
        m.connected = false;
        m.diameter = -1;
        return m;
      }
      m.diameter = std::max(m.diameter, dd);
    }
  }
  return m;
}

bool WSets::contains(int i, int j, Vertex x) const {
  const auto& s = at(i, j);
  return std::find(s.begin(), s.end(), x) != s.end();
}

int WSets::class_of(Vertex x) const {
  for (int k = 0; k < 4; ++k)
    if (std::find(sets[k].begin(), sets[k].end(), x) != sets[k].end()) return k;
  return -1;
}

WSets w_sets(const Digraph& g, const std::vector<Vertex>& u) {
  WSets w;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (std::find(u.begin(), u.end(), x) != u.end()) continue;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        bool all = true;
        for (Vertex y : u) {
          if (g.has(x, y) != (i == 1) || g.has(y, x) != (j == 1)) {
            all = false;
            break;
          }
        }
        if (all) w.sets[2 * i + j].push_back(x);
      }
  }
  return w;
}

bool is_directed_triangle(const Digraph& g, const std::array<Vertex, 3>& t) {
  const Vertex a = t[0], b = t[1], c = t[2];
  if (a == b || b == c || a == c) return false;
  bool fwd = g.has(a, b) && g.has(b, c) && g.has(c, a) && !g.has(b, a) && !g.has(c, b) && !g.has(a, c);
  bool bwd = g.has(b, a) && g.has(c, b) && g.has(a, c) && !g.has(a, b) && !g.has(b, c) && !g.has(c, a);
  return fwd || bwd;
}

std::optional<UsefulNeighbour> find_useful_neighbour(const Digraph& z, const std::array<Vertex, 3>& t) {
  require(is_directed_triangle(z, t), "find_useful_neighbour: t is not a directed 3-cycle");
  WSets w = w_sets(z, {t[0], t[1], t[2]});
  for (Vertex x = 0; x < z.n(); ++x) {
    if (x == t[0] || x == t[1] || x == t[2]) continue;
    if (w.class_of(x) >= 0) continue;
    int out = 0, in = 0;
    for (Vertex u : t) {
      out += z.has(u, x) ? 1 : 0;  // x is an out-neighbour of u
      in += z.has(x, u) ? 1 : 0;
    }
    UsefulNeighbour r{x, 0, 0};
    if (out == 1) r = {x, 0, 0};
    else if (out == 2) r = {x, 0, 1};
    else if (in == 1) r = {x, 1, 0};
    else if (in == 2) r = {x, 1, 1};
    else throw InvariantViolation("useful neighbour", "vertex outside all W-sets matches no (i,h) case");
    return r;
  }
  return std::nullopt;
}

std::optional<UsefulArc> find_useful_arc(const Digraph& z, const std::array<Vertex, 3>& t) {
  require(is_directed_triangle(z, t), "find_useful_arc: t is not a directed 3-cycle");
  WSets w = w_sets(z, {t[0], t[1], t[2]});
  for (Vertex x = 0; x < z.n(); ++x) {
    int cx = w.class_of(x);
    if (cx < 0) continue;
    for (Vertex y = 0; y < z.n(); ++y) {
      if (y == x) continue;
      int cy = w.class_of(y);
      if (cy < 0) continue;
      const int ix = cx >> 1, jy = cy & 1;
      if (z.has(x, y)) {
        if (ix == 0 && jy == 0) return UsefulArc{{x, y}, UsefulArcCase::U1};
      } else {
        if (ix == 1 && jy == 1) return UsefulArc{{x, y}, UsefulArcCase::U2};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::array<Vertex, 3>> directed_triangles(const Digraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (is_directed_triangle(g, {a, b, c})) out.push_back({a, b, c});
  return out;
}

}  // namespace swc
