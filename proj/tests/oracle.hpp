#pragma once

// Brute-force reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <vector>

namespace oracle {

// adjacency as n row bitmasks
using Rows = std::vector<std::uint32_t>;

inline void fill_rows(int n, int d, int r, Rows& cur, std::vector<int>& col, std::vector<Rows>& out) {
  if (r == n) {
    for (int c = 0; c < n; ++c)
      if (col[c] != d) return;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (m & (1u << r)) continue;
    if (__builtin_popcount(m) != d) continue;
    bool ok = true;
    for (int c = 0; c < n && ok; ++c)
      if ((m >> c) & 1u) ok = col[c] < d;
    if (!ok) continue;
    for (int c = 0; c < n; ++c) col[c] += (m >> c) & 1u;
    cur[r] = m;
    fill_rows(n, d, r + 1, cur, col, out);
    for (int c = 0; c < n; ++c) col[c] -= (m >> c) & 1u;
  }
}

inline std::vector<Rows> omega(int n, int d) {
  std::vector<Rows> out;
  Rows cur(n, 0);
  std::vector<int> col(n, 0);
  fill_rows(n, d, 0, cur, col, out);
  std::sort(out.begin(), out.end());
  return out;
}

struct Chain {
  int n = 0, d = 0;
  std::vector<Rows> states;
  std::vector<std::vector<double>> p;  // dense
  std::vector<std::map<std::size_t, int>> moves;  // neighbour -> number of arc pairs leading there
  int pairs = 0;
};

// each unordered pair of distinct arcs {(i,j),(k,l)} chosen with probability 1/C(dn,2)
inline Chain chain(int n, int d) {
  Chain c;
  c.n = n;
  c.d = d;
  c.states = omega(n, d);
  const std::size_t N = c.states.size();
  std::map<Rows, std::size_t> index;
  for (std::size_t x = 0; x < N; ++x) index[c.states[x]] = x;
  c.pairs = d * n * (d * n - 1) / 2;
  c.p.assign(N, std::vector<double>(N, 0.0));
  c.moves.resize(N);
  for (std::size_t x = 0; x < N; ++x) {
    const Rows& g = c.states[x];
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((g[i] >> j) & 1u) arcs.push_back({i, j});
    for (std::size_t a = 0; a < arcs.size(); ++a)
      for (std::size_t b = a + 1; b < arcs.size(); ++b) {
        auto [i, j] = arcs[a];
        auto [k, l] = arcs[b];
        std::size_t y = x;
        const bool distinct = i != k && i != l && j != k && j != l;
        if (distinct && !((g[i] >> l) & 1u) && !((g[k] >> j) & 1u)) {
          Rows h = g;
          h[i] &= ~(1u << j);
          h[k] &= ~(1u << l);
          h[i] |= 1u << l;
          h[k] |= 1u << j;
          y = index.at(h);
        }
        c.p[x][y] += 1.0 / c.pairs;
        if (y != x) ++c.moves[x][y];
      }
  }
  return c;
}

inline bool connected(const Chain& c) {
  const std::size_t N = c.states.size();
  std::vector<char> seen(N, 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    for (const auto& [y, m] : c.moves[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        q.push(y);
      }
  }
  return count == N;
}

// smallest t with max_x d_TV(P^t(x,.), uniform) <= eps; distributions evolved directly
inline int mixing_time(const Chain& c, double eps, int t_max = 100000) {
  const std::size_t N = c.states.size();
  std::vector<std::vector<double>> dist(N, std::vector<double>(N, 0.0));
  for (std::size_t x = 0; x < N; ++x) dist[x][x] = 1.0;
  for (int t = 0; t <= t_max; ++t) {
    double worst = 0.0;
    for (std::size_t x = 0; x < N; ++x) {
      double tv = 0.0;
      for (std::size_t y = 0; y < N; ++y) tv += std::fabs(dist[x][y] - 1.0 / N);
      worst = std::max(worst, tv / 2);
    }
    if (worst <= eps) return t;
    for (std::size_t x = 0; x < N; ++x) {
      std::vector<double> nxt(N, 0.0);
      for (std::size_t y = 0; y < N; ++y)
        if (dist[x][y] != 0.0)
          for (const auto& [z, m] : c.moves[y]) nxt[z] += dist[x][y] * m / c.pairs;
      for (std::size_t y = 0; y < N; ++y) nxt[y] += dist[x][y] * c.p[y][y];
      dist[x] = std::move(nxt);
    }
  }
  return -1;
}

inline std::uint64_t derangements(int n) {
  std::uint64_t a = 1, b = 0;  // D0, D1
  if (n == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    std::uint64_t c = (k - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

}  // namespace oracle
