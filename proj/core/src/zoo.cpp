#include "switchchain/zoo.hpp"

#include <algorithm>
#include <map>

namespace swc {

namespace {

// vertex 0 = w (hub), 1..3 = p1..p3, 4 = u, 5 = t
std::vector<ZooShape> make_catalogue() {
  const std::vector<ShapeArc> hub = {{0, 1, LabelSym::Mu}, {0, 2, LabelSym::Nu}, {0, 3, LabelSym::Nu}};
  std::vector<ZooShape> out;
  ZooShape ecc{"hub+back-arc+tail", 6, hub};
  ecc.arcs.push_back({4, 0, LabelSym::Xi});
  ecc.arcs.push_back({4, 5, LabelSym::Omega});
  out.push_back(ecc);

  struct Extra {
    const char* name;
    int tail, head;
  };
  const Extra extras[] = {{"hub+arc(new,p1)", 4, 1}, {"hub+arc(new,p2)", 4, 2}, {"hub+arc(p1,new)", 1, 4},
                          {"hub+arc(p2,new)", 2, 4}, {"hub+arc(p1,p2)", 1, 2}, {"hub+arc(p2,p1)", 2, 1},
                          {"hub+arc(p2,p3)", 2, 3}};
  for (const Extra& e : extras) {
    ZooShape s{e.name, 5, hub};
    s.arcs.push_back({e.tail, e.head, LabelSym::Xi});
    out.push_back(s);
  }
  return out;
}

// every shape obtained by merging non-hub vertices without creating a loop
// or a repeated arc
std::vector<ZooShape> make_quotients(const std::vector<ZooShape>& base) {
  std::vector<ZooShape> out;
  for (const ZooShape& shape : base) {
    const int m = shape.vertices - 1;  // non-hub vertices 1..m
    std::vector<int> block(static_cast<std::size_t>(m), 0);
    // restricted growth strings enumerate the set partitions of 1..m
    while (true) {
      int blocks = 0;
      for (int b : block) blocks = std::max(blocks, b + 1);
      if (blocks < m) {
        ZooShape q{shape.name + "/merged", blocks + 1, {}};
        auto img = [&](int x) { return x == 0 ? 0 : block[static_cast<std::size_t>(x - 1)] + 1; };
        bool ok = true;
        for (const ShapeArc& a : shape.arcs) {
          const ShapeArc b{img(a.tail), img(a.head), a.label};
          if (b.tail == b.head) ok = false;
          for (const ShapeArc& c : q.arcs)
            if (c.tail == b.tail && c.head == b.head) ok = false;
          q.arcs.push_back(b);
        }
        if (ok) out.push_back(std::move(q));
      }
      int k = m - 1;
      while (k > 0) {
        int mx = 0;
        for (int t = 0; t < k; ++t) mx = std::max(mx, block[static_cast<std::size_t>(t)]);
        if (block[static_cast<std::size_t>(k)] <= mx) break;
        block[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k <= 0) break;
      ++block[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

int concrete(LabelSym s, int mu, int xi) {
  switch (s) {
    case LabelSym::Mu: return mu;
    case LabelSym::Nu: return mu == -1 ? 2 : -1;
    case LabelSym::Xi: return xi;
    default: return xi == -1 ? 2 : -1;
  }
}

struct Matcher {
  const std::vector<LabelledArc>& cfg;
  std::vector<Vertex> cverts;
  std::map<std::pair<int, int>, int> shape_arcs;  // (tail, head) -> label
  int shape_vertices;
  std::vector<int> phi;
  std::vector<bool> used;

  int cindex(Vertex x) const {
    return static_cast<int>(std::lower_bound(cverts.begin(), cverts.end(), x) - cverts.begin());
  }

  bool consistent() const {
    for (const LabelledArc& la : cfg) {
      int a = phi[cindex(la.arc.tail)], b = phi[cindex(la.arc.head)];
      if (a < 0 || b < 0) continue;
      auto it = shape_arcs.find({a, b});
      if (it == shape_arcs.end() || it->second != la.label) return false;
    }
    return true;
  }

  bool run(std::size_t k) {
    if (k == cverts.size()) return true;
    for (int s = 0; s < shape_vertices; ++s) {
      if (used[s]) continue;
      phi[k] = s;
      used[s] = true;
      if (consistent() && run(k + 1)) return true;
      used[s] = false;
      phi[k] = -1;
    }
    return false;
  }
};

}  // namespace

const std::vector<ZooShape>& zoo_catalogue() {
  static const std::vector<ZooShape> cat = make_catalogue();
  return cat;
}

const std::vector<ZooShape>& zoo_merged_shapes() {
  static const std::vector<ZooShape> merged = make_quotients(zoo_catalogue());
  return merged;
}

std::optional<ZooMatch> match_zoo(const std::vector<LabelledArc>& config) {
  if (config.empty()) return ZooMatch{};
  std::vector<Vertex> verts;
  for (const auto& la : config) {
    verts.push_back(la.arc.tail);
    verts.push_back(la.arc.head);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  const auto& base = zoo_catalogue();
  const auto& merged = zoo_merged_shapes();
  for (std::size_t si = 0; si < base.size() + merged.size(); ++si) {
    const ZooShape& shape = si < base.size() ? base[si] : merged[si - base.size()];
    if (static_cast<int>(verts.size()) > shape.vertices || config.size() > shape.arcs.size()) continue;
    for (int rev = 0; rev < 2; ++rev)
      for (int mu : {-1, 2})
        for (int xi : {-1, 2}) {
          Matcher m{config, verts, {}, shape.vertices, std::vector<int>(verts.size(), -1),
                    std::vector<bool>(shape.vertices, false)};
          for (const ShapeArc& a : shape.arcs) {
            auto key = rev ? std::pair{a.head, a.tail} : std::pair{a.tail, a.head};
            m.shape_arcs[key] = concrete(a.label, mu, xi);
          }
          if (m.run(0)) return ZooMatch{si, rev == 1, mu, xi, si >= base.size()};
        }
  }
  return std::nullopt;
}

bool five_arc_structure(const std::vector<LabelledArc>& config) {
  if (config.size() != 5) return false;
  for (int rev = 0; rev < 2; ++rev) {
    // rev = 0: w is the head of three arcs; rev = 1: the tail
    auto near = [&](const LabelledArc& la) { return rev ? la.arc.tail : la.arc.head; };
    auto far = [&](const LabelledArc& la) { return rev ? la.arc.head : la.arc.tail; };
    std::vector<Vertex> cand;
    for (const auto& la : config) cand.push_back(near(la));
    for (Vertex w : cand) {
      std::vector<std::size_t> three;
      for (std::size_t k = 0; k < 5; ++k)
        if (near(config[k]) == w) three.push_back(k);
      if (three.size() != 3) continue;
      int l0 = config[three[0]].label;
      if (config[three[1]].label == l0 && config[three[2]].label == l0) continue;
      for (std::size_t k4 = 0; k4 < 5; ++k4) {
        if (std::find(three.begin(), three.end(), k4) != three.end()) continue;
        if (far(config[k4]) != w) continue;  // fourth arc has w at its other role
        Vertex u = near(config[k4]);
        for (std::size_t k5 = 0; k5 < 5; ++k5) {
          if (k5 == k4 || std::find(three.begin(), three.end(), k5) != three.end()) continue;
          const Arc a = config[k5].arc;
          if (a.tail == w || a.head == w) continue;
          if (near(config[k5]) == u) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace swc
