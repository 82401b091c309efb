#include "switchchain/canonical_path.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include "switchchain/enumeration.hpp"
#include "switchchain/errors.hpp"

namespace swc {

const char* to_string(StepType t) {
  switch (t) {
    case StepType::Type1: return "Type1";
    case StepType::Type2: return "Type2";
    default: return "Type3";
  }
}

const char* to_string(TwoCircuitClass c) {
  switch (c) {
    case TwoCircuitClass::Normal: return "normal";
    case TwoCircuitClass::Eccentric: return "eccentric";
    default: return "triangle";
  }
}

bool PathTrace::simple() const {
  std::unordered_set<Digraph, DigraphHash> seen;
  for (const Digraph& z : states)
    if (!seen.insert(z).second) return false;
  return true;
}

namespace {

std::size_t count_of(const std::vector<Vertex>& s, Vertex v) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), v));
}

std::set<Arc> arc_set(const Circuit& c) {
  std::set<Arc> out;
  for (const Arc& a : c.arcs()) {
    ensure(out.insert(a).second, "circuit arcs distinct", "arc " + arc_string(a) + " repeated on " + c.to_string());
  }
  return out;
}

std::vector<Vertex> reversed_vec(std::vector<Vertex> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<Vertex> sub(const std::vector<Vertex>& v, std::size_t a, std::size_t b) {  // [a, b]
  return std::vector<Vertex>(v.begin() + static_cast<std::ptrdiff_t>(a), v.begin() + static_cast<std::ptrdiff_t>(b) + 1);
}

std::vector<Vertex> cat(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Builder {
 public:
  Builder(const Digraph& start, bool check, PathTrace* trace) : z_(start), check_(check), trace_(trace) {}

  const Digraph& state() const { return z_; }
  const std::vector<Switch>& emitted() const { return emitted_; }

  void begin_segment(const Circuit& raw, std::size_t index) {
    zj_ = z_;
    seg_ = Digraph(z_.n(), 0);
    for (const Arc& a : arc_set(raw)) seg_.add(a);
    seg_arcs_ = arc_set(raw);
    interesting_.clear();
    seg_index_ = index;
    seg_first_step_ = trace_ ? trace_->steps.size() : 0;
    one_circuit_count_ = 0;
  }

  void end_segment(const std::string& kind) {
    if (check_) {
      for (Vertex t = 0; t < z_.n(); ++t)
        ensure((z_.out_row(t) ^ zj_.out_row(t)) == seg_.out_row(t), "segment locality",
               "state after segment differs from Z_J off the segment arcs");
    }
    if (trace_)
      for (std::size_t k = seg_first_step_; k < trace_->steps.size(); ++k) trace_->steps[k].kind = kind;
  }

  void run_raw(const RawSegment& raw, std::size_t index) {
    begin_segment(raw.s, index);
    std::string kind;
    if (raw.kind == RawKind::OneCircuit) {
      one_circuit(raw.s);
      kind = "one-circuit";
    } else {
      kind = two_circuit(raw.s);
    }
    end_segment(kind);
  }

  // 1-circuit starting at its start vertex v (which occurs once)
  void one_circuit(Circuit s) {
    const std::size_t k2 = s.size();
    ensure(k2 >= 4 && k2 % 2 == 0, "1-circuit labelling", "length must be even and at least 4");
    const Vertex x0 = s.verts[0];
    ensure(count_of(s.verts, x0) == 1, "1-circuit labelling", "start vertex repeats on " + s.to_string());
    ensure(s.verts[1] != s.verts[k2 - 1], "1-circuit labelling", "x1 equals x_{2k-1}");
    if (s.verts[k2 - 1] < s.verts[1]) {
      std::vector<Vertex> r{x0};
      for (std::size_t q = k2 - 1; q >= 1; --q) r.push_back(s.verts[q]);
      s.verts = r;
    }
    const std::size_t k = k2 / 2;
    const int i = s.orient;
    auto x = [&](std::size_t m) { return s.verts[m % k2]; };
    const int h = z_.has(zeta(i, {x0, x(1)})) ? 0 : 1;
    auto in_chi = [&](Arc a) { return z_.has(a) != (h == 1); };

    const Digraph start = z_;
    const std::set<Arc> arcs = arc_set(s);
    if (check_) {
      for (std::size_t t = 0; t < k; ++t) {
        ensure(in_chi(zeta(i, {x(2 * t), x(2 * t + 1)})), "1-circuit alternation", s.to_string());
        ensure(!in_chi(zeta(i, {x(2 * t + 2), x(2 * t + 1)})), "1-circuit alternation", s.to_string());
      }
      for (std::size_t m = 0; m < k2; ++m)
        ensure(x(m) != x(m + 1) && x(m) != x(m + 2) && x(m + 1) != x(m + 2), "1-circuit labelling",
               "three consecutive vertices must be distinct");
    }

    std::vector<std::size_t> B;
    for (std::size_t t = 1; t <= k - 1; ++t) {
      if (in_chi(zeta(i, {x0, x(2 * t + 1)}))) continue;
      bool last = true;
      for (std::size_t l = t + 1; l <= k - 1; ++l)
        if (x(2 * l + 1) == x(2 * t + 1)) last = false;
      if (last) B.push_back(t);
    }
    ensure(!B.empty() && B.back() == k - 1, "1-circuit phases", "k-1 must belong to B");

    auto phase_switch = [&](std::size_t j) { return resolve_zeta_chi_switch(i, h, x0, x(2 * j - 1), x(2 * j), x(2 * j + 1)); };
    // a phase (prev, q] applies the switches for j = q down to prev+1
    auto run_phase = [&](Digraph& sim, std::size_t prev, std::size_t q) {
      for (std::size_t j = q; j >= prev + 1; --j) {
        const Switch sw = phase_switch(j);
        if (!switch_applicable(sim, sw)) return false;
        apply_switch_in_place(sim, sw);
      }
      return true;
    };

    std::vector<std::size_t> ends;  // phase end positions
    {
      Digraph sim = z_;
      std::size_t prev = 0;
      for (std::size_t q : B) {
        if (!run_phase(sim, prev, q)) {
          ends.clear();
          break;
        }
        ends.push_back(q);
        prev = q;
      }
    }
    if (ends.empty()) {
      // B is not a valid schedule. The state after the phases ending at q does
      // not depend on earlier end points, so a failed q is never retried.
      if (trace_) ++trace_->schedule_fallbacks;
      std::vector<char> dead(k, 0);
      std::function<bool(const Digraph&, std::size_t)> search = [&](const Digraph& cur, std::size_t prev) {
        if (prev == k - 1) return true;
        if (dead[prev]) return false;
        std::size_t greedy = prev + 1;
        while (greedy < k - 1 && (cur.has(zeta(i, {x0, x(2 * greedy + 1)})) != (h == 1))) ++greedy;
        std::vector<std::size_t> order{greedy};
        for (std::size_t q = prev + 1; q <= k - 1; ++q)
          if (q != greedy) order.push_back(q);
        for (std::size_t q : order) {
          Digraph sim = cur;
          if (!run_phase(sim, prev, q)) continue;
          ends.push_back(q);
          if (search(sim, q)) return true;
          ends.pop_back();
        }
        dead[prev] = 1;
        return false;
      };
      ensure(search(z_, 0), "1-circuit phases", "no valid phase schedule for " + s.to_string());
    }

    // odd chords that are not arcs of S
    std::vector<Arc> chords;
    for (std::size_t t = 1; t + 1 <= k - 1; ++t) {
      Arc c = zeta(i, {x0, x(2 * t + 1)});
      if (!arcs.count(c) && std::find(chords.begin(), chords.end(), c) == chords.end()) chords.push_back(c);
    }

    const int idx = one_circuit_count_++;
    std::size_t prev = 0;
    int phase = 0;
    for (std::size_t q : ends) {
      ++phase;
      for (std::size_t j = q; j >= prev + 1; --j) {
        apply(phase_switch(j), StepType::Type1, "phase", idx, phase);
        if (check_) {
          int disturbed = 0;
          for (const Arc& c : chords) disturbed += (z_.has(c) != start.has(c)) ? 1 : 0;
          ensure(disturbed <= 3, "odd chords disturbed", std::to_string(disturbed) + " chords switched");
        }
      }
      prev = q;
    }
    if (check_) expect_flip(start, arcs, "1-circuit result");
  }

  std::string two_circuit(const Circuit& s) {
    TwoCircuitLabels L = label_two_circuit(s);
    switch (classify(L)) {
      case TwoCircuitClass::Normal: return "normal/" + normal(L, nullptr);
      case TwoCircuitClass::Eccentric: return eccentric(L);
      default: return triangle(L);
    }
  }

  TwoCircuitClass classify(const TwoCircuitLabels& L) const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (L.y(i, j) != L.x(i, j + 1)) return TwoCircuitClass::Normal;
    std::vector<Vertex> vs = L.t.verts;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() == 3) return TwoCircuitClass::Triangle;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ensure(L.z(i, j) != L.v(), "2-circuit classification", "eccentric 2-circuit has v = z_{i,j}");
    return TwoCircuitClass::Eccentric;
  }

  std::string normal(const TwoCircuitLabels& L, const TwoCircuitLabels* ecc) {
    const Vertex v = L.v();
    const int h = z_.has({v, L.x(0, 0)}) ? 0 : 1;
    int i = -1, j = -1;
    for (int a = 0; a < 2 && i < 0; ++a)
      for (int b = 0; b < 2; ++b)
        if (L.x(a, b) != L.y(a, b + 1)) {
          i = a;
          j = b;
          break;
        }
    ensure(i >= 0, "normal 2-circuit", "no index with x_{i,j} != y_{i,j+1}");
    const Vertex X = L.x(i, j), Y = L.y(i, j + 1), Xn = L.x(i, j + 1);
    const Arc e = zeta(i, {Y, X});
    const int hj = (h + j) & 1;
    auto in_chi = [&](int hh, Arc a) { return z_.has(a) != (hh == 1); };
    const std::set<Arc> arcs = arc_set(L.t);
    const Digraph start = z_;
    const std::vector<Vertex> Q = L.half_from(j + 1, i);
    const std::vector<Vertex> P = L.half_from(j, i);

    // t positions of the half entries, aligned with half_from
    auto half_pos = [&](int jj, int ii) {
      std::vector<std::size_t> pos;
      if (jj & 1)
        for (std::size_t q = L.p + 1; q < L.t.size(); ++q) pos.push_back(q);
      else
        for (std::size_t q = 1; q < L.p; ++q) pos.push_back(q);
      if ((ii & 1) != (jj & 1)) std::reverse(pos.begin(), pos.end());
      return pos;
    };
    const std::vector<std::size_t> Qpos = half_pos(j + 1, i), Ppos = half_pos(j, i);
    // arc of S joining v and x_{a,b}
    auto v_arc = [&](int a, int b) {
      const std::size_t k2 = L.t.size();
      const std::size_t pos = (b & 1) ? ((a & 1) ? L.p : k2 - 1) : ((a & 1) ? L.p - 1 : 0);
      return L.t.arc_at(pos);
    };
    // orientation fixed by the first arc of str; every arc must then lie on S or be the shortcut arc
    auto orient_of = [&](const std::vector<Vertex>& str, Arc first) {
      int o = Circuit{str, 0}.arc_at(0) == first ? 0 : 1;
      const Circuit c{str, o};
      ensure(c.arc_at(0) == first, "normal 2-circuit", "split string does not start with its v-arc");
      for (std::size_t m = 0; m < c.size(); ++m)
        ensure(arcs.count(c.arc_at(m)) || c.arc_at(m) == e, "normal 2-circuit", "split string leaves S: " + c.to_string());
      return o;
    };
    const Arc first_near = v_arc(i, j + 1), first_far = v_arc(i + 1, j + 1);

    if (arcs.count(e)) {
      // (Na): locate e on a half; the string positions decide which arcs are consecutive
      std::vector<Vertex> s1, s2;
      std::string sub_case;
      auto half_has = [&](const std::vector<std::size_t>& pos, std::size_t& m) {
        for (m = 0; m + 1 < pos.size(); ++m)
          if (L.t.arc_at(std::min(pos[m], pos[m + 1])) == e) return true;
        return false;
      };
      std::size_t m = 0;
      if (half_has(Qpos, m)) {
        const std::size_t c = (Q[m + 1] == X) ? m + 1 : m;
        sub_case = (Q[m + 1] == X) ? "Na1" : "Na2";
        s1 = cat({v}, sub(Q, 0, c));
        s2 = cat(cat({v}, reversed_vec(sub(Q, c, Q.size() - 1))), sub(P, 1, P.size() - 1));
      } else {
        ensure(half_has(Ppos, m), "normal 2-circuit (Na)", "shortcut arc not found on either half");
        const std::size_t c = (P[m] == X) ? m + 1 : m;
        sub_case = (P[m] == X) ? "Na3" : "Na4";
        s1 = cat({v, Xn}, reversed_vec(sub(P, 0, c)));
        s2 = cat(cat({v}, reversed_vec(sub(Q, 1, Q.size() - 1))),
                 c + 1 <= P.size() - 1 ? sub(P, c + 1, P.size() - 1) : std::vector<Vertex>{});
      }
      const bool absent = !in_chi(hj, e);
      ensure(absent == (sub_case == "Na1" || sub_case == "Na3"), "normal 2-circuit (Na)",
             sub_case + " status condition fails");
      Circuit c1{s1, orient_of(s1, first_near)}, c2{s2, orient_of(s2, first_far)};
      std::set<Arc> a1 = arc_set(c1), a2 = arc_set(c2), un = a1;
      un.insert(a2.begin(), a2.end());
      ensure(un.size() == a1.size() + a2.size() && un == arcs, "Na partition", "S1 and S2 do not partition A(S)");
      one_circuit(c1);
      one_circuit(c2);
      if (check_) expect_flip(start, arcs, "normal 2-circuit result");
      return sub_case;
    }

    std::vector<Vertex> s1 = cat(cat({v}, reversed_vec(sub(Q, 1, Q.size() - 1))), P);
    Circuit c1{s1, orient_of(s1, first_far)};
    {
      std::set<Arc> a1 = arc_set(c1);
      ensure(a1.count(e) == 1, "normal 2-circuit (Nb/Nc)", "shortcut arc does not complete S1");
      for (const Arc& a : a1) ensure(a == e || arcs.count(a), "normal 2-circuit (Nb/Nc)", "S1 leaves S");
    }
    const Switch sw = resolve_zeta_chi_switch(i, hj, v, X, Y, Xn);
    if (ecc) {
      const Vertex z10 = ecc->z(1, 0), x10 = ecc->x(1, 0), x11 = ecc->x(1, 1);
      ensure(e == Arc{z10, x10}, "eccentric shortcut", "shortcut arc is not (z10, x10)");
      ensure(sw.same_move(resolve_zeta_chi_switch(0, ecc_h_, x11, x10, z10, v)), "eccentric shortcut",
             "unexpected shortcut switch");
    }
    const bool initially = z_.has(e);
    std::string sub_case;
    if (!in_chi(hj, e)) {
      sub_case = "Nb";
      apply(sw, StepType::Type2, "shortcut");
      one_circuit(c1);
    } else {
      sub_case = "Nc";
      one_circuit(c1);
      apply(sw, StepType::Type2, "shortcut");
    }
    ensure(z_.has(e) == initially, "shortcut restored", arc_string(e));
    if (check_) expect_flip(start, arcs, "normal 2-circuit result");
    return sub_case;
  }

  std::string eccentric(const TwoCircuitLabels& L) {
    const Vertex v = L.v();
    const int h = z_.has({v, L.x(0, 0)}) ? 0 : 1;
    const Vertex z10 = L.z(1, 0), x10 = L.x(1, 0), x11 = L.x(1, 1);
    const Arc ec{z10, v};
    ecc_h_ = h;
    const std::set<Arc> arcs = arc_set(L.t);
    ensure(!arcs.count(ec), "eccentric arc", "eccentric arc lies on S");
    const Digraph start = z_;
    const Switch sw = resolve_zeta_chi_switch(0, h, z10, x11, x10, v);

    std::vector<Vertex> sp = sub(L.t.verts, 0, L.p - 3);
    sp.push_back(v);
    std::vector<Vertex> right = sub(L.t.verts, L.p + 1, L.t.size() - 1);
    sp.insert(sp.end(), right.begin(), right.end());
    const Circuit sprime{sp, 0};

    std::string sub_case, inner;
    const bool in_chi_h = z_.has(ec) != (h == 1);
    auto run_sprime = [&] {
      TwoCircuitLabels Lp = label_two_circuit(sprime);
      ensure(classify(Lp) == TwoCircuitClass::Normal, "eccentric reduction", "S' is not normal");
      inner = normal(Lp, &L);
    };
    if (!in_chi_h) {
      sub_case = "Ea";
      apply(sw, StepType::Type2, "eccentric");
      run_sprime();
    } else {
      sub_case = "Eb";
      run_sprime();
      apply(sw, StepType::Type2, "eccentric");
    }
    ensure(z_.has(ec) == start.has(ec), "eccentric arc restored", arc_string(ec));
    if (check_) expect_flip(start, arcs, "eccentric 2-circuit result");
    return "eccentric/" + sub_case + "/" + inner;
  }

  std::string triangle(const TwoCircuitLabels& L) {
    std::array<Vertex, 3> tri{L.v(), L.x(0, 0), L.y(0, 0)};
    std::sort(tri.begin(), tri.end());
    const Vertex v0 = tri[0];
    const Vertex v1 = z_.has(v0, tri[1]) ? tri[1] : tri[2];
    const Vertex v2 = v1 == tri[1] ? tri[2] : tri[1];
    const std::array<Vertex, 3> t{v0, v1, v2};
    ensure(is_directed_triangle(z_, t) && z_.has(v0, v1), "triangle", "Z_J[S] is not a directed 3-cycle");
    const std::set<Arc> arcs = arc_set(L.t);
    const Digraph start = z_;

    std::string sub_case;
    if (auto nb = find_useful_neighbour(z_, t)) {
      sub_case = "T1";
      const Vertex x = nb->x;
      const int i = nb->i, h = nb->h;
      auto in_chi = [&](Arc a) { return z_.has(a) != (h == 1); };
      std::array<Vertex, 3> perm = t;
      std::sort(perm.begin(), perm.end());
      int found = 0;
      std::array<Vertex, 3> abc{};
      do {
        const Vertex a = perm[0], b = perm[1], c = perm[2];
        if (in_chi(zeta(i, {a, x})) && !in_chi(zeta(i, {b, x})) && !in_chi(zeta(i, {c, x})) &&
            in_chi(zeta(i, {a, b})) && in_chi(zeta(i, {b, c})) && in_chi(zeta(i, {c, a}))) {
          abc = perm;
          ++found;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      ensure(found == 1, "triangle (T1)", "relabelling a,b,c is not unique");
      const auto [a, b, c] = abc;
      apply(resolve_zeta_chi_switch(i, h, a, x, b, c), StepType::Type3, "triangle");
      apply(resolve_zeta_chi_switch(i, h, b, x, c, a), StepType::Type3, "triangle");
      apply(resolve_zeta_chi_switch(i, h, a, b, c, x), StepType::Type3, "triangle");
    } else {
      auto ua = find_useful_arc(z_, t);
      ensure(ua.has_value(), "useful arc", "no useful neighbour and no useful arc");
      sub_case = "T2";
      const int h = ua->tag == UsefulArcCase::U1 ? 0 : 1;
      const Vertex x = ua->arc.tail, y = ua->arc.head;
      auto in_chi = [&](Arc a) { return z_.has(a) != (h == 1); };
      const Vertex a = v0;
      const Vertex b = in_chi({a, v1}) ? v1 : v2;
      const Vertex c = b == v1 ? v2 : v1;
      ensure(in_chi({a, b}) && in_chi({x, y}), "triangle (T2)", "labelling failed");
      apply(resolve_zeta_chi_switch(0, h, x, y, a, b), StepType::Type3, "triangle");
      apply(resolve_zeta_chi_switch(0, h, a, y, b, c), StepType::Type3, "triangle");
      apply(resolve_zeta_chi_switch(0, h, b, y, c, a), StepType::Type3, "triangle");
      apply(resolve_zeta_chi_switch(0, h, x, b, c, y), StepType::Type3, "triangle");
    }
    if (check_) expect_flip(start, arcs, "triangle result");
    return "triangle/" + sub_case;
  }

 private:
  void expect_flip(const Digraph& start, const std::set<Arc>& arcs, const char* what) {
    for (Vertex t = 0; t < z_.n(); ++t) {
      std::uint64_t diff = z_.out_row(t) ^ start.out_row(t);
      std::uint64_t want = 0;
      for (const Arc& a : arcs)
        if (a.tail == t) want |= std::uint64_t{1} << a.head;
      ensure(diff == want, what, "procedure did not flip exactly its arcs");
    }
  }

  void apply(const Switch& s, StepType type, const char* role, int one_circuit = -1, int phase = 0) {
    if (!switch_applicable(z_, s))
      throw InvariantViolation("switch validity", "switch " + s.to_string() + " is not valid in the current state (" + role +
                                                   " step, segment " + std::to_string(seg_index_) + ")");
    apply_switch_in_place(z_, s);
    emitted_.push_back(s);
    for (const Arc& a : {s.del1(), s.del2(), s.add1(), s.add2()}) {
      if (seg_.has(a)) continue;
      auto it = interesting_.find(a);
      if (it != interesting_.end()) interesting_.erase(it);
      else interesting_[a] = zj_.has(a) ? 2 : -1;
    }
    std::vector<LabelledArc> cfg;
    for (const auto& [a, l] : interesting_) cfg.push_back({a, l});
    if (check_) {
      std::vector<LabelledArc> recomputed;
      for (Vertex t = 0; t < z_.n(); ++t) {
        std::uint64_t d = (z_.out_row(t) ^ zj_.out_row(t)) & ~seg_.out_row(t);
        while (d) {
          Vertex hd = std::countr_zero(d);
          d &= d - 1;
          recomputed.push_back({{t, hd}, zj_.has(t, hd) ? 2 : -1});
        }
      }
      ensure(recomputed == cfg, "interesting arcs", "incremental tracking disagrees with recomputation");
      ensure(cfg.size() <= 5, "interesting arcs", std::to_string(cfg.size()) + " interesting arcs");
      if (!match_zoo(cfg)) {
        std::string desc;
        for (const LabelledArc& la : cfg) desc += " " + arc_string(la.arc) + ":" + std::to_string(la.label);
        throw InvariantViolation("zoo shape", "interesting arcs match no catalogue shape:" + desc + " after " + s.to_string());
      }
      if (cfg.size() == 5) ensure(five_arc_structure(cfg), "zoo five-arc structure", "(i)-(iii) fail");
    }
    if (trace_) {
      PathStep st;
      st.sw = s;
      st.segment = seg_index_;
      st.type = type;
      st.role = role;
      st.one_circuit = one_circuit;
      st.phase = phase;
      st.interesting = std::move(cfg);
      trace_->steps.push_back(std::move(st));
      trace_->states.push_back(z_);
    }
  }

  Digraph z_;
  Digraph zj_;
  Digraph seg_;
  std::set<Arc> seg_arcs_;
  std::map<Arc, int> interesting_;
  std::vector<Switch> emitted_;
  bool check_;
  PathTrace* trace_;
  std::size_t seg_index_ = 0;
  std::size_t seg_first_step_ = 0;
  int one_circuit_count_ = 0;
  int ecc_h_ = 0;
};

}  // namespace

Vertex TwoCircuitLabels::x(int i, int j) const {
  const std::size_t k2 = t.size();
  switch (((i & 1) << 1) | (j & 1)) {
    case 0: return t.verts[1];
    case 2: return t.verts[p - 1];
    case 3: return t.verts[p + 1];
    default: return t.verts[k2 - 1];
  }
}

Vertex TwoCircuitLabels::y(int i, int j) const {
  const std::size_t k2 = t.size();
  switch (((i & 1) << 1) | (j & 1)) {
    case 0: return t.at(2);
    case 2: return t.at(p - 2);
    case 3: return t.at(p + 2);
    default: return t.at(k2 - 2);
  }
}

Vertex TwoCircuitLabels::z(int i, int j) const {
  const std::size_t k2 = t.size();
  switch (((i & 1) << 1) | (j & 1)) {
    case 0: return t.at(3);
    case 2: return t.at(p + k2 - 3);
    case 3: return t.at(p + 3);
    default: return t.at(k2 - 3);
  }
}

std::vector<Vertex> TwoCircuitLabels::half_from(int j, int i) const {
  std::vector<Vertex> half = (j & 1) ? sub(t.verts, p + 1, t.size() - 1) : sub(t.verts, 1, p - 1);
  if ((i & 1) != (j & 1)) std::reverse(half.begin(), half.end());
  return half;
}

TwoCircuitLabels label_two_circuit(const Circuit& s) {
  const std::size_t k2 = s.size();
  const Vertex v = s.verts.front();
  std::vector<std::size_t> occ;
  for (std::size_t q = 0; q < k2; ++q)
    if (s.verts[q] == v) occ.push_back(q);
  ensure(occ.size() == 2, "2-circuit labelling", "v must occur exactly twice on " + s.to_string());
  // a reading must reproduce the arcs of s position by position
  std::optional<Circuit> best;
  for (std::size_t st : occ)
    for (int dir : {1, -1}) {
      Circuit c;
      for (std::size_t m = 0; m < k2; ++m) c.verts.push_back(s.verts[(st + (dir > 0 ? m : k2 - m)) % k2]);
      bool fwd = true;
      for (std::size_t m = 0; m < k2 && fwd; ++m) {
        const std::size_t orig = dir > 0 ? (st + m) % k2 : (st + k2 - m - 1) % k2;
        fwd = c.arc_at(m) == s.arc_at(orig);
      }
      if (fwd && (!best || c.verts[1] < best->verts[1])) best = c;
    }
  ensure(best.has_value(), "2-circuit labelling", "no forward reading of " + s.to_string());
  TwoCircuitLabels L;
  L.t = *best;
  for (std::size_t q = 1; q < k2; ++q)
    if (L.t.verts[q] == v) L.p = q;
  ensure(L.p % 2 == 1 && L.p >= 3 && k2 - L.p >= 3, "2-circuit labelling", "halves have the wrong parity");
  return L;
}

TwoCircuitClass classify_two_circuit(const Circuit& s, const Digraph& zj) {
  Builder b(zj, false, nullptr);
  return b.classify(label_two_circuit(s));
}

std::vector<Switch> process_one_circuit(const Circuit& s, const Digraph& zj) {
  Builder b(zj, true, nullptr);
  b.begin_segment(s, 0);
  b.one_circuit(s);
  b.end_segment("one-circuit");
  return b.emitted();
}

std::vector<Switch> process_normal(const Circuit& s, const Digraph& zj) {
  Builder b(zj, true, nullptr);
  b.begin_segment(s, 0);
  TwoCircuitLabels L = label_two_circuit(s);
  require(b.classify(L) == TwoCircuitClass::Normal, "process_normal: 2-circuit is not normal");
  b.normal(L, nullptr);
  b.end_segment("normal");
  return b.emitted();
}

std::vector<Switch> process_eccentric(const Circuit& s, const Digraph& zj) {
  Builder b(zj, true, nullptr);
  b.begin_segment(s, 0);
  TwoCircuitLabels L = label_two_circuit(s);
  require(b.classify(L) == TwoCircuitClass::Eccentric, "process_eccentric: 2-circuit is not eccentric");
  b.eccentric(L);
  b.end_segment("eccentric");
  return b.emitted();
}

std::vector<Switch> process_triangle(const Circuit& s, const Digraph& zj) {
  Builder b(zj, true, nullptr);
  b.begin_segment(s, 0);
  TwoCircuitLabels L = label_two_circuit(s);
  require(b.classify(L) == TwoCircuitClass::Triangle, "process_triangle: 2-circuit is not a triangle");
  b.triangle(L);
  b.end_segment("triangle");
  return b.emitted();
}

PathTrace build_canonical_path(const Digraph& g, const Digraph& g2, const Pairing& psi, const PathOptions& opt) {
  require(g.n() == g2.n() && g.d() == g2.d(), "build_canonical_path: mismatched digraphs");
  PathTrace trace;
  trace.states.push_back(g);
  const ColouredDiff h = sym_diff(g, g2);
  trace.circuits = decompose_circuits(h, psi);
  for (std::size_t ci = 0; ci < trace.circuits.size(); ++ci) {
    for (RawSegment& seg : split_raw_segments(trace.circuits[ci], ci)) {
      if (opt.check) ensure(well_paired(seg, psi), "well-paired", seg.s.to_string());
      trace.segments.push_back(seg);
    }
  }
  Builder b(g, opt.check, &trace);
  for (std::size_t si = 0; si < trace.segments.size(); ++si) b.run_raw(trace.segments[si], si);
  ensure(b.state() == g2, "path endpoint", "final state differs from G'");
  return trace;
}

}  // namespace swc
