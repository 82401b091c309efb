#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "switchchain/digraph.hpp"

namespace swc {

using BigInt = boost::multiprecision::cpp_int;

// Per-vertex bijections blue-in -> red-in and blue-out -> red-out.
// Blue arcs at a vertex are ordered lexicographically; the pairing is the
// image sequence (indices into the sorted red arcs) under that order.
class Pairing {
 public:
  Pairing() = default;
  Pairing(const ColouredDiff& h, std::vector<std::vector<int>> in_perm, std::vector<std::vector<int>> out_perm);

  const ColouredDiff& diff() const { return h_; }
  int n() const { return h_.n; }

  // the arc sharing a's head (resp. tail) that a is paired with
  Arc partner_at_head(Arc a) const;
  Arc partner_at_tail(Arc a) const;
  bool paired_at(Arc a, Arc b, Vertex v) const;

  const std::vector<int>& in_perm(Vertex v) const { return in_perm_[v]; }
  const std::vector<int>& out_perm(Vertex v) const { return out_perm_[v]; }
  std::vector<int> images() const;  // concatenated in-then-out images per vertex

 private:
  ColouredDiff h_;
  std::vector<std::vector<Vertex>> blue_in_, red_in_, blue_out_, red_out_;
  std::vector<std::vector<int>> in_perm_, out_perm_;
  std::vector<int> head_partner_;  // n*tail + head -> other tail, or -1
  std::vector<int> tail_partner_;  // n*tail + head -> other head, or -1
};

BigInt count_pairings(const ColouredDiff& h);
std::uint64_t count_pairings_u64(const ColouredDiff& h);  // throws CapExceeded on overflow

// index in mixed radix: (v0 in, v0 out, v1 in, ...), first component most
// significant; each component ranks permutations lexicographically
Pairing pairing_at(const ColouredDiff& h, std::uint64_t index);
void for_each_pairing(const ColouredDiff& h, const std::function<void(const Pairing&)>& fn);

// pairing built from explicit partner choices at heads and tails
Pairing pairing_from_pairs(const ColouredDiff& h, const std::vector<std::pair<Arc, Arc>>& at_head,
                           const std::vector<std::pair<Arc, Arc>>& at_tail);

}  // namespace swc
