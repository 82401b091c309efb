#include "switchchain/pairing.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "switchchain/errors.hpp"

namespace swc {

namespace {

std::vector<Vertex> bits(std::uint64_t m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<int> unrank_permutation(std::uint64_t r, int k) {
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  for (int i = k; i >= 1; --i) {
    std::uint64_t f = factorial(i - 1);
    auto idx = static_cast<std::size_t>(r / f);
    r %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

}  // namespace

Pairing::Pairing(const ColouredDiff& h, std::vector<std::vector<int>> in_perm, std::vector<std::vector<int>> out_perm)
    : h_(h), in_perm_(std::move(in_perm)), out_perm_(std::move(out_perm)) {
  require(h.balanced(), "Pairing: coloured difference is unbalanced");
  const int n = h.n;
  require(static_cast<int>(in_perm_.size()) == n && static_cast<int>(out_perm_.size()) == n,
          "Pairing: need one permutation per vertex");
  blue_in_.resize(n);
  red_in_.resize(n);
  blue_out_.resize(n);
  red_out_.resize(n);
  head_partner_.assign(static_cast<std::size_t>(n) * n, -1);
  tail_partner_.assign(static_cast<std::size_t>(n) * n, -1);
  auto is_perm = [](const std::vector<int>& p, std::size_t k) {
    if (p.size() != k) return false;
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < k; ++i)
      if (s[i] != static_cast<int>(i)) return false;
    return true;
  };
  for (Vertex v = 0; v < n; ++v) {
    blue_in_[v] = bits(h.blue.in_col(v));
    red_in_[v] = bits(h.red.in_col(v));
    blue_out_[v] = bits(h.blue.out_row(v));
    red_out_[v] = bits(h.red.out_row(v));
    require(is_perm(in_perm_[v], blue_in_[v].size()), "Pairing: in-permutation has wrong shape");
    require(is_perm(out_perm_[v], blue_out_[v].size()), "Pairing: out-permutation has wrong shape");
    for (std::size_t k = 0; k < blue_in_[v].size(); ++k) {
      Vertex b = blue_in_[v][k], r = red_in_[v][in_perm_[v][k]];
      head_partner_[static_cast<std::size_t>(b) * n + v] = r;
      head_partner_[static_cast<std::size_t>(r) * n + v] = b;
    }
    for (std::size_t k = 0; k < blue_out_[v].size(); ++k) {
      Vertex b = blue_out_[v][k], r = red_out_[v][out_perm_[v][k]];
      tail_partner_[static_cast<std::size_t>(v) * n + b] = r;
      tail_partner_[static_cast<std::size_t>(v) * n + r] = b;
    }
  }
}

Arc Pairing::partner_at_head(Arc a) const {
  int t = head_partner_[static_cast<std::size_t>(a.tail) * h_.n + a.head];
  if (t < 0) throw ContractError("Pairing: arc " + arc_string(a) + " is not in H");
  return {t, a.head};
}

Arc Pairing::partner_at_tail(Arc a) const {
  int hd = tail_partner_[static_cast<std::size_t>(a.tail) * h_.n + a.head];
  if (hd < 0) throw ContractError("Pairing: arc " + arc_string(a) + " is not in H");
  return {a.tail, hd};
}

bool Pairing::paired_at(Arc a, Arc b, Vertex v) const {
  if (!h_.contains(a) || !h_.contains(b)) return false;
  if (a.head == v && b.head == v) return partner_at_head(a) == b;
  if (a.tail == v && b.tail == v) return partner_at_tail(a) == b;
  return false;
}

std::vector<int> Pairing::images() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < in_perm_.size(); ++v) {
    out.insert(out.end(), in_perm_[v].begin(), in_perm_[v].end());
    out.insert(out.end(), out_perm_[v].begin(), out_perm_[v].end());
  }
  return out;
}

BigInt count_pairings(const ColouredDiff& h) {
  require(h.balanced(), "count_pairings: coloured difference is unbalanced");
  BigInt c = 1;
  for (Vertex v = 0; v < h.n; ++v) {
    for (int k = 2; k <= h.theta(v); ++k) c *= k;
    for (int k = 2; k <= h.phi(v); ++k) c *= k;
  }
  return c;
}

std::uint64_t count_pairings_u64(const ColouredDiff& h) {
  BigInt c = count_pairings(h);
  if (c > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw CapExceeded("count_pairings: pairing count does not fit in 64 bits");
  return static_cast<std::uint64_t>(c);
}

Pairing pairing_at(const ColouredDiff& h, std::uint64_t index) {
  const int n = h.n;
  std::vector<std::vector<int>> in(n), out(n);
  std::uint64_t r = index;
  // least significant component first
  for (Vertex v = n - 1; v >= 0; --v) {
    std::uint64_t fo = factorial(h.phi(v));
    out[v] = unrank_permutation(r % fo, h.phi(v));
    r /= fo;
    std::uint64_t fi = factorial(h.theta(v));
    in[v] = unrank_permutation(r % fi, h.theta(v));
    r /= fi;
  }
  require(r == 0, "pairing_at: index out of range");
  return Pairing(h, std::move(in), std::move(out));
}

void for_each_pairing(const ColouredDiff& h, const std::function<void(const Pairing&)>& fn) {
  const std::uint64_t total = count_pairings_u64(h);
  for (std::uint64_t k = 0; k < total; ++k) fn(pairing_at(h, k));
}

Pairing pairing_from_pairs(const ColouredDiff& h, const std::vector<std::pair<Arc, Arc>>& at_head,
                           const std::vector<std::pair<Arc, Arc>>& at_tail) {
  const int n = h.n;
  std::vector<std::vector<int>> in(n), out(n);
  for (Vertex v = 0; v < n; ++v) {
    in[v].assign(h.theta(v), -1);
    out[v].assign(h.phi(v), -1);
  }
  auto index_in = [](std::uint64_t mask, Vertex x) {
    return std::popcount(mask & ((std::uint64_t{1} << x) - 1));
  };
  for (auto [a, b] : at_head) {
    require(a.head == b.head, "pairing_from_pairs: head pair must share a head");
    if (h.red.has(a)) std::swap(a, b);
    require(h.blue.has(a) && h.red.has(b), "pairing_from_pairs: need one blue and one red arc");
    Vertex v = a.head;
    in[v][index_in(h.blue.in_col(v), a.tail)] = index_in(h.red.in_col(v), b.tail);
  }
  for (auto [a, b] : at_tail) {
    require(a.tail == b.tail, "pairing_from_pairs: tail pair must share a tail");
    if (h.red.has(a)) std::swap(a, b);
    require(h.blue.has(a) && h.red.has(b), "pairing_from_pairs: need one blue and one red arc");
    Vertex v = a.tail;
    out[v][index_in(h.blue.out_row(v), a.head)] = index_in(h.red.out_row(v), b.head);
  }
  return Pairing(h, std::move(in), std::move(out));
}

}  // namespace swc
