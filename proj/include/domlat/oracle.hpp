#pragma once

// Brute-force reference implementations used as ground truth by the test
// suites. Everything here is computed from first principles (prefix sums,
// exhaustive scans) and deliberately shares nothing with the main modules
// except the Partition value type itself: duplicated logic is the point.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domlat/partition.hpp"

namespace domlat::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// All partitions of n, each once, in lexicographically decreasing order of
/// part sequences: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  Partition cur;
  // Depth-first with the largest feasible part first gives the required order.
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace detail {

/// Dominance test written out independently of the main modules.
inline bool prefix_leq(const Partition& s, const Partition& t) {
  std::size_t len = std::max(s.size(), t.size());
  long long ps = 0, pt = 0;
  for (std::size_t i = 0; i < len; ++i) {
    ps += i < s.size() ? s[i] : 0;
    pt += i < t.size() ? t[i] : 0;
    if (ps > pt) return false;
  }
  return true;
}

}  // namespace detail

/// The full dominance relation over the partitions of n, as a boolean table.
/// Construction asserts the poset axioms (reflexive, antisymmetric,
/// transitive) so downstream checks can rely on them.
struct OrderRelation {
  int weight_n = 0;
  std::vector<Partition> elems;
  std::map<Partition, int> index;
  std::vector<std::vector<char>> leq;  // leq[a][b]: elems[a] <= elems[b]

  bool less_eq(const Partition& s, const Partition& t) const {
    return leq[index.at(s)][index.at(t)] != 0;
  }
};

inline OrderRelation dominance_relation(int n) {
  OrderRelation r;
  r.weight_n = n;
  r.elems = enumerate_partitions(n);
  int p = static_cast<int>(r.elems.size());
  for (int a = 0; a < p; ++a) r.index[r.elems[a]] = a;
  r.leq.assign(p, std::vector<char>(p, 0));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      r.leq[a][b] = detail::prefix_leq(r.elems[a], r.elems[b]) ? 1 : 0;
  for (int a = 0; a < p; ++a) {
    if (!r.leq[a][a]) throw std::logic_error("dominance relation not reflexive");
    for (int b = 0; b < p; ++b) {
      if (a != b && r.leq[a][b] && r.leq[b][a])
        throw std::logic_error("dominance relation not antisymmetric");
      for (int c = 0; c < p; ++c)
        if (r.leq[a][b] && r.leq[b][c] && !r.leq[a][c])
          throw std::logic_error("dominance relation not transitive");
    }
  }
  return r;
}

/// All covering pairs (s, t): s > t with nothing strictly between, found by
/// a cubic scan over the full relation. This is the ground truth for the
/// edge set of the lattice diagram of weight n.
inline std::vector<std::pair<Partition, Partition>> covers_bruteforce(int n) {
  OrderRelation r = dominance_relation(n);
  int p = static_cast<int>(r.elems.size());
  std::vector<std::pair<Partition, Partition>> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      if (a == b || !r.leq[b][a]) continue;  // need elems[a] > elems[b]
      bool strictly_between = false;
      for (int c = 0; c < p && !strictly_between; ++c)
        if (c != a && c != b && r.leq[b][c] && r.leq[c][a]) strictly_between = true;
      if (!strictly_between) out.emplace_back(r.elems[a], r.elems[b]);
    }
  return out;
}

namespace detail {

inline std::string pair_text(const Partition& s, const Partition& t) {
  return "(" + to_text(s) + ", " + to_text(t) + ")";
}

}  // namespace detail

/// Greatest lower bound of s and t by exhaustive scan over all partitions of
/// their weight. Throws if the set of maximal lower bounds is not a single
/// element: that would falsify the lattice property itself.
inline Partition meet_bruteforce(const Partition& s, const Partition& t) {
  if (weight(s) != weight(t)) throw std::invalid_argument("meet requires equal weights");
  std::vector<Partition> lower;
  for (const Partition& u : enumerate_partitions(weight(s)))
    if (detail::prefix_leq(u, s) && detail::prefix_leq(u, t)) lower.push_back(u);
  std::vector<Partition> maximal;
  for (const Partition& u : lower) {
    bool dominated = false;
    for (const Partition& v : lower)
      if (v != u && detail::prefix_leq(u, v)) dominated = true;
    if (!dominated) maximal.push_back(u);
  }
  if (maximal.size() != 1) {
    std::ostringstream msg;
    msg << "meet" << detail::pair_text(s, t) << ": " << maximal.size()
        << " maximal lower bounds";
    throw std::runtime_error(msg.str());
  }
  return maximal.front();
}

/// Least upper bound, dual scan with the same uniqueness diagnostic.
inline Partition join_bruteforce(const Partition& s, const Partition& t) {
  if (weight(s) != weight(t)) throw std::invalid_argument("join requires equal weights");
  std::vector<Partition> upper;
  for (const Partition& u : enumerate_partitions(weight(s)))
    if (detail::prefix_leq(s, u) && detail::prefix_leq(t, u)) upper.push_back(u);
  std::vector<Partition> minimal;
  for (const Partition& u : upper) {
    bool dominates = false;
    for (const Partition& v : upper)
      if (v != u && detail::prefix_leq(v, u)) dominates = true;
    if (!dominates) minimal.push_back(u);
  }
  if (minimal.size() != 1) {
    std::ostringstream msg;
    msg << "join" << detail::pair_text(s, t) << ": " << minimal.size()
        << " minimal upper bounds";
    throw std::runtime_error(msg.str());
  }
  return minimal.front();
}

/// p(n) by the classic bounded-largest-part dynamic program, independent of
/// both the enumeration above and the recursive path-count table.
inline BigInt partition_count_dp(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<BigInt> dp(n + 1);
  dp[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) dp[m] += dp[m - k];
  return dp[n];
}

}  // namespace domlat::oracle
