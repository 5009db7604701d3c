#pragma once

// Partitions with an infinite first column: the ambient order into which
// every fixed-weight diagram embeds. An element is written (inf, tail...);
// only the finite tail is stored. Comparisons ignore the bottomless first
// column and reduce to suffix sums of the tail, which makes elements of
// different tail weights comparable — the glue between consecutive weights
// in the stacked diagram built here.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlat/lattice.hpp"
#include "domlat/partition.hpp"

namespace domlat {

/// (inf, tail...) — an infinite first column followed by a finite partition.
struct InfPartition {
  Partition tail;

  friend bool operator==(const InfPartition&, const InfPartition&) = default;
  friend bool operator<(const InfPartition& a, const InfPartition& b) {
    return a.tail < b.tail;
  }
};

/// Text form mirrors the finite one with an `inf:` prefix: (inf, 2, 1) is
/// "inf:2,1", the bare infinite column is "inf:0".
inline std::string to_text(const InfPartition& s) { return "inf:" + to_text(s.tail); }

inline InfPartition parse_inf_partition(const std::string& text) {
  if (text.rfind("inf:", 0) != 0)
    throw std::invalid_argument("infinite partitions start with `inf:`");
  return {parse_partition(text.substr(4))};
}

namespace detail {

/// Suffix sums of the tail: entry j holds the grains strictly right of
/// column j+1 of (inf, tail...), i.e. the weight of tail[j..). One entry
/// past the end, which is always 0.
inline std::vector<long long> suffix_sums(const Partition& tail) {
  std::vector<long long> sums(tail.size() + 1, 0);
  for (int j = static_cast<int>(tail.size()) - 1; j >= 0; --j)
    sums[j] = sums[j + 1] + tail[j];
  return sums;
}

}  // namespace detail

/// Order test: s below-or-equal t when every suffix of s (from the second
/// column on) carries at least as many grains as the matching suffix of t.
/// The infinite first column absorbs any weight difference, so tails of
/// different weights compare fine.
inline bool inf_leq(const InfPartition& s, const InfPartition& t) {
  auto a = detail::suffix_sums(s.tail);
  auto b = detail::suffix_sums(t.tail);
  for (std::size_t j = 0; j < std::max(a.size(), b.size()); ++j) {
    long long sa = j < a.size() ? a[j] : 0;
    long long sb = j < b.size() ? b[j] : 0;
    if (sa < sb) return false;
  }
  return true;
}

/// Greatest lower bound: suffix sums of the meet are the pointwise maximum
/// of the two suffix-sum profiles. The maximum of two convex profiles is
/// convex, so differencing gives back a genuine (nonincreasing) tail.
inline InfPartition inf_meet(const InfPartition& s, const InfPartition& t) {
  auto a = detail::suffix_sums(s.tail);
  auto b = detail::suffix_sums(t.tail);
  std::size_t len = std::max(a.size(), b.size());
  std::vector<long long> merged(len, 0);
  for (std::size_t j = 0; j < len; ++j)
    merged[j] = std::max(j < a.size() ? a[j] : 0, j < b.size() ? b[j] : 0);
  Partition tail;
  for (std::size_t j = 0; j + 1 < len; ++j)
    tail.push_back(static_cast<int>(merged[j] - merged[j + 1]));
  while (!tail.empty() && tail.back() == 0) tail.pop_back();
  for (std::size_t j = 0; j + 1 < tail.size(); ++j)
    if (tail[j] < tail[j + 1]) throw std::logic_error("meet profile failed to diff back");
  return {tail};
}

namespace detail {

/// All partitions of weight w, largest part first. Local enumerator so the
/// infinite module stands on its own.
inline std::vector<Partition> tails_of_weight(int w) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, w, w);
  return out;
}

}  // namespace detail

/// Least upper bound, by bounded search: every upper bound has suffix sums
/// below both inputs', so its tail weighs at most the lighter input tail.
/// All candidate tails up to that weight are scanned; the unique upper
/// bound lying below every other is the join. (Pointwise minimum of the
/// suffix profiles can fail convexity, so unlike the meet this one is not a
/// one-pass formula.) A missing or ambiguous least element would mean the
/// weight bound or the order test is broken, and fails loudly.
inline InfPartition inf_join(const InfPartition& s, const InfPartition& t) {
  int bound = std::min(weight(s.tail), weight(t.tail));
  std::vector<InfPartition> uppers;
  for (int w = 0; w <= bound; ++w)
    for (const Partition& tail : detail::tails_of_weight(w)) {
      InfPartition u{tail};
      if (inf_leq(s, u) && inf_leq(t, u)) uppers.push_back(std::move(u));
    }
  std::vector<const InfPartition*> least;
  for (const InfPartition& u : uppers) {
    bool below_all = true;
    for (const InfPartition& v : uppers)
      if (!inf_leq(u, v)) {
        below_all = false;
        break;
      }
    if (below_all) least.push_back(&u);
  }
  if (least.size() != 1)
    throw std::logic_error("join search found " + std::to_string(least.size()) +
                           " least upper bounds of " + to_text(s) + " and " + to_text(t));
  return *least.front();
}

/// Forgets how tall the first column is: (s1, s2, ...) -> (inf, s2, ...).
/// Restricted to one weight this is an order embedding; the first column
/// never decides a dominance comparison in which it is the largest part.
inline InfPartition pi_embed(const Partition& s) {
  if (s.empty()) throw std::invalid_argument("cannot embed the empty partition");
  return {Partition(s.begin() + 1, s.end())};
}

/// Shifts a whole partition one column right under the infinite column:
/// s -> (inf, s1, s2, ...).
inline InfPartition chi(const Partition& s) { return {s}; }

/// Inverse of the shift: recovers the partition sitting right of column 1.
inline Partition chi_inverse(const InfPartition& s) { return s.tail; }

/// The stacked diagram of every weight up to n in one cumulative store:
/// each weight contributes its own nodes and grain edges, and every node of
/// weight below n gets a 0-labeled link to itself-plus-one-grain-on-column-1
/// — the move the infinite first column offers for free. The empty
/// partition sits at the top; (1, ..., 1) of weight n at the bottom.
inline LatticeDiagram build_L_leq(int n) {
  if (n < 0) throw std::invalid_argument("negative weight bound");
  LatticeDiagram out = LatticeDiagram::cumulative(n);
  LatticeDiagram level = build_naive(0);
  for (int m = 0;; ++m) {
    std::vector<LatticeDiagram::Handle> mapped(level.node_count());
    for (LatticeDiagram::Handle h = 0; h < level.node_count(); ++h)
      mapped[h] = out.insert_node(level.partition_of(h)).first;
    level.for_each_edge([&](LatticeDiagram::Handle src, int label, LatticeDiagram::Handle dst) {
      out.add_edge(mapped[src], mapped[dst], label);
    });
    if (m == n) break;
    build_incremental_inplace(level);
  }
  for (LatticeDiagram::Handle h = 0; h < out.node_count(); ++h) {
    Partition s = out.partition_of(h);
    if (weight(s) >= n) continue;
    auto below = out.find(grow(s, 1));
    if (!below) throw std::logic_error("grown node missing from the stacked diagram");
    out.add_edge(h, *below, 0);
  }
  return out;
}

}  // namespace domlat
