#pragma once

// The tree on all partitions: every partition is the child of exactly one
// lighter partition, with the edge labeled by the column that received the
// extra grain. Level n of the tree is exactly the weight-n node set of the
// diagrams in lattice.hpp. The self-similar X_k subtrees living inside the
// tree drive an exact recursive count of partitions by weight and length.

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "domlat/partition.hpp"

namespace domlat {

/// Counting values grow like the partition function, past any fixed-width
/// integer; all counting here is arbitrary precision unconditionally.
using BigInt = boost::multiprecision::cpp_int;

/// A partition as a tree member: its depth is its weight, and every node
/// but the root records the column label of the edge from its parent.
struct TreeNode {
  Partition partition;
  int depth = 0;
  std::optional<int> parent_label;
};

/// The children of s: always the grain dropped on column 1, plus — when s
/// leads with a slippery plateau of length ell — the grain landing just
/// past the run, on column ell+1. At most two children, so the tree is
/// binary: a left son and an optional right son.
inline std::vector<std::pair<int, Partition>> children(const Partition& s) {
  std::vector<std::pair<int, Partition>> out;
  out.emplace_back(1, grow(s, 1));
  ColumnShape lead = leading_plateau(s);
  if (lead.kind == ShapeKind::SlipperyPlateau)
    out.emplace_back(lead.run_length + 1, grow(s, lead.run_length + 1));
  return out;
}

/// The unique parent: remove the grain from column 1 when that leaves a
/// partition (first column strictly tallest), otherwise from the end of the
/// leading run. Inverse of children(): s appears in children(parent) under
/// the returned label.
inline std::pair<int, Partition> parent(const Partition& s) {
  if (s.empty()) throw std::invalid_argument("the root has no parent");
  int col = s[0] > part_at(s, 2) ? 1 : detail::run_length_at(s, 1);
  Partition p = s;
  p[col - 1] -= 1;
  if (p[col - 1] == 0) p.pop_back();  // only the last column can hit zero
  return {col, p};
}

inline TreeNode tree_node_of(const Partition& s) {
  if (s.empty()) return {s, 0, std::nullopt};
  return {s, weight(s), parent(s).first};
}

/// All nodes of depth n, by n rounds of child expansion from the empty
/// root. The tree property promises no duplicates; that promise is checked
/// on every expansion rather than trusted.
inline std::vector<Partition> level(int n) {
  if (n < 0) throw std::invalid_argument("negative depth");
  std::vector<Partition> cur{Partition{}};
  for (int depth = 0; depth < n; ++depth) {
    std::vector<Partition> next;
    std::set<Partition> seen;
    for (const Partition& s : cur)
      for (const auto& [label, child] : children(s)) {
        if (!seen.insert(child).second)
          throw std::logic_error("duplicate tree node " + to_text(child) +
                                 " at depth " + std::to_string(depth + 1));
        next.push_back(child);
      }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

/// True when s can root an X_k subtree: exactly k leading columns of equal
/// height, then a drop (to zero counts). The empty partition roots nothing.
inline bool is_xk_root(const Partition& s, int k) {
  if (k < 1) throw std::invalid_argument("subtree order must be positive");
  return !s.empty() && detail::run_length_at(s, 1) == k;
}

/// Members of the X_k subtree rooted at s, up to the weight bound: s itself
/// plus the entire subtree under s's left son. When s has a right son that
/// son's subtree is cut off — that is what makes the X_k family
/// self-similar. k = 0 denotes the one-node subtree.
inline std::vector<Partition> xk_members(const Partition& s, int k, int max_weight) {
  if (weight(s) > max_weight)
    throw std::invalid_argument("subtree root already heavier than the bound");
  if (k == 0) return {s};
  if (!is_xk_root(s, k))
    throw std::invalid_argument("partition does not root an order-" + std::to_string(k) +
                                " subtree: " + to_text(s));
  std::vector<Partition> out{s};
  std::vector<Partition> stack;
  if (weight(s) + 1 <= max_weight) stack.push_back(grow(s, 1));
  while (!stack.empty()) {
    Partition cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    if (weight(cur) + 1 > max_weight) continue;
    for (const auto& [label, child] : children(cur)) stack.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Outcome of checking the chain structure of one X_k subtree, see
/// xk_chain_decomposition.
struct ChainReport {
  /// The k+1 chain nodes; node i+1 hangs under node i by the edge labeled i.
  std::vector<Partition> chain;
  bool chain_ok = false;   // every link is the correctly labeled child
  bool roots_ok = false;   // the i-th node roots an X_{i-1} subtree
  bool tiling_ok = false;  // the nested subtrees tile the whole X_k exactly
  /// First failure in human-readable form; empty when all checks pass.
  std::string counterexample;

  bool pass() const { return chain_ok && roots_ok && tiling_ok; }
};

/// Checks, up to the weight bound, that the X_k subtree rooted at s is the
/// chain s = node_1 -> ... -> node_{k+1} (edge labels 1..k) with an
/// X_{i-1} subtree hanging at node_i, the pieces disjoint and jointly
/// exhausting the X_k members. This is the recursive structure that the
/// counting formula below rides on.
inline ChainReport xk_chain_decomposition(const Partition& s, int k, int depth_bound) {
  if (k < 1 || !is_xk_root(s, k))
    throw std::invalid_argument("chain decomposition needs an order-k subtree root");
  ChainReport report;
  report.chain.push_back(s);
  report.chain_ok = report.roots_ok = true;
  for (int i = 1; i <= k; ++i) {
    const Partition& cur = report.chain.back();
    Partition next = grow(cur, i);
    auto kids = children(cur);
    bool linked = false;
    for (const auto& [label, child] : kids) linked |= (label == i && child == next);
    if (!linked) {
      report.chain_ok = false;
      report.counterexample = to_text(next) + " is not the label-" + std::to_string(i) +
                              " child of " + to_text(cur);
      return report;
    }
    if (!is_xk_root(next, i)) {
      report.roots_ok = false;
      report.counterexample = to_text(next) + " does not root an order-" +
                              std::to_string(i) + " subtree";
      return report;
    }
    report.chain.push_back(std::move(next));
  }
  // The last chain node must be a one-son node — the chain ends here.
  if (children(report.chain.back()).size() != 1) {
    report.chain_ok = false;
    report.counterexample = "chain tail " + to_text(report.chain.back()) + " has a second son";
    return report;
  }

  std::vector<Partition> whole = xk_members(s, k, depth_bound);
  std::set<Partition> tiled;
  for (int i = 0; i <= k; ++i) {
    if (weight(report.chain[i]) > depth_bound) break;  // piece entirely past the bound
    for (Partition& member : xk_members(report.chain[i], i == 0 ? 0 : i, depth_bound))
      if (!tiled.insert(std::move(member)).second) {
        report.counterexample = "subtree pieces overlap";
        return report;
      }
  }
  if (std::set<Partition>(whole.begin(), whole.end()) != tiled) {
    report.counterexample = "subtree pieces do not cover the whole subtree";
    return report;
  }
  report.tiling_ok = true;
  return report;
}

/// Memo store for the path-counting recurrence; keys are kept exactly as
/// asked (no normalization), values exact.
struct CountTable {
  std::map<std::pair<long long, long long>, BigInt> memo;
};

/// Number of length-l root paths in an X_k subtree:
///   c(l, k) = 1                          if l = 0 or k = 1
///   c(l, k) = sum_{i=1..min(l,k)} c(l-i, i)   otherwise
/// Arguments outside l >= 0, k >= 1 are rejected (k = 0 is meaningful only
/// for the empty path).
inline BigInt count_paths(long long l, long long k, CountTable& table) {
  if (l < 0 || k < 0) throw std::domain_error("negative counting argument");
  if (l == 0) return 1;
  if (k == 1) return 1;
  if (k == 0) throw std::domain_error("an order-0 subtree has no positive-length paths");
  auto it = table.memo.find({l, k});
  if (it != table.memo.end()) return it->second;
  BigInt total = 0;
  for (long long i = 1; i <= std::min(l, k); ++i) total += count_paths(l - i, i, table);
  table.memo.emplace(std::make_pair(l, k), total);
  return total;
}

/// Number of partitions of n, as the path count c(n, n).
inline BigInt partition_count(int n) {
  if (n < 0) throw std::domain_error("negative weight");
  CountTable table;
  return count_paths(n, n, table);
}

/// Number of partitions of n with exactly k parts, as the path count
/// c(n-k, k).
inline BigInt count_length_exact(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (k < 1 || k > n) throw std::domain_error("part count out of range");
  CountTable table;
  return count_paths(n - k, k, table);
}

/// The tree truncated at a depth bound, in DOT form: every node down to
/// `depth` with its labeled child edges; the root alone when depth is 0.
inline void write_tree_dot(std::ostream& out, int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  out << "digraph tree {\n";
  if (depth == 0) out << "  \"0\";\n";
  std::vector<Partition> cur{Partition{}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Partition> next;
    for (const Partition& s : cur)
      for (const auto& [label, child] : children(s)) {
        out << "  \"" << to_text(s) << "\" -> \"" << to_text(child)
            << "\" [label=" << label << "];\n";
        next.push_back(child);
      }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
  }
  out << "}\n";
}

/// Memo-table dump: CSV rows `l,k,c` ascending by (l, k).
inline void write_count_table_csv(std::ostream& out, const CountTable& table) {
  out << "l,k,c\n";
  for (const auto& [key, value] : table.memo)
    out << key.first << "," << key.second << "," << value << "\n";
}

}  // namespace domlat
