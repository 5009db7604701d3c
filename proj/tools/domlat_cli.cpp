// Command-line front end: builds and exports dominance diagrams, evaluates
// meets/joins (finite and infinite), renders the partition tree, runs the
// counting recurrence, verifies the whole invariant suite against the
// brute-force reference, and benchmarks the incremental construction.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domlat/infinite.hpp"
#include "domlat/io.hpp"
#include "domlat/lattice.hpp"
#include "domlat/oracle.hpp"
#include "domlat/partition.hpp"
#include "domlat/tree.hpp"

namespace {

using namespace domlat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

/// Everything one invocation asked for, filled in by the argument parser.
struct RunConfig {
  std::string command;
  int n = 0;          // build / count / verify weight
  int depth = 0;      // tree
  int bound = 0;      // linf
  int from = 0;       // bench range
  int to = 0;
  int length = -1;    // count --length, -1 when absent
  bool check = false;
  bool force = false;
  std::string method = "incremental";
  std::string format = "edges";
  std::string output_path;  // empty = standard output
  std::string table_path;   // count --table
  std::vector<std::string> operands;  // partition texts for meet/join/render
};

/// Writes through `fn` to the chosen sink; all file trouble maps to the
/// I/O exit code.
int emit(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return kExitIo;
  }
  fn(out);
  out.close();
  if (!out) {
    std::cerr << "writing " << path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

LatticeDiagram build_by_method(int n, const std::string& method) {
  if (method == "naive") return build_naive(n);
  LatticeDiagram d = build_naive(0);
  for (int m = 0; m < n; ++m) build_incremental_inplace(d);
  return d;
}

int write_diagram(const LatticeDiagram& d, const RunConfig& cfg) {
  return emit(cfg.output_path, [&](std::ostream& out) {
    if (cfg.format == "edges")
      write_edges(out, d);
    else if (cfg.format == "dot")
      write_dot(out, d);
    else
      write_json(out, d);
  });
}

int cmd_build(const RunConfig& cfg) {
  return write_diagram(build_by_method(cfg.n, cfg.method), cfg);
}

int cmd_linf(const RunConfig& cfg) { return write_diagram(build_L_leq(cfg.bound), cfg); }

int cmd_tree(const RunConfig& cfg) {
  // --format admits only "dot"; an unset format falls through to dot as well.
  return emit(cfg.output_path, [&](std::ostream& out) { write_tree_dot(out, cfg.depth); });
}

int cmd_count(const RunConfig& cfg) {
  CountTable table;
  BigInt value;
  try {
    if (cfg.length >= 0) {
      if (cfg.n == 0 && cfg.length == 0)
        value = 1;
      else if (cfg.length < 1 || cfg.length > cfg.n) {
        std::cerr << "--length must satisfy 1 <= k <= n\n";
        return kExitUsage;
      } else
        value = count_paths(cfg.n - cfg.length, cfg.length, table);
    } else {
      value = count_paths(cfg.n, cfg.n, table);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  bool ok = true;
  if (cfg.check) {
    BigInt reference;
    if (cfg.length >= 1) {
      long long hits = 0;  // independent reference: filter the enumeration
      for (const Partition& s : oracle::enumerate_partitions(cfg.n))
        if (static_cast<int>(s.size()) == cfg.length) ++hits;
      reference = hits;
    } else {
      reference = oracle::partition_count_dp(cfg.n);
    }
    ok = value == reference;
    std::cout << value << " " << reference << (ok ? " OK" : " MISMATCH") << "\n";
  } else {
    std::cout << value << "\n";
  }
  if (!cfg.table_path.empty()) {
    int rc = emit(cfg.table_path,
                  [&](std::ostream& out) { write_count_table_csv(out, table); });
    if (rc != kExitOk) return rc;
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_meet_join(const RunConfig& cfg, bool joining) {
  const std::string& a = cfg.operands[0];
  const std::string& b = cfg.operands[1];
  bool inf_a = a.rfind("inf:", 0) == 0;
  bool inf_b = b.rfind("inf:", 0) == 0;
  try {
    if (inf_a != inf_b) throw std::invalid_argument("cannot mix finite and infinite operands");
    if (inf_a) {
      InfPartition x = parse_inf_partition(a), y = parse_inf_partition(b);
      std::cout << to_text(joining ? inf_join(x, y) : inf_meet(x, y)) << "\n";
    } else {
      Partition x = parse_partition(a), y = parse_partition(b);
      std::cout << to_text(joining ? join(x, y) : meet(x, y)) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_render(const RunConfig& cfg) {
  try {
    std::cout << render_ferrers(parse_partition(cfg.operands[0]));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg) {
  int start = std::max(cfg.from, 1);  // the step out of weight 0 is warmup-only
  if (start >= cfg.to) {
    std::cerr << "empty measurable range: need max(from,1) < to\n";
    return kExitUsage;
  }
  LatticeDiagram d = build_naive(0);
  for (int m = 0; m < start; ++m) build_incremental_inplace(d);
  std::cout << "# warmup: diagram chained to weight " << start << " untimed\n"
            << "# columns: n added_nodes added_edges seconds ns_per_item\n"
            << "# additions are gross: the one edge rerouted per slippery-step node"
               " is not netted out\n";
  double best = 0, worst = 0;
  std::cout << std::fixed;
  for (int n = start; n < cfg.to; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    StepStats stats = build_incremental_inplace(d);
    auto t1 = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();
    long long items = stats.added_nodes + stats.added_edges;
    double per_item = seconds * 1e9 / static_cast<double>(items);
    if (n == start || per_item < best) best = per_item;
    if (n == start || per_item > worst) worst = per_item;
    std::cout << n << "\t" << stats.added_nodes << "\t" << stats.added_edges << "\t"
              << std::setprecision(6) << seconds << "\t" << std::setprecision(1)
              << per_item << "\n";
  }
  std::cout << "max/min per-item ratio: " << std::setprecision(2) << worst / best << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: every cross-module invariant suite at weight <= N.

using Suite = std::function<bool(std::string& detail)>;

std::vector<Partition> sorted_partitions(int n) {
  std::vector<Partition> all = oracle::enumerate_partitions(n);
  std::sort(all.begin(), all.end());
  return all;
}

bool suite_diagram_invariants(int n, std::string& detail) {
  for (int m = 0; m <= n; ++m) {
    VerifyReport report = verify_lattice(build_naive(m));
    for (const auto& entry : report.entries)
      if (!entry.pass) {
        detail = "weight " + std::to_string(m) + ": " + entry.check;
        return false;
      }
  }
  return true;
}

bool suite_incremental_matches_naive(int n, std::string& detail) {
  LatticeDiagram chained = build_naive(0);
  for (int m = 0; m <= n; ++m) {
    std::ostringstream a, b;
    write_edges(a, chained);
    write_edges(b, build_naive(m));
    if (a.str() != b.str()) {
      detail = "diverges at weight " + std::to_string(m);
      return false;
    }
    if (m < n) build_incremental_inplace(chained);
  }
  return true;
}

/// The three frontier families as plain partition sets, for comparisons.
struct FamilySets {
  std::set<Partition> slippery, blocked;
  std::map<int, std::set<Partition>> plateaus;
  friend bool operator==(const FamilySets&, const FamilySets&) = default;
};

FamilySets family_sets(const LatticeDiagram& d, const FrontierSets& f) {
  FamilySets out;
  for (auto h : f.slippery_step_nodes) out.slippery.insert(d.partition_of(h));
  for (auto h : f.non_slippery_step_nodes) out.blocked.insert(d.partition_of(h));
  for (const auto& [run, hs] : f.plateau_nodes)
    for (auto h : hs) out.plateaus[run].insert(d.partition_of(h));
  return out;
}

bool suite_frontier_families(int n, std::string& detail) {
  int cap = std::min(n, 12);
  LatticeDiagram chained = build_naive(0);
  for (int m = 0; m <= cap; ++m) {
    // Seeded walk and full scan must find the same families.
    FamilySets walked = family_sets(chained, find_frontier_sets(chained));
    LatticeDiagram fresh = chained;
    fresh.set_frontier_handles({});
    FamilySets scanned = family_sets(fresh, find_frontier_sets(fresh));
    if (walked != scanned) {
      detail = "seeded walk misses members at weight " + std::to_string(m);
      return false;
    }
    // The families plus the one-grain lift must tile the next weight exactly.
    std::set<Partition> next;
    for (const Partition& s : oracle::enumerate_partitions(m)) {
      if (!next.insert(grow(s, 1)).second) {
        detail = "lift collision at weight " + std::to_string(m + 1);
        return false;
      }
    }
    auto add_disjoint = [&](const Partition& p) {
      if (!next.insert(p).second) {
        detail = "new node " + to_text(p) + " collides at weight " + std::to_string(m + 1);
        return false;
      }
      return true;
    };
    for (const Partition& s : scanned.slippery)
      if (!add_disjoint(grow(s, 2))) return false;
    for (const Partition& s : scanned.blocked)
      if (!add_disjoint(grow(s, 2))) return false;
    for (const auto& [run, members] : scanned.plateaus)
      for (const Partition& s : members)
        if (!add_disjoint(grow(s, run + 1))) return false;
    std::vector<Partition> expected = sorted_partitions(m + 1);
    if (std::set<Partition>(expected.begin(), expected.end()) != next) {
      detail = "families do not cover weight " + std::to_string(m + 1);
      return false;
    }
    if (m < cap) build_incremental_inplace(chained);
  }
  return true;
}

bool suite_lift_preserves_meet_join(int n, std::string& detail) {
  for (int m = 0; m <= std::min(n, 10); ++m) {
    std::vector<Partition> all = oracle::enumerate_partitions(m);
    for (const Partition& a : all)
      for (const Partition& b : all) {
        if (meet(grow(a, 1), grow(b, 1)) != grow(meet(a, b), 1) ||
            join(grow(a, 1), grow(b, 1)) != grow(join(a, b), 1)) {
          detail = "lift of " + to_text(a) + " and " + to_text(b);
          return false;
        }
      }
  }
  return true;
}

bool suite_lattice_laws(int n, std::string& detail) {
  for (int m = 0; m <= std::min(n, 10); ++m) {
    std::vector<Partition> all = oracle::enumerate_partitions(m);
    for (const Partition& a : all) {
      if (meet(a, a) != a || join(a, a) != a) {
        detail = "idempotence at " + to_text(a);
        return false;
      }
      for (const Partition& b : all) {
        if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) {
          detail = "commutativity at " + to_text(a) + ", " + to_text(b);
          return false;
        }
        if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
          detail = "absorption at " + to_text(a) + ", " + to_text(b);
          return false;
        }
        for (const Partition& c : all)
          if (meet(meet(a, b), c) != meet(a, meet(b, c)) ||
              join(join(a, b), c) != join(a, join(b, c))) {
            detail = "associativity at " + to_text(a) + ", " + to_text(b) + ", " + to_text(c);
            return false;
          }
      }
    }
  }
  return true;
}

bool suite_stacked_diagram(int n, std::string& detail) {
  int bound = std::min(n, 8);
  LatticeDiagram stacked = build_L_leq(bound);
  long long expected_nodes = 0, expected_zero_edges = 0;
  for (int m = 0; m <= bound; ++m) {
    long long p = static_cast<long long>(oracle::enumerate_partitions(m).size());
    expected_nodes += p;
    if (m < bound) expected_zero_edges += p;
  }
  if (stacked.node_count() != expected_nodes) {
    detail = "node count " + std::to_string(stacked.node_count());
    return false;
  }
  long long zero_edges = 0;
  bool zero_targets_ok = true;
  stacked.for_each_edge([&](LatticeDiagram::Handle src, int label, LatticeDiagram::Handle dst) {
    if (label != 0) return;
    ++zero_edges;
    if (stacked.partition_of(dst) != grow(stacked.partition_of(src), 1)) zero_targets_ok = false;
  });
  if (zero_edges != expected_zero_edges || !zero_targets_ok) {
    detail = "0-link structure";
    return false;
  }
  // Per weight, the embedded grain edges must be exactly the single-weight ones.
  for (int m = 0; m <= bound; ++m) {
    std::set<Transition> expected;
    for (const Partition& s : oracle::enumerate_partitions(m))
      for (const Transition& t : transitions(s)) expected.insert(t);
    std::set<Transition> got;
    stacked.for_each_edge([&](LatticeDiagram::Handle src, int label, LatticeDiagram::Handle dst) {
      Partition sp = stacked.partition_of(src);
      if (label != 0 && weight(sp) == m) got.insert({sp, label, stacked.partition_of(dst)});
    });
    if (expected != got) {
      detail = "embedded edges at weight " + std::to_string(m);
      return false;
    }
  }
  return true;
}

bool suite_embeddings(int n, std::string& detail) {
  int bound = std::min(n, 8);
  // The first-column-forgetting map preserves meet and join.
  for (int m = 1; m <= bound; ++m) {
    std::vector<Partition> all = oracle::enumerate_partitions(m);
    for (const Partition& a : all)
      for (const Partition& b : all) {
        if (pi_embed(meet(a, b)) != inf_meet(pi_embed(a), pi_embed(b)) ||
            pi_embed(join(a, b)) != inf_join(pi_embed(a), pi_embed(b))) {
          detail = "forgetting map at " + to_text(a) + ", " + to_text(b);
          return false;
        }
        // The column-shift map turns equal-weight meets into infinite meets.
        if (inf_meet(chi(a), chi(b)) != chi(meet(a, b))) {
          detail = "shift map at " + to_text(a) + ", " + to_text(b);
          return false;
        }
      }
  }
  // Label shift: under one tall padding column, every move of s happens one
  // column to the right, plus the single padding fall.
  for (int m = 0; m <= bound; ++m)
    for (const Partition& s : oracle::enumerate_partitions(m)) {
      std::vector<int> padded_raw{m + 2};
      padded_raw.insert(padded_raw.end(), s.begin(), s.end());
      Partition padded = make_partition(padded_raw);
      std::set<std::pair<int, Partition>> got;
      for (const Transition& t : transitions(padded)) got.insert({t.label, t.target});
      std::set<std::pair<int, Partition>> expected;
      std::vector<int> fall{m + 1};
      Partition grown = grow(s, 1);
      fall.insert(fall.end(), grown.begin(), grown.end());
      expected.insert({1, make_partition(fall)});
      for (const Transition& t : transitions(s)) {
        std::vector<int> lifted{m + 2};
        lifted.insert(lifted.end(), t.target.begin(), t.target.end());
        expected.insert({t.label + 1, make_partition(lifted)});
      }
      if (got != expected) {
        detail = "label shift at " + to_text(s);
        return false;
      }
    }
  return true;
}

bool suite_infinite_order(int n, std::string& detail) {
  int bound = std::min(n, 8);
  std::vector<InfPartition> universe;
  for (int m = 0; m <= bound; ++m)
    for (const Partition& tail : oracle::enumerate_partitions(m)) universe.push_back({tail});
  for (const InfPartition& a : universe)
    for (const InfPartition& b : universe) {
      // Exhaustive infimum: unique maximal element among the common lower bounds.
      std::vector<const InfPartition*> lowers;
      for (const InfPartition& c : universe)
        if (inf_leq(c, a) && inf_leq(c, b)) lowers.push_back(&c);
      const InfPartition* best = nullptr;
      int maximal = 0;
      for (const InfPartition* c : lowers) {
        bool above_all = true;
        for (const InfPartition* d : lowers)
          if (!inf_leq(*d, *c)) {
            above_all = false;
            break;
          }
        if (above_all) {
          ++maximal;
          best = c;
        }
      }
      if (maximal != 1 || inf_meet(a, b) != *best) {
        detail = "infimum of " + to_text(a) + " and " + to_text(b);
        return false;
      }
    }
  // Membership bound: every element equals the forgetting map of a concrete
  // partition one column wider.
  for (const InfPartition& u : universe) {
    std::vector<int> rep{(u.tail.empty() ? 0 : u.tail[0]) + 1};
    rep.insert(rep.end(), u.tail.begin(), u.tail.end());
    if (pi_embed(make_partition(rep)) != u) {
      detail = "representative of " + to_text(u);
      return false;
    }
  }
  // Image characterization at a smaller bound: the weight-m diagram maps
  // exactly onto the tails sigma with |sigma| + sigma_1 <= m, and that image
  // is closed under the infinite meet and join.
  int small = std::min(n, 6);
  if (small < 1) return true;  // the map drops a column, so it needs one
  std::set<Partition> image;
  for (const Partition& s : oracle::enumerate_partitions(small))
    image.insert(pi_embed(s).tail);
  for (int m = 0; m <= small; ++m)
    for (const Partition& tail : oracle::enumerate_partitions(m)) {
      bool predicted = m + (tail.empty() ? 0 : tail[0]) <= small;
      if (predicted != (image.count(tail) > 0)) {
        detail = "image membership at " + to_text(InfPartition{tail});
        return false;
      }
    }
  for (const Partition& s : image)
    for (const Partition& t : image) {
      if (!image.count(inf_meet({s}, {t}).tail) || !image.count(inf_join({s}, {t}).tail)) {
        detail = "meet/join closure at " + to_text(InfPartition{s}) + ", " +
                 to_text(InfPartition{t});
        return false;
      }
    }
  return true;
}

bool suite_tree_levels(int n, std::string& detail) {
  for (int m = 0; m <= n; ++m) {
    if (level(m) != sorted_partitions(m)) {
      detail = "level " + std::to_string(m);
      return false;
    }
    if (m == 0) continue;
    for (const Partition& s : oracle::enumerate_partitions(m)) {
      auto [label, up] = parent(s);
      bool found = false;
      for (const auto& [l, child] : children(up)) found |= (l == label && child == s);
      if (!found) {
        detail = "parent round-trip at " + to_text(s);
        return false;
      }
    }
  }
  // Right-son spine: all-ones partitions, entered by the edge labeled m.
  Partition cur;
  for (int m = 1; m <= n; ++m) {
    auto kids = children(cur);
    auto [label, next] = kids.back();
    if (label != m || next != Partition(m, 1)) {
      detail = "spine at depth " + std::to_string(m);
      return false;
    }
    cur = next;
  }
  return true;
}

bool suite_counting(int n, std::string& detail) {
  for (int m = 0; m <= n; ++m) {
    if (partition_count(m) != oracle::partition_count_dp(m)) {
      detail = "weight " + std::to_string(m);
      return false;
    }
    std::map<int, long long> by_length;
    for (const Partition& s : oracle::enumerate_partitions(m))
      ++by_length[static_cast<int>(s.size())];
    for (int k = 1; k <= m; ++k)
      if (count_length_exact(m, k) != BigInt(by_length[k])) {
        detail = "weight " + std::to_string(m) + ", length " + std::to_string(k);
        return false;
      }
  }
  return count_length_exact(0, 0) == 1;
}

bool suite_subtrees(int n, std::string& detail) {
  int weight_cap = std::min(n, 20);
  for (int k = 1; k <= std::min(n, 6); ++k) {
    std::set<Partition> expected;
    for (int m = k; m <= weight_cap; ++m)
      for (const Partition& s : oracle::enumerate_partitions(m))
        if (static_cast<int>(s.size()) == k) expected.insert(s);
    std::vector<Partition> got = xk_members(Partition(k, 1), k, weight_cap);
    if (std::set<Partition>(got.begin(), got.end()) != expected) {
      detail = "members under the " + std::to_string(k) + "-column root";
      return false;
    }
  }
  // Chain structure at every possible root of small weight.
  for (int m = 1; m <= std::min(n, 8); ++m)
    for (const Partition& s : oracle::enumerate_partitions(m)) {
      int k = domlat::detail::run_length_at(s, 1);
      if (k > 6) continue;
      ChainReport report = xk_chain_decomposition(s, k, m + 6);
      if (!report.pass()) {
        detail = "chain at " + to_text(s) + ": " + report.counterexample;
        return false;
      }
    }
  // Tree-connectedness of the stacked diagram's preimage.
  int cap = std::min(n, 10);
  auto inside = [&](const Partition& s) {
    return weight(s) + (s.empty() ? 0 : s[0]) <= cap;
  };
  for (int m = 1; m <= cap; ++m)
    for (const Partition& s : oracle::enumerate_partitions(m))
      if (inside(s) && !inside(parent(s).second)) {
        detail = "preimage not parent-closed at " + to_text(s);
        return false;
      }
  return true;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.n > 15 && !cfg.force) {
    std::cerr << "verify at weight " << cfg.n
              << " runs cubic brute-force checks; pass --force to do it anyway\n";
    return kExitUsage;
  }
  std::cout << "length convention: a plateau/step length counts the equal-height"
               " columns of its run; a slip from column i lands on column i+length\n";
  int n = cfg.n;
  bool all_ok = true;
  auto run = [&](const std::string& name, const Suite& fn) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::cout << (ok ? "ok" : "FAIL") << " - " << name;
    if (!ok && !detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    all_ok = all_ok && ok;
  };
  run("diagram structure, covers, meet/join vs brute force (weights <= " +
          std::to_string(n) + ")",
      [&](std::string& d) { return suite_diagram_invariants(n, d); });
  run("incremental construction byte-identical to breadth-first",
      [&](std::string& d) { return suite_incremental_matches_naive(n, d); });
  run("frontier families: seeded walk, full scan, and next-weight tiling",
      [&](std::string& d) { return suite_frontier_families(n, d); });
  run("one-grain lift preserves meet and join",
      [&](std::string& d) { return suite_lift_preserves_meet_join(n, d); });
  run("lattice laws (idempotent, commutative, absorptive, associative)",
      [&](std::string& d) { return suite_lattice_laws(n, d); });
  run("stacked diagram: levels, grain edges, 0-links",
      [&](std::string& d) { return suite_stacked_diagram(n, d); });
  run("column-forgetting and column-shift maps preserve structure",
      [&](std::string& d) { return suite_embeddings(n, d); });
  run("infinite order: exhaustive infima, representatives, filter closure",
      [&](std::string& d) { return suite_infinite_order(n, d); });
  run("tree levels, unique parents, all-ones spine",
      [&](std::string& d) { return suite_tree_levels(n, d); });
  run("counting recurrence vs independent count and length filter",
      [&](std::string& d) { return suite_counting(n, d); });
  run("self-similar subtrees: membership, chains, parent-closed preimage",
      [&](std::string& d) { return suite_subtrees(n, d); });
  return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"dominance-order partition lattices: build, count, verify, bench"};
  app.require_subcommand(1);

  CLI::App* build = app.add_subcommand("build", "build the diagram of one weight and export it");
  build->add_option("n", cfg.n, "weight to build")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--method", cfg.method, "construction strategy")
      ->check(CLI::IsMember({"naive", "incremental"}))
      ->capture_default_str();
  build->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"edges", "dot", "json"}))
      ->capture_default_str();
  build->add_option("-o,--output", cfg.output_path, "output file (default: stdout)");

  CLI::App* count = app.add_subcommand("count", "evaluate the partition-counting recurrence");
  count->add_option("n", cfg.n, "weight to count")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--length", cfg.length, "count only partitions with exactly k parts");
  count->add_flag("--check", cfg.check, "also print the independent reference value");
  count->add_option("--table", cfg.table_path, "dump the memo table as CSV to this file");

  CLI::App* meet_cmd = app.add_subcommand("meet", "greatest lower bound of two partitions");
  meet_cmd->add_option("partitions", cfg.operands, "two partitions (comma form, or inf:tail)")
      ->required()
      ->expected(2);
  CLI::App* join_cmd = app.add_subcommand("join", "least upper bound of two partitions");
  join_cmd->add_option("partitions", cfg.operands, "two partitions (comma form, or inf:tail)")
      ->required()
      ->expected(2);

  CLI::App* tree_cmd = app.add_subcommand("tree", "export the partition tree");
  tree_cmd->add_option("--depth", cfg.depth, "truncation depth")
      ->required()
      ->check(CLI::NonNegativeNumber);
  tree_cmd->add_option("--format", cfg.format, "output format (dot only)")
      ->check(CLI::IsMember({"dot"}));
  tree_cmd->add_option("-o,--output", cfg.output_path, "output file (default: stdout)");

  CLI::App* linf = app.add_subcommand("linf", "build the stacked diagram of all weights up to a bound");
  linf->add_option("--bound", cfg.bound, "largest weight included")
      ->required()
      ->check(CLI::NonNegativeNumber);
  linf->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"edges", "dot", "json"}))
      ->capture_default_str();
  linf->add_option("-o,--output", cfg.output_path, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite up to a weight");
  verify->add_option("n", cfg.n, "largest weight checked")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--force", cfg.force, "allow weights above the cubic-cost guard of 15");

  CLI::App* bench = app.add_subcommand("bench", "time the incremental growth step per weight");
  bench->add_option("from", cfg.from, "first timed step")->required()->check(CLI::NonNegativeNumber);
  bench->add_option("to", cfg.to, "one past the last timed step")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* render = app.add_subcommand("render", "draw a partition as a grain diagram");
  render->add_option("partition", cfg.operands, "partition in comma form")
      ->required()
      ->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*count) return cmd_count(cfg);
    if (*meet_cmd) return cmd_meet_join(cfg, false);
    if (*join_cmd) return cmd_meet_join(cfg, true);
    if (*tree_cmd) return cmd_tree(cfg);
    if (*linf) return cmd_linf(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*bench) return cmd_bench(cfg);
    if (*render) return cmd_render(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
