#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace domlat {

/// A partition in canonical form: nonincreasing positive parts and nothing
/// else stored. The empty vector is the unique partition of 0. Columns are
/// numbered from 1 (the tallest first) and reads past the last column give 0,
/// so every column index is meaningful.
using Partition = std::vector<int>;

/// Number of grains in the whole partition (the partitioned integer).
inline int weight(const Partition& s) {
  return std::accumulate(s.begin(), s.end(), 0);
}

/// Height of column i (1-based); 0 beyond the last column.
inline int part_at(const Partition& s, int i) {
  return (i >= 1 && i <= static_cast<int>(s.size())) ? s[i - 1] : 0;
}

/// Builds a canonical partition from raw column heights. Trailing zeros are
/// stripped. Negative entries or any increase anywhere in the sequence are
/// rejected, so interior zeros followed by positive heights never pass.
inline Partition make_partition(const std::vector<int>& values) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0)
      throw std::invalid_argument("partition parts must be nonnegative");
    if (j + 1 < values.size() && values[j] < values[j + 1])
      throw std::invalid_argument("not nonincreasing");
  }
  Partition s(values);
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

/// Height difference d_i = s_i - s_{i+1}. Total over all i >= 1.
inline int height_diff(const Partition& s, int i) {
  if (i < 1) throw std::invalid_argument("column index must be >= 1");
  return part_at(s, i) - part_at(s, i + 1);
}

/// What the silhouette looks like locally at a column.
///
/// A run is a maximal block of equal-height columns. A plateau at i is the
/// run starting at i when column i is level with its right neighbour (or a
/// single trailing column of height 1); it is slippery when the run ends
/// with a drop of exactly one. A step at i means removing one grain from
/// column i exposes a plateau there: slippery or not according to how that
/// exposed run terminates. A cliff is a drop of two or more.
enum class ShapeKind {
  None,
  Cliff,
  SlipperyPlateau,
  NonSlipperyPlateau,
  SlipperyStep,
  NonSlipperyStep,
};

struct ColumnShape {
  ShapeKind kind = ShapeKind::None;
  /// Number of equal-height columns in the run, for plateau/step kinds.
  /// The run is allowed to start and end at the same column (length 1).
  int run_length = 0;

  friend bool operator==(const ColumnShape&, const ColumnShape&) = default;
};

namespace detail {

/// Length of the maximal equal-height run starting at column i.
inline int run_length_at(const Partition& s, int i) {
  int m = 1;
  while (part_at(s, i + m) == part_at(s, i)) ++m;
  return m;
}

}  // namespace detail

/// Classifies the run at the first column. Used by the tree of partitions:
/// the run length decides where a second son may hang. Empty partition has
/// no columns, hence kind None.
inline ColumnShape leading_plateau(const Partition& s) {
  if (s.empty()) return {};
  int m = detail::run_length_at(s, 1);
  int drop = s[0] - part_at(s, m + 1);
  return {drop == 1 ? ShapeKind::SlipperyPlateau : ShapeKind::NonSlipperyPlateau, m};
}

/// Classifies column i of s. Exactly one kind applies per column:
///   - drop of 2+            -> Cliff
///   - drop of 1, height 2+  -> a step: one grain off column i leaves a run
///                              of equal columns there; slippery iff that
///                              run ends with a unit drop
///   - drop of 1, height 1   -> the last column; a one-column slippery
///                              plateau sitting on the floor
///   - drop of 0             -> inside a run: plateau, slippery iff the run
///                              ends with a unit drop
inline ColumnShape classify_at(const Partition& s, int i) {
  if (i < 1 || i > static_cast<int>(s.size()))
    throw std::out_of_range("column index out of range");
  int d = height_diff(s, i);
  if (d >= 2) return {ShapeKind::Cliff, 0};
  if (d == 1) {
    if (s[i - 1] == 1) return {ShapeKind::SlipperyPlateau, 1};
    // One grain off column i drops it level with column i+1; measure the
    // run that appears and how it terminates.
    int m = 1 + detail::run_length_at(s, i + 1);
    int drop = (s[i - 1] - 1) - part_at(s, i + m);
    return {drop == 1 ? ShapeKind::SlipperyStep : ShapeKind::NonSlipperyStep, m};
  }
  int m = detail::run_length_at(s, i);
  int drop = s[i - 1] - part_at(s, i + m);
  return {drop == 1 ? ShapeKind::SlipperyPlateau : ShapeKind::NonSlipperyPlateau, m};
}

/// One grain moved out of column `label` of `source`, producing `target` of
/// the same weight, strictly lower in dominance order.
struct Transition {
  Partition source;
  int label = 0;
  Partition target;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend bool operator<(const Transition& a, const Transition& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.label != b.label) return a.label < b.label;
    return a.target < b.target;
  }
};

namespace detail {

/// Moves one grain from column `from` to column `to`, canonicalizing the
/// result. Callers arrange moves that land on valid partitions; this is
/// re-checked so a rule bug cannot corrupt downstream structures silently.
inline Partition move_grain(const Partition& s, int from, int to) {
  Partition t = s;
  if (to > static_cast<int>(t.size())) t.resize(to, 0);
  t[from - 1] -= 1;
  t[to - 1] += 1;
  while (!t.empty() && t.back() == 0) t.pop_back();
  for (std::size_t j = 0; j + 1 < t.size(); ++j)
    if (t[j] < t[j + 1]) throw std::logic_error("grain move produced a non-partition");
  if (!t.empty() && t.back() < 0) throw std::logic_error("grain move produced a non-partition");
  return t;
}

}  // namespace detail

/// Every configuration directly reachable from s by the two grain rules:
///   fall: at a cliff, one grain drops from column i onto column i+1;
///   slip: at a slippery step of run length m (m >= 2), one grain slides
///         from column i to column i+m, the far end of the exposed run.
/// A slippery step of run length 1 would coincide with a fall at a width-2
/// cliff, so steps of length 1 never arise and the two rules stay disjoint.
/// Results are canonical; labels are the source columns, one move per column
/// at most, so the set needs no deduplication.
inline std::vector<Transition> transitions(const Partition& s) {
  std::vector<Transition> out;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    ColumnShape shape = classify_at(s, i);
    if (shape.kind == ShapeKind::Cliff)
      out.push_back({s, i, detail::move_grain(s, i, i + 1)});
    else if (shape.kind == ShapeKind::SlipperyStep)
      out.push_back({s, i, detail::move_grain(s, i, i + shape.run_length)});
  }
  return out;
}

/// Every configuration that reaches s by one grain rule (the in-neighbours
/// of s wherever transitions() supplies the out-neighbours). Inverting the
/// rules needs no search:
///   inverse fall: the grain on column i+1 came from column i; the source
///     p + e_i - e_(i+1) is valid exactly when lifting column i still fits
///     under its left neighbour and lowering column i+1 still clears i+2.
///     The raised height difference is then at least 2, so the source always
///     has a genuine cliff at column i.
///   inverse slip: a slip lands one grain exactly one level below a run it
///     slid across, so the landing configuration shows columns a..b all
///     equal with both borders strict -- a maximal run. Length b-a+1 >= 3 is
///     required so that the source p + e_a - e_b keeps a run of at least one
///     column between its step and its unit drop.
inline std::vector<Partition> inbound_sources(const Partition& s) {
  std::vector<Partition> out;
  const int len = static_cast<int>(s.size());
  auto moved = [&](int up, int down) {
    Partition q = s;
    ++q[up - 1];
    --q[down - 1];
    if (q.back() == 0) q.pop_back();
    return q;
  };
  for (int i = 1; i < len; ++i) {
    bool fits_left = i == 1 || part_at(s, i - 1) > part_at(s, i);
    bool clears_right = part_at(s, i + 1) > part_at(s, i + 2);
    if (fits_left && clears_right) out.push_back(moved(i, i + 1));
  }
  for (int a = 1; a <= len;) {
    int run = detail::run_length_at(s, a);
    if (run >= 3) out.push_back(moved(a, a + run - 1));
    a += run;
  }
  return out;
}

/// Raw column heights with one grain added on column i. The result is not
/// necessarily a partition (the new column may poke above its left
/// neighbour); use is_partition to test.
inline std::vector<int> add_grain(const Partition& s, int i) {
  if (i < 1 || i > static_cast<int>(s.size()) + 1)
    throw std::out_of_range("grain column out of range");
  std::vector<int> t = s;
  if (i > static_cast<int>(t.size())) t.push_back(0);
  t[i - 1] += 1;
  return t;
}

/// True iff raw heights form a valid partition (nonincreasing, nonnegative;
/// zeros can then only trail).
inline bool is_partition(const std::vector<int>& raw) {
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] < 0) return false;
    if (j + 1 < raw.size() && raw[j] < raw[j + 1]) return false;
  }
  return true;
}

/// add_grain for the callers that rely on the result being a partition.
inline Partition grow(const Partition& s, int i) {
  std::vector<int> t = add_grain(s, i);
  if (!is_partition(t)) throw std::logic_error("grain added where no column may grow");
  return t;
}

/// Dominance comparison: s <= t iff every prefix sum of s is <= the matching
/// prefix sum of t. Shorter sequences extend with zeros. Only partitions of
/// equal weight are comparable here.
inline bool dominance_leq(const Partition& s, const Partition& t) {
  if (weight(s) != weight(t))
    throw std::invalid_argument("dominance comparison requires equal weights");
  int len = static_cast<int>(std::max(s.size(), t.size()));
  long long ps = 0, pt = 0;
  for (int i = 1; i <= len; ++i) {
    ps += part_at(s, i);
    pt += part_at(t, i);
    if (ps > pt) return false;
  }
  return true;
}

/// ASCII picture: one column of '#' per part, heights left to right, rows
/// printed top-down. Empty partition draws nothing.
inline std::string render_ferrers(const Partition& s) {
  std::string out;
  if (s.empty()) return out;
  for (int level = s[0]; level >= 1; --level) {
    int cols = 0;
    while (cols < static_cast<int>(s.size()) && s[cols] >= level) ++cols;
    out.append(cols, '#');
    out.push_back('\n');
  }
  return out;
}

/// Text form used by the CLI and all file formats: comma-separated parts,
/// "0" for the empty partition.
inline std::string to_text(const Partition& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j) out.push_back(',');
    out += std::to_string(s[j]);
  }
  return out;
}

/// Parses the text form back; validates canonicity.
inline Partition parse_partition(const std::string& text) {
  if (text == "0") return {};
  std::vector<int> vals;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition text: '" + text + "'");
    vals.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return make_partition(vals);
}

}  // namespace domlat
