#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shellkit {

/// Raised by constructors and operations on invalid input.
/// `code` is a stable machine-readable tag (NotBounded, NotReduced, Cycle,
/// NotComparable, ...); `what()` carries the human-readable detail.
class PosetError : public std::runtime_error {
 public:
  PosetError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// A saturated chain from the bottom element to some element, stored as the
/// element-index sequence (first entry is always the bottom).
using RootPath = std::vector<int>;

/// Finite bounded poset. Cover relations are the source of truth; the order
/// relation is the cached reflexive-transitive closure. Elements are opaque
/// string ids; the canonical ElementOrder is first-appearance order of the
/// input, and every deterministic tie-break in the library resolves through
/// element indices.
///
/// Immutable after construction apart from internal memo tables; all methods
/// are logically const.
class Poset {
 public:
  /// Builds and validates a poset from a cover list. Throws PosetError with
  /// code Cycle, NotBounded or NotReduced.
  static Poset from_covers(const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a named element, or throws PosetError(UnknownElement).
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int u, int v) const { return leq_[u][v] != 0; }
  bool covers(int u, int v) const;  // u lessdot v
  const std::vector<int>& up(int e) const { return up_[e]; }
  const std::vector<int>& down(int e) const { return down_[e]; }
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Subposet on {z : u <= z <= v} with induced covers (names preserved).
  Poset interval(int u, int v) const;
  /// Covers reversed, bottom/top swapped, element names and order preserved.
  Poset dual() const;

  /// All maximal chains of [u,v], each from u to v, in lexicographic
  /// ElementOrder. Memoized; do not mutate the result.
  const std::vector<std::vector<int>>& saturated_chains(int u, int v) const;
  std::vector<std::vector<int>> maximal_chains() const;

  /// Moebius function of [u,v] by the defining recursion; memoized.
  int mobius(int u, int v) const;

  /// Deterministic linear extension: sorted by (longest chain from bottom,
  /// ElementOrder).
  std::vector<int> linear_extension() const;

  /// Length of the longest chain from bottom to e.
  int height(int e) const { return height_[e]; }
  /// Length of the longest chain of the whole poset.
  int length() const { return height_[top_]; }

 private:
  Poset() = default;
  void finish();  // computes closure, bounds, heights; validates

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<unsigned char>> leq_;
  std::vector<int> height_;
  int bottom_ = -1, top_ = -1;

  mutable std::map<std::pair<int, int>, std::vector<std::vector<int>>> chain_memo_;
  mutable std::map<std::pair<int, int>, int> mobius_memo_;
};

using PosetPtr = std::shared_ptr<const Poset>;

/// Enumeration of all saturated chains upward from the bottom ("roots"),
/// organized as a tree: node 0 is the length-0 root at bottom, and each node
/// extends its parent by one cover relation. Rooted-interval data throughout
/// the library is keyed by node ids of this tree.
class RootTree {
 public:
  struct Node {
    int elem;
    int parent;           // -1 for the bottom node
    int depth;            // number of edges in the root path
    std::map<int, int> child;  // element -> node id
  };

  /// Builds the full tree. Throws PosetError(BudgetExceeded) when the node
  /// count would exceed `budget` (0 = use SHELLKIT_BUDGET env or 10^6).
  static std::shared_ptr<const RootTree> build(PosetPtr p, std::size_t budget = 0);

  const Poset& poset() const { return *p_; }
  PosetPtr poset_ptr() const { return p_; }
  int count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[id]; }
  int elem(int id) const { return nodes_[id].elem; }
  /// Node id of root extended by cover (end(root) lessdot v).
  int extend(int id, int v) const;
  /// All root node ids ending at element e.
  const std::vector<int>& roots_of(int e) const { return roots_of_[e]; }
  /// Element sequence of the root path (bottom first).
  RootPath path(int id) const;
  /// Node id for an explicit element path from bottom, or throws.
  int locate(const RootPath& path) const;

 private:
  PosetPtr p_;
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> roots_of_;
};

using RootTreePtr = std::shared_ptr<const RootTree>;

/// Budget used when callers pass 0: SHELLKIT_BUDGET env var or 10^6.
std::size_t default_budget();

}  // namespace shellkit
