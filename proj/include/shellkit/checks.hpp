#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shellkit/labeling.hpp"

namespace shellkit {

struct Witness {
  std::string reason;  // stable tag, e.g. NoAscendingChain
  std::string detail;  // human-readable context naming the interval/chains
};

/// Result of a checker run. `total_failures` counts every violation found;
/// `witnesses` retains at most the cap passed to the checker.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::size_t total_failures = 0;

  void add(std::size_t cap, std::string reason, std::string detail) {
    pass = false;
    ++total_failures;
    if (witnesses.size() < cap) witnesses.push_back({std::move(reason), std::move(detail)});
  }
};

inline constexpr std::size_t kDefaultWitnessCap = 10;

/// Topological ascent: the pair of labels on end(root) lessdot v lessdot w is
/// lex-strictly smaller than the label sequence of every other saturated
/// chain of [end(root), w] under the root.
bool is_topological_ascent(const ChainEdgeLabeling& L, int root, int v, int w);

enum class ChainClass { Ascending, Descending, Mixed };
/// Classifies the label sequence of `chain` (from end(root)) by plain label
/// comparisons; with `topological` the per-step test is
/// is_topological_ascent. Chains with at most one edge are Ascending and
/// Descending at once and report Ascending.
ChainClass classify_chain(const ChainEdgeLabeling& L, int root, const std::vector<int>& chain,
                          bool topological);
bool is_ascending(const ChainEdgeLabeling& L, int root, const std::vector<int>& chain);
bool is_descending(const ChainEdgeLabeling& L, int root, const std::vector<int>& chain,
                   bool topological);

/// EL condition on every interval of the poset (requires an edge labeling):
/// unique ascending maximal chain, which is lex-strictly first.
CheckReport check_EL(const ChainEdgeLabeling& L, std::size_t witness_cap = kDefaultWitnessCap);

/// CL condition on every rooted interval.
CheckReport check_CL(const ChainEdgeLabeling& L, std::size_t witness_cap = kDefaultWitnessCap);

/// EC condition on every interval (edge labeling): unique topologically
/// ascending chain, and distinct, mutually non-prefixing label sequences.
CheckReport check_EC(const ChainEdgeLabeling& L, std::size_t witness_cap = kDefaultWitnessCap);

/// CC condition on every rooted interval.
CheckReport check_CC(const ChainEdgeLabeling& L, std::size_t witness_cap = kDefaultWitnessCap);

/// Topological CL: lex-first chain unique, all others have a topological
/// descent, on every rooted interval.
CheckReport check_topological_CL(const ChainEdgeLabeling& L,
                                 std::size_t witness_cap = kDefaultWitnessCap);

/// UE condition: in every rooted interval the minimal label on the bottom
/// covers is attained exactly once.
CheckReport check_UE(const ChainEdgeLabeling& L, std::size_t witness_cap = kDefaultWitnessCap);

/// Self-consistency: every rooted interval has a unique lex-first chain, and
/// whenever a is the lex-first atom of [u,v]_r and b another atom of it, then
/// in every [u,v']_r containing both, the lex-earliest chain through b comes
/// strictly later than the lex-earliest chain through a.
CheckReport check_self_consistency(const ChainEdgeLabeling& L,
                                   std::size_t witness_cap = kDefaultWitnessCap);

}  // namespace shellkit
