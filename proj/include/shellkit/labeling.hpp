#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "shellkit/poset.hpp"

namespace shellkit {

/// Total order on label tokens. Either the implicit numeric order on integer
/// tokens, or an explicit token list (position = rank). Labels are carried as
/// int ranks internally; tokens only matter at the I/O boundary.
class LabelAlphabet {
 public:
  static LabelAlphabet numeric();
  static LabelAlphabet explicit_order(std::vector<std::string> tokens);

  bool is_numeric() const { return numeric_; }
  /// Rank of a token; throws PosetError(UnknownLabel) for tokens outside an
  /// explicit alphabet or non-integer tokens under the numeric alphabet.
  int rank(const std::string& token) const;
  std::string token(int rank) const;
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  bool numeric_ = true;
  std::vector<std::string> tokens_;
  std::map<std::string, int> rank_;
};

/// Chain-edge labeling: a label for each cover u lessdot v relative to each
/// root of u. Storage is keyed by RootTree node, which makes the CE condition
/// (label depends only on the root, not on any continuation above v) hold
/// structurally. Edge labelings are the special case where the label ignores
/// the root; `is_edge_labeling()` reports how the object was built.
class ChainEdgeLabeling {
 public:
  /// Root-ignoring (edge) labeling from a cover->rank map.
  static ChainEdgeLabeling from_edges(RootTreePtr rt,
                                      std::map<std::pair<int, int>, int> labels,
                                      LabelAlphabet alpha);
  /// General labeling from a (root node, upper element)->rank map. Every
  /// cover reachable in the root tree must be labeled.
  static ChainEdgeLabeling from_roots(RootTreePtr rt,
                                      std::map<std::pair<int, int>, int> labels,
                                      LabelAlphabet alpha);

  const Poset& poset() const { return rt_->poset(); }
  PosetPtr poset_ptr() const { return rt_->poset_ptr(); }
  const RootTree& roots() const { return *rt_; }
  RootTreePtr roots_ptr() const { return rt_; }
  const LabelAlphabet& alphabet() const { return alpha_; }
  bool is_edge_labeling() const { return edge_; }

  /// Label rank of cover end(root) lessdot v under the given root node.
  int label(int root, int v) const;

  /// Label sequence along a saturated chain starting at end(root).
  std::vector<int> label_sequence(int root, const std::vector<int>& chain) const;

  /// Cover->rank map; only valid for edge labelings.
  const std::map<std::pair<int, int>, int>& edge_labels() const;

 private:
  RootTreePtr rt_;
  LabelAlphabet alpha_;
  bool edge_ = false;
  std::map<std::pair<int, int>, int> labels_;  // (cover pair) or (root,elem)
};

/// Lexicographic comparison of label-rank sequences; a proper prefix is
/// strictly smaller than its extensions.
std::strong_ordering lex_compare(const std::vector<int>& a, const std::vector<int>& b);

/// Maximal chains of the whole poset sorted by label sequence (ties broken by
/// the element sequences in ElementOrder).
std::vector<std::vector<int>> lex_chain_order(const ChainEdgeLabeling& L);

/// Builds a chain-edge labeling from per-maximal-chain label sequences and
/// checks the CE condition: chains sharing the prefix bottom..u..v must agree
/// on the label of u lessdot v. Input keys are full maximal chains. Throws
/// PosetError(MissingChain / ExtraChain / NotChainEdge).
ChainEdgeLabeling validate_CE(RootTreePtr rt,
                              const std::map<std::vector<int>, std::vector<int>>& per_chain,
                              LabelAlphabet alpha);

}  // namespace shellkit
