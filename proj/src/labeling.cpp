#include "shellkit/labeling.hpp"

#include <algorithm>
#include <charconv>

namespace shellkit {

LabelAlphabet LabelAlphabet::numeric() { return LabelAlphabet{}; }

LabelAlphabet LabelAlphabet::explicit_order(std::vector<std::string> tokens) {
  LabelAlphabet a;
  a.numeric_ = false;
  a.tokens_ = std::move(tokens);
  for (int i = 0; i < static_cast<int>(a.tokens_.size()); ++i) {
    if (!a.rank_.emplace(a.tokens_[i], i).second)
      throw PosetError("DuplicateLabel", "alphabet repeats token " + a.tokens_[i]);
  }
  return a;
}

int LabelAlphabet::rank(const std::string& token) const {
  if (numeric_) {
    int v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || p != token.data() + token.size())
      throw PosetError("UnknownLabel", "token " + token + " is not an integer");
    return v;
  }
  auto it = rank_.find(token);
  if (it == rank_.end()) throw PosetError("UnknownLabel", "token " + token + " not in alphabet");
  return it->second;
}

std::string LabelAlphabet::token(int rank) const {
  if (numeric_) return std::to_string(rank);
  if (rank < 0 || rank >= static_cast<int>(tokens_.size()))
    throw PosetError("UnknownLabel", "rank " + std::to_string(rank) + " out of range");
  return tokens_[rank];
}

ChainEdgeLabeling ChainEdgeLabeling::from_edges(RootTreePtr rt,
                                               std::map<std::pair<int, int>, int> labels,
                                               LabelAlphabet alpha) {
  const Poset& p = rt->poset();
  for (auto [u, v] : p.cover_pairs())
    if (!labels.count({u, v}))
      throw PosetError("MissingLabel", "cover " + p.name(u) + " < " + p.name(v) + " unlabeled");
  ChainEdgeLabeling L;
  L.rt_ = std::move(rt);
  L.alpha_ = std::move(alpha);
  L.edge_ = true;
  L.labels_ = std::move(labels);
  return L;
}

ChainEdgeLabeling ChainEdgeLabeling::from_roots(RootTreePtr rt,
                                               std::map<std::pair<int, int>, int> labels,
                                               LabelAlphabet alpha) {
  const Poset& p = rt->poset();
  for (int r = 0; r < rt->count(); ++r)
    for (int v : p.up(rt->elem(r)))
      if (!labels.count({r, v}))
        throw PosetError("MissingLabel", "cover " + p.name(rt->elem(r)) + " < " + p.name(v) +
                                             " unlabeled under a root");
  ChainEdgeLabeling L;
  L.rt_ = std::move(rt);
  L.alpha_ = std::move(alpha);
  L.edge_ = false;
  L.labels_ = std::move(labels);
  return L;
}

int ChainEdgeLabeling::label(int root, int v) const {
  int u = rt_->elem(root);
  if (!poset().covers(u, v))
    throw PosetError("NotComparable", poset().name(v) + " does not cover " + poset().name(u));
  auto key = edge_ ? std::make_pair(u, v) : std::make_pair(root, v);
  return labels_.at(key);
}

std::vector<int> ChainEdgeLabeling::label_sequence(int root, const std::vector<int>& chain) const {
  std::vector<int> out;
  int cur = root;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    out.push_back(label(cur, chain[i + 1]));
    cur = rt_->extend(cur, chain[i + 1]);
  }
  return out;
}

const std::map<std::pair<int, int>, int>& ChainEdgeLabeling::edge_labels() const {
  if (!edge_) throw PosetError("NotEdgeLabeling", "labeling is root-dependent");
  return labels_;
}

std::strong_ordering lex_compare(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::vector<int>> lex_chain_order(const ChainEdgeLabeling& L) {
  const Poset& p = L.poset();
  auto chains = p.maximal_chains();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;
  keyed.reserve(chains.size());
  for (auto& c : chains) keyed.emplace_back(L.label_sequence(0, c), std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    auto cmp = lex_compare(x.first, y.first);
    if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    return x.second < y.second;
  });
  std::vector<std::vector<int>> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

ChainEdgeLabeling validate_CE(RootTreePtr rt,
                              const std::map<std::vector<int>, std::vector<int>>& per_chain,
                              LabelAlphabet alpha) {
  const Poset& p = rt->poset();
  auto name_chain = [&p](const std::vector<int>& c) {
    std::string s;
    for (int e : c) s += (s.empty() ? "" : " ") + p.name(e);
    return s;
  };
  const auto& maximal = p.maximal_chains();
  for (const auto& c : maximal)
    if (!per_chain.count(c)) throw PosetError("MissingChain", name_chain(c));
  std::map<std::pair<int, int>, int> labels;
  for (const auto& [chain, seq] : per_chain) {
    if (std::find(maximal.begin(), maximal.end(), chain) == maximal.end())
      throw PosetError("ExtraChain", name_chain(chain));
    if (seq.size() + 1 != chain.size())
      throw PosetError("NotChainEdge", "label count mismatch on chain " + name_chain(chain));
    int root = 0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto key = std::make_pair(root, chain[i + 1]);
      auto [it, fresh] = labels.emplace(key, seq[i]);
      if (!fresh && it->second != seq[i])
        throw PosetError("NotChainEdge",
                         "chains sharing the prefix through " + p.name(chain[i]) + " < " +
                             p.name(chain[i + 1]) + " disagree on its label");
      root = rt->extend(root, chain[i + 1]);
    }
  }
  return ChainEdgeLabeling::from_roots(std::move(rt), std::move(labels), std::move(alpha));
}

}  // namespace shellkit
