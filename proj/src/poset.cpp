#include "shellkit/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace shellkit {

std::size_t default_budget() {
  if (const char* s = std::getenv("SHELLKIT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

Poset Poset::from_covers(const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  auto intern = [&p](const std::string& s) {
    auto it = p.index_.find(s);
    if (it != p.index_.end()) return it->second;
    int id = static_cast<int>(p.names_.size());
    p.names_.push_back(s);
    p.index_[s] = id;
    return id;
  };
  std::set<std::pair<int, int>> seen;
  for (const auto& [lo, hi] : covers) {
    int u = intern(lo), v = intern(hi);
    if (u == v) throw PosetError("Cycle", "cover " + lo + " < " + hi + " is reflexive");
    if (!seen.insert({u, v}).second) continue;
  }
  int n = p.size();
  if (n == 0) throw PosetError("NotBounded", "empty cover list");
  p.up_.resize(n);
  p.down_.resize(n);
  for (auto [u, v] : seen) {
    p.up_[u].push_back(v);
    p.down_[v].push_back(u);
  }
  for (int e = 0; e < n; ++e) {
    std::sort(p.up_[e].begin(), p.up_[e].end());
    std::sort(p.down_[e].begin(), p.down_[e].end());
  }
  p.finish();
  return p;
}

void Poset::finish() {
  int n = size();
  // Topological order; detects cycles.
  std::vector<int> indeg(n, 0), order;
  for (int e = 0; e < n; ++e)
    for (int v : up_[e]) (void)v, ++indeg[v];
  for (int e = 0; e < n; ++e)
    if (indeg[e] == 0) order.push_back(e);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int v : up_[order[i]])
      if (--indeg[v] == 0) order.push_back(v);
  if (static_cast<int>(order.size()) != n)
    throw PosetError("Cycle", "cover relation contains a directed cycle");

  leq_.assign(n, std::vector<unsigned char>(n, 0));
  height_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int e = *it;
    leq_[e][e] = 1;
    for (int v : up_[e])
      for (int w = 0; w < n; ++w)
        if (leq_[v][w]) leq_[e][w] = 1;
  }
  for (int e : order) {
    for (int v : up_[e]) height_[v] = std::max(height_[v], height_[e] + 1);
  }

  std::vector<int> minimal, maximal;
  for (int e = 0; e < n; ++e) {
    if (down_[e].empty()) minimal.push_back(e);
    if (up_[e].empty()) maximal.push_back(e);
  }
  if (minimal.size() != 1 || maximal.size() != 1) {
    std::string msg = "minimal elements:";
    for (int e : minimal) msg += " " + names_[e];
    msg += "; maximal elements:";
    for (int e : maximal) msg += " " + names_[e];
    throw PosetError("NotBounded", msg);
  }
  bottom_ = minimal[0];
  top_ = maximal[0];

  // Covers must form the transitive reduction.
  for (int u = 0; u < n; ++u)
    for (int v : up_[u])
      for (int z = 0; z < n; ++z)
        if (z != u && z != v && leq_[u][z] && leq_[z][v])
          throw PosetError("NotReduced", "pair (" + names_[u] + ", " + names_[v] +
                                             ") is implied via " + names_[z]);
}

int Poset::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw PosetError("UnknownElement", name);
  return it->second;
}

std::optional<int> Poset::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::covers(int u, int v) const {
  return std::binary_search(up_[u].begin(), up_[u].end(), v);
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : up_[u]) out.emplace_back(u, v);
  return out;
}

Poset Poset::interval(int u, int v) const {
  if (!leq(u, v)) throw PosetError("NotComparable", names_[u] + " is not below " + names_[v]);
  std::vector<std::pair<std::string, std::string>> cov;
  std::vector<int> members;
  for (int z = 0; z < size(); ++z)
    if (leq(u, z) && leq(z, v)) members.push_back(z);
  for (int z : members)
    for (int w : up_[z])
      if (leq(w, v)) cov.emplace_back(names_[z], names_[w]);
  if (cov.empty()) {
    // one-element interval [u,u]
    Poset p;
    p.names_ = {names_[u]};
    p.index_[names_[u]] = 0;
    p.up_.resize(1);
    p.down_.resize(1);
    p.leq_.assign(1, {1});
    p.height_.assign(1, 0);
    p.bottom_ = p.top_ = 0;
    return p;
  }
  // Keep ambient element order: list elements before covers force an order.
  Poset p;
  for (int z : members) {
    p.index_[names_[z]] = static_cast<int>(p.names_.size());
    p.names_.push_back(names_[z]);
  }
  int n = p.size();
  p.up_.resize(n);
  p.down_.resize(n);
  for (const auto& [lo, hi] : cov) {
    int a = p.index_[lo], b = p.index_[hi];
    p.up_[a].push_back(b);
    p.down_[b].push_back(a);
  }
  for (int e = 0; e < n; ++e) {
    std::sort(p.up_[e].begin(), p.up_[e].end());
    p.up_[e].erase(std::unique(p.up_[e].begin(), p.up_[e].end()), p.up_[e].end());
    std::sort(p.down_[e].begin(), p.down_[e].end());
    p.down_[e].erase(std::unique(p.down_[e].begin(), p.down_[e].end()), p.down_[e].end());
  }
  p.finish();
  return p;
}

Poset Poset::dual() const {
  Poset p;
  p.names_ = names_;
  p.index_ = index_;
  int n = size();
  p.up_ = down_;
  p.down_ = up_;
  p.leq_.assign(n, std::vector<unsigned char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.leq_[a][b] = leq_[b][a];
  p.bottom_ = top_;
  p.top_ = bottom_;
  p.height_.assign(n, 0);
  std::vector<int> lin;  // recompute heights downward
  for (int e = 0; e < n; ++e) lin.push_back(e);
  std::sort(lin.begin(), lin.end(), [this](int a, int b) { return height_[a] > height_[b]; });
  for (int e : lin)
    for (int v : p.up_[e]) p.height_[v] = std::max(p.height_[v], p.height_[e] + 1);
  return p;
}

const std::vector<std::vector<int>>& Poset::saturated_chains(int u, int v) const {
  auto key = std::make_pair(u, v);
  auto it = chain_memo_.find(key);
  if (it != chain_memo_.end()) return it->second;
  if (!leq(u, v)) throw PosetError("NotComparable", names_[u] + " is not below " + names_[v]);
  std::vector<std::vector<int>> out;
  std::vector<int> cur{u};
  // iterative DFS would do; recursion depth is bounded by poset length
  struct Rec {
    const Poset& p;
    int v;
    std::vector<std::vector<int>>& out;
    std::vector<int>& cur;
    void go(int e) {
      if (e == v) {
        out.push_back(cur);
        return;
      }
      for (int w : p.up_[e]) {
        if (!p.leq(w, v)) continue;
        cur.push_back(w);
        go(w);
        cur.pop_back();
      }
    }
  } rec{*this, v, out, cur};
  rec.go(u);
  return chain_memo_.emplace(key, std::move(out)).first->second;
}

std::vector<std::vector<int>> Poset::maximal_chains() const {
  return saturated_chains(bottom_, top_);
}

int Poset::mobius(int u, int v) const {
  if (!leq(u, v)) throw PosetError("NotComparable", names_[u] + " is not below " + names_[v]);
  if (u == v) return 1;
  auto key = std::make_pair(u, v);
  auto it = mobius_memo_.find(key);
  if (it != mobius_memo_.end()) return it->second;
  int acc = 0;
  for (int z = 0; z < size(); ++z)
    if (leq(u, z) && leq(z, v) && z != v) acc += mobius(u, z);
  return mobius_memo_[key] = -acc;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> lin;
  for (int e = 0; e < size(); ++e) lin.push_back(e);
  std::sort(lin.begin(), lin.end(), [this](int a, int b) {
    if (height_[a] != height_[b]) return height_[a] < height_[b];
    return a < b;
  });
  return lin;
}

std::shared_ptr<const RootTree> RootTree::build(PosetPtr p, std::size_t budget) {
  if (budget == 0) budget = default_budget();
  auto rt = std::make_shared<RootTree>();
  rt->p_ = p;
  rt->roots_of_.resize(p->size());
  rt->nodes_.push_back(Node{p->bottom(), -1, 0, {}});
  rt->roots_of_[p->bottom()].push_back(0);
  for (std::size_t i = 0; i < rt->nodes_.size(); ++i) {
    int e = rt->nodes_[i].elem;
    for (int v : p->up(e)) {
      if (rt->nodes_.size() >= budget)
        throw PosetError("BudgetExceeded",
                         "root enumeration exceeds budget of " + std::to_string(budget));
      int id = static_cast<int>(rt->nodes_.size());
      rt->nodes_.push_back(Node{v, static_cast<int>(i), rt->nodes_[i].depth + 1, {}});
      rt->nodes_[i].child[v] = id;
      rt->roots_of_[v].push_back(id);
    }
  }
  return rt;
}

int RootTree::extend(int id, int v) const {
  auto it = nodes_[id].child.find(v);
  if (it == nodes_[id].child.end())
    throw PosetError("NotComparable",
                     p_->name(v) + " does not cover " + p_->name(nodes_[id].elem));
  return it->second;
}

RootPath RootTree::path(int id) const {
  RootPath rev;
  for (int cur = id; cur != -1; cur = nodes_[cur].parent) rev.push_back(nodes_[cur].elem);
  return RootPath(rev.rbegin(), rev.rend());
}

int RootTree::locate(const RootPath& path) const {
  if (path.empty() || path.front() != p_->bottom())
    throw PosetError("BadRoot", "root path must start at the bottom element");
  int cur = 0;
  for (std::size_t i = 1; i < path.size(); ++i) cur = extend(cur, path[i]);
  return cur;
}

}  // namespace shellkit
