#include "shellkit/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace shellkit {
namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;
using EdgeTokens = std::vector<std::tuple<std::string, std::string, int>>;

Fixture make_edge_fixture(std::string name, const Covers& covers, const EdgeTokens& labels,
                          std::map<std::string, bool> expected) {
  Fixture f;
  f.name = std::move(name);
  f.poset = std::make_shared<const Poset>(Poset::from_covers(covers));
  f.roots = RootTree::build(f.poset);
  std::map<std::pair<int, int>, int> ranks;
  for (const auto& [lo, hi, tok] : labels) ranks[{f.poset->index(lo), f.poset->index(hi)}] = tok;
  f.labeling = ChainEdgeLabeling::from_edges(f.roots, std::move(ranks), LabelAlphabet::numeric());
  f.expected = std::move(expected);
  return f;
}

// Sets the same order at every root of the given element.
void order_everywhere(Fixture& f, const std::string& elem, const std::vector<std::string>& atoms) {
  int e = f.poset->index(elem);
  std::vector<int> ord;
  for (const auto& a : atoms) ord.push_back(f.poset->index(a));
  for (int r : f.roots->roots_of(e)) f.ordering->set_order(r, ord);
}

const Covers kGraoexCovers = {
    {"0", "p"}, {"0", "q"}, {"0", "a"}, {"0", "s"}, {"p", "w"}, {"p", "x"},
    {"q", "x"}, {"q", "y"}, {"a", "w"}, {"a", "y"}, {"a", "z"}, {"s", "z"},
    {"w", "1"}, {"x", "1"}, {"y", "1"}, {"z", "1"}};

Fixture make_graoex(bool left) {
  EdgeTokens labels = {{"0", "p", 1}, {"0", "q", 2}, {"0", "a", 3}, {"0", "s", 4},
                       {"p", "w", 1}, {"p", "x", 2}, {"q", "x", 1}, {"q", "y", 2},
                       {"a", "w", 1}, {"s", "z", 2}, {"w", "1", 1}, {"x", "1", 1},
                       {"y", "1", 1}, {"z", "1", 1}};
  if (left) {
    labels.push_back({"a", "z", 2});
    labels.push_back({"a", "y", 3});
  } else {
    labels.push_back({"a", "y", 2});
    labels.push_back({"a", "z", 3});
  }
  Fixture f = make_edge_fixture(left ? "graoex-left" : "graoex-right", kGraoexCovers, labels,
                                {{"grao", true}, {"rao", !left}});
  f.ordering = ChainAtomOrdering::element_order(f.roots);
  order_everywhere(f, "0", {"p", "q", "a", "s"});
  order_everywhere(f, "p", {"w", "x"});
  order_everywhere(f, "q", {"x", "y"});
  order_everywhere(f, "a", left ? std::vector<std::string>{"w", "z", "y"}
                                : std::vector<std::string>{"w", "y", "z"});
  order_everywhere(f, "s", {"z"});
  return f;
}

const Covers kFigure2Covers = {
    {"0", "p"},  {"0", "a"},  {"0", "q"},  {"p", "m1"}, {"p", "m2"}, {"p", "m3"},
    {"a", "m2"}, {"a", "m3"}, {"a", "m4"}, {"q", "m3"}, {"q", "m4"}, {"q", "m5"},
    {"m1", "c1"}, {"m2", "c1"}, {"m2", "c2"}, {"m3", "c1"}, {"m3", "c2"}, {"m3", "c3"},
    {"m4", "c2"}, {"m4", "c3"}, {"m5", "c3"}, {"c1", "1"}, {"c2", "1"}, {"c3", "1"}};

Fixture make_figure2(bool left) {
  EdgeTokens labels = {{"0", "p", 1},  {"0", "a", 2},  {"0", "q", 3},  {"p", "m1", 1},
                       {"p", "m2", 2}, {"p", "m3", 3}, {"a", "m2", 1}, {"q", "m3", 1},
                       {"m1", "c1", 1}, {"m2", "c1", 1}, {"m2", "c2", 2}, {"m3", "c2", 1},
                       {"m4", "c2", 1}, {"m4", "c3", 2}, {"m5", "c3", 1}, {"c1", "1", 1},
                       {"c2", "1", 1}, {"c3", "1", 1}};
  if (left) {
    labels.insert(labels.end(), {{"a", "m4", 2}, {"a", "m3", 3}, {"q", "m5", 2}, {"q", "m4", 3},
                                 {"m3", "c3", 2}, {"m3", "c1", 3}});
  } else {
    labels.insert(labels.end(), {{"a", "m3", 2}, {"a", "m4", 3}, {"q", "m4", 2}, {"q", "m5", 3},
                                 {"m3", "c1", 2}, {"m3", "c3", 3}});
  }
  // The left diagram narrowly misses being a GRAO: in [a, c3] the atom m4
  // precedes m3 while only m3 lies over the atom p. The expected verdicts
  // record what the checkers actually find.
  Fixture f = make_edge_fixture(left ? "figure2-left" : "figure2-right", kFigure2Covers, labels,
                                left ? std::map<std::string, bool>{{"grao", false}}
                                     : std::map<std::string, bool>{{"grao", true}, {"rao", true}});
  f.ordering = ChainAtomOrdering::element_order(f.roots);
  order_everywhere(f, "0", {"p", "a", "q"});
  order_everywhere(f, "p", {"m1", "m2", "m3"});
  order_everywhere(f, "a", left ? std::vector<std::string>{"m2", "m4", "m3"}
                                : std::vector<std::string>{"m2", "m3", "m4"});
  order_everywhere(f, "q", left ? std::vector<std::string>{"m3", "m5", "m4"}
                                : std::vector<std::string>{"m3", "m4", "m5"});
  order_everywhere(f, "m1", {"c1"});
  order_everywhere(f, "m2", {"c1", "c2"});
  order_everywhere(f, "m3", left ? std::vector<std::string>{"c2", "c3", "c1"}
                                 : std::vector<std::string>{"c2", "c1", "c3"});
  order_everywhere(f, "m4", {"c2", "c3"});
  order_everywhere(f, "m5", {"c3"});
  return f;
}

const Covers kNonueCovers = {{"0", "a"}, {"0", "b"}, {"a", "x"}, {"a", "y"},
                             {"b", "x"}, {"b", "y"}, {"x", "1"}, {"y", "1"}};

Fixture make_nonue(const std::string& which) {
  EdgeTokens labels;
  std::map<std::string, bool> expected;
  if (which == "left") {
    labels = {{"0", "a", 1}, {"0", "b", 1}, {"a", "x", 1}, {"a", "y", 4},
              {"b", "x", 2}, {"b", "y", 3}, {"x", "1", 1}, {"y", "1", 2}};
    expected = {{"ec", true}, {"sc", false}, {"ue", false}};
  } else if (which == "middle") {
    labels = {{"0", "a", 1}, {"0", "b", 1}, {"a", "x", 1}, {"a", "y", 3},
              {"b", "x", 2}, {"b", "y", 4}, {"x", "1", 1}, {"y", "1", 2}};
    expected = {{"ec", true}, {"sc", true}, {"ue", false}};
  } else {
    labels = {{"0", "a", 1}, {"0", "b", 4}, {"a", "x", 2}, {"a", "y", 8},
              {"b", "x", 5}, {"b", "y", 6}, {"x", "1", 3}, {"y", "1", 7}};
    expected = {{"ec", true}, {"sc", true}, {"ue", true}};
  }
  return make_edge_fixture("nonue-" + which, kNonueCovers, labels, std::move(expected));
}

Fixture make_disjoint_chains() {
  Fixture f;
  f.name = "disjoint-chains";
  f.poset = std::make_shared<const Poset>(Poset::from_covers(
      {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}}));
  f.roots = RootTree::build(f.poset);
  f.expected = {{"rao-exists", false}};
  return f;
}

std::string set_name(unsigned mask) {
  if (!mask) return "-";
  std::string s;
  for (int x = 0; x < 16; ++x)
    if (mask & (1u << x)) s += std::to_string(x + 1);
  return s;
}

}  // namespace

Fixture boolean_lattice(int n) {
  Covers covers;
  EdgeTokens labels;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      covers.emplace_back(set_name(mask), set_name(mask | (1u << x)));
      labels.push_back({set_name(mask), set_name(mask | (1u << x)), x + 1});
    }
  return make_edge_fixture("b" + std::to_string(n), covers, labels,
                           {{"el", true}, {"ue", true}});
}

namespace {

using Partition = std::vector<std::vector<int>>;  // blocks sorted, by min

std::string partition_name(const Partition& p) {
  std::string s;
  for (const auto& b : p) {
    if (!s.empty()) s += "|";
    for (int x : b) s += std::to_string(x);
  }
  return s;
}

Partition normalize(Partition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out{{}};
  for (int x = 1; x <= n; ++x) {
    std::vector<Partition> next;
    for (const auto& p : out) {
      for (std::size_t b = 0; b <= p.size(); ++b) {
        Partition q = p;
        if (b < p.size()) q[b].push_back(x);
        else q.push_back({x});
        next.push_back(normalize(q));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();  // finer first
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Fixture partition_lattice(int n) {
  auto parts = all_partitions(n);
  Covers covers;
  EdgeTokens labels;
  for (const auto& p : parts) {
    // Covers upward: merge two blocks.
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        Partition q;
        for (std::size_t k = 0; k < p.size(); ++k)
          if (k != i && k != j) q.push_back(p[k]);
        std::vector<int> merged = p[i];
        merged.insert(merged.end(), p[j].begin(), p[j].end());
        q.push_back(merged);
        q = normalize(q);
        covers.emplace_back(partition_name(p), partition_name(q));
        labels.push_back({partition_name(p), partition_name(q),
                          std::max(p[i].front(), p[j].front())});
      }
  }
  return make_edge_fixture("pi" + std::to_string(n), covers, labels,
                           {{"el", true}, {"ue", true}});
}

Fixture distributive_from_poset(int k, const std::vector<std::pair<int, int>>& less,
                                const std::string& name) {
  std::vector<std::vector<bool>> lt(k + 1, std::vector<bool>(k + 1, false));
  for (auto [a, b] : less) lt[a][b] = true;
  // Ideals as bitmasks over {1..k}.
  auto is_ideal = [&](unsigned mask) {
    for (int b = 1; b <= k; ++b) {
      if (!(mask & (1u << (b - 1)))) continue;
      for (int a = 1; a <= k; ++a)
        if (lt[a][b] && !(mask & (1u << (a - 1)))) return false;
    }
    return true;
  };
  // Rank the labels by a linear extension so the labeling is natural.
  std::vector<int> linext;
  std::vector<bool> placed(k + 1, false);
  while (static_cast<int>(linext.size()) < k)
    for (int x = 1; x <= k; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (int a = 1; a <= k; ++a) minimal = minimal && (placed[a] || !lt[a][x]);
      if (minimal) {
        linext.push_back(x);
        placed[x] = true;
      }
    }
  std::vector<int> rank(k + 1, 0);
  std::vector<std::string> tokens;
  for (int i = 0; i < k; ++i) {
    rank[linext[i]] = i;
    tokens.push_back(std::to_string(linext[i]));
  }
  Covers covers;
  EdgeTokens labels;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (!is_ideal(mask)) continue;
    for (int x = 1; x <= k; ++x) {
      if (mask & (1u << (x - 1))) continue;
      unsigned next = mask | (1u << (x - 1));
      if (!is_ideal(next)) continue;
      covers.emplace_back(set_name(mask), set_name(next));
      labels.push_back({set_name(mask), set_name(next), rank[x]});
    }
  }
  Fixture f = make_edge_fixture(name, covers, labels, {{"el", true}, {"ue", true}});
  std::map<std::pair<int, int>, int> ranks;
  for (const auto& [lo, hi, tok] : labels) ranks[{f.poset->index(lo), f.poset->index(hi)}] = tok;
  f.labeling = ChainEdgeLabeling::from_edges(f.roots, std::move(ranks),
                                             LabelAlphabet::explicit_order(std::move(tokens)));
  return f;
}

std::vector<std::vector<std::pair<int, int>>> all_strict_orders(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> lt(k + 1, std::vector<bool>(k + 1, false));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) lt[pairs[i].first][pairs[i].second] = true;
    bool ok = true;
    for (int a = 1; a <= k && ok; ++a)
      for (int b = 1; b <= k && ok; ++b) {
        if (lt[a][b] && lt[b][a]) ok = false;
        for (int c = 1; c <= k && ok; ++c)
          if (lt[a][b] && lt[b][c] && !lt[a][c]) ok = false;
      }
    if (!ok) continue;
    std::vector<std::pair<int, int>> rel;
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= k; ++b)
        if (lt[a][b]) rel.emplace_back(a, b);
    out.push_back(std::move(rel));
  }
  return out;
}

PosetPtr random_bounded_poset(std::mt19937& rng, int max_elems) {
  int n = std::uniform_int_distribution<int>(4, max_elems)(rng);
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  double p = std::uniform_real_distribution<double>(0.15, 0.5)(rng);
  std::bernoulli_distribution flip(p);
  for (int a = 1; a + 1 < n; ++a)
    for (int b = a + 1; b + 1 < n; ++b)
      if (flip(rng)) lt[a][b] = true;
  for (int a = 0; a < n; ++a) {
    if (a != 0) lt[0][a] = true;
    if (a != n - 1) lt[a][n - 1] = true;
  }
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lt[a][c] && lt[c][b]) lt[a][b] = true;
  Covers covers;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) cover = !(lt[a][c] && lt[c][b]);
      if (cover) covers.emplace_back("e" + std::to_string(a), "e" + std::to_string(b));
    }
  return std::make_shared<const Poset>(Poset::from_covers(covers));
}

std::vector<std::string> fixture_names() {
  return {"graoex-left", "graoex-right", "figure2-left", "figure2-right", "nonue-left",
          "nonue-middle", "nonue-right", "disjoint-chains", "b2", "b3", "b4",
          "pi3", "pi4", "j-chain3", "j-v3"};
}

Fixture get_fixture(const std::string& name) {
  if (name == "graoex-left") return make_graoex(true);
  if (name == "graoex-right") return make_graoex(false);
  if (name == "figure2-left") return make_figure2(true);
  if (name == "figure2-right") return make_figure2(false);
  if (name == "nonue-left") return make_nonue("left");
  if (name == "nonue-middle") return make_nonue("middle");
  if (name == "nonue-right") return make_nonue("right");
  if (name == "disjoint-chains") return make_disjoint_chains();
  if (name == "b2") return boolean_lattice(2);
  if (name == "b3") return boolean_lattice(3);
  if (name == "b4") return boolean_lattice(4);
  if (name == "pi3") return partition_lattice(3);
  if (name == "pi4") return partition_lattice(4);
  if (name == "j-chain3") return distributive_from_poset(3, {{1, 2}, {2, 3}, {1, 3}}, "j-chain3");
  if (name == "j-v3") return distributive_from_poset(3, {{1, 2}, {1, 3}}, "j-v3");
  throw PosetError("UnknownFixture", name);
}

}  // namespace shellkit
