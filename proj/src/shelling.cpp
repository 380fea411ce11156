#include "shellkit/shelling.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "shellkit/checks.hpp"

namespace shellkit {

int FacetList::vertex(const std::string& name) {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it != vertices.end()) return static_cast<int>(it - vertices.begin());
  vertices.push_back(name);
  return static_cast<int>(vertices.size()) - 1;
}

void FacetList::add_facet(const std::vector<std::string>& verts) {
  std::vector<int> f;
  for (const auto& v : verts) f.push_back(vertex(v));
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  facets.push_back(std::move(f));
}

FacetList order_complex_facets(const Poset& p, bool proper) {
  FacetList out;
  for (const auto& chain : p.maximal_chains()) {
    std::vector<std::string> verts;
    for (int e : chain) {
      if (proper && (e == p.bottom() || e == p.top())) continue;
      verts.push_back(p.name(e));
    }
    if (!verts.empty()) out.add_facet(verts);
  }
  return out;
}

CheckReport is_shelling(const FacetList& f, const std::vector<int>& order, int jobs,
                        std::size_t cap) {
  CheckReport rep{"shelling"};
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> want(f.facets.size());
  for (std::size_t i = 0; i < want.size(); ++i) want[i] = static_cast<int>(i);
  if (sorted != want)
    throw PosetError("NotPermutation", "facet order is not a permutation of the facets");

  auto intersect = [&](int a, int b) {
    std::vector<int> out;
    std::set_intersection(f.facets[a].begin(), f.facets[a].end(), f.facets[b].begin(),
                          f.facets[b].end(), std::back_inserter(out));
    return out;
  };
  auto bad_j = [&](std::size_t j) -> int {  // returns offending i or -1
    for (std::size_t i = 0; i < j; ++i) {
      auto ij = intersect(order[i], order[j]);
      bool ok = false;
      for (std::size_t k = 0; k < j && !ok; ++k) {
        auto kj = intersect(order[k], order[j]);
        if (kj.size() + 1 != f.facets[order[j]].size()) continue;
        ok = std::includes(kj.begin(), kj.end(), ij.begin(), ij.end());
      }
      if (!ok) return static_cast<int>(i);
    }
    return -1;
  };

  std::vector<std::pair<std::size_t, int>> failures;
  if (jobs <= 1) {
    for (std::size_t j = 1; j < order.size(); ++j) {
      int i = bad_j(j);
      if (i >= 0) failures.emplace_back(j, i);
    }
  } else {
    std::vector<std::pair<std::size_t, int>> found(order.size(), {0, -1});
    std::atomic<std::size_t> next{1};
    auto worker = [&] {
      for (std::size_t j = next.fetch_add(1); j < order.size(); j = next.fetch_add(1))
        found[j] = {j, bad_j(j)};
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t j = 1; j < order.size(); ++j)
      if (found[j].second >= 0) failures.push_back(found[j]);
  }
  for (auto [j, i] : failures) {
    auto name = [&](int fi) {
      std::string s = "{";
      for (std::size_t x = 0; x < f.facets[fi].size(); ++x)
        s += (x ? "," : "") + f.vertices[f.facets[fi][x]];
      return s + "}";
    };
    rep.add(cap, "NoShellingNeighbor",
            "facet " + name(order[j]) + " at position " + std::to_string(j) +
                " has no codimension-1 witness for earlier facet " + name(order[i]));
  }
  return rep;
}

std::vector<int> chains_as_facet_order(const FacetList& f, const Poset& p,
                                       const std::vector<std::vector<int>>& chains) {
  std::vector<int> order;
  for (const auto& chain : chains) {
    std::vector<int> facet;
    for (int e : chain) {
      auto it = std::find(f.vertices.begin(), f.vertices.end(), p.name(e));
      if (it == f.vertices.end()) throw PosetError("UnknownElement", p.name(e));
      facet.push_back(static_cast<int>(it - f.vertices.begin()));
    }
    std::sort(facet.begin(), facet.end());
    auto pos = std::find(f.facets.begin(), f.facets.end(), facet);
    if (pos == f.facets.end())
      throw PosetError("UnknownFacet", "chain is not a facet of the complex");
    order.push_back(static_cast<int>(pos - f.facets.begin()));
  }
  return order;
}

std::map<int, long long> descend_census(const ChainEdgeLabeling& L, int root, int v,
                                        bool topological) {
  const Poset& p = L.poset();
  int u = L.roots().elem(root);
  std::map<int, long long> census;
  for (const auto& c : p.saturated_chains(u, v))
    if (is_descending(L, root, c, topological)) ++census[static_cast<int>(c.size()) - 1];
  return census;
}

int lex_first_root(const ChainEdgeLabeling& L, int u) {
  const Poset& p = L.poset();
  int best = -1;
  std::pair<std::vector<int>, RootPath> best_key;
  for (int r : L.roots().roots_of(u)) {
    auto path = L.roots().path(r);
    auto key = std::make_pair(L.label_sequence(0, path), path);
    if (best < 0 || key < best_key) {
      best = r;
      best_key = std::move(key);
    }
  }
  (void)p;
  return best;
}

int mobius_via_descents(const ChainEdgeLabeling& L, int u, int v, bool topological,
                        bool run_precheck) {
  if (run_precheck) {
    auto rep = topological ? check_topological_CL(L, 1) : check_CL(L, 1);
    if (!rep.pass)
      throw PosetError("CheckerPreconditionFailed",
                       rep.check + " fails: " +
                           (rep.witnesses.empty() ? "" : rep.witnesses[0].detail));
  }
  auto census = descend_census(L, lex_first_root(L, u), v, topological);
  long long acc = 0;
  for (auto [len, count] : census) acc += (len % 2 == 0 ? count : -count);
  return static_cast<int>(acc);
}

std::map<int, long long> sphere_vector(const ChainEdgeLabeling& L, bool topological) {
  auto census = descend_census(L, 0, L.poset().top(), topological);
  std::map<int, long long> out;
  for (auto [len, count] : census) out[len - 2] += count;
  return out;
}

long long reduced_euler(const FacetList& f) {
  std::set<std::vector<int>> faces;
  for (const auto& facet : f.facets) {
    std::size_t n = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) face.push_back(facet[b]);
      faces.insert(std::move(face));
    }
  }
  long long acc = -1;
  for (const auto& face : faces) acc += (face.size() % 2 == 1) ? 1 : -1;
  return acc;
}

}  // namespace shellkit
