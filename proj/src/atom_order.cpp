#include "shellkit/atom_order.hpp"

#include <algorithm>
#include <functional>

namespace shellkit {
namespace {

std::string name_path(const Poset& p, const RootPath& path) {
  std::string s;
  for (int e : path) s += (s.empty() ? "" : " ") + p.name(e);
  return s;
}

std::string name_root(const ChainAtomOrdering& C, int root) {
  return name_path(C.poset(), C.roots().path(root));
}

int position(const std::vector<int>& ord, int a) {
  return static_cast<int>(std::find(ord.begin(), ord.end(), a) - ord.begin());
}

}  // namespace

ChainAtomOrdering ChainAtomOrdering::element_order(RootTreePtr rt) {
  ChainAtomOrdering c;
  c.order_.resize(rt->count());
  for (int r = 0; r < rt->count(); ++r) c.order_[r] = rt->poset().up(rt->elem(r));
  c.rt_ = std::move(rt);
  return c;
}

ChainAtomOrdering ChainAtomOrdering::from_orders(RootTreePtr rt,
                                                std::map<int, std::vector<int>> orders) {
  ChainAtomOrdering c = element_order(std::move(rt));
  for (auto& [root, ord] : orders) c.set_order(root, std::move(ord));
  return c;
}

void ChainAtomOrdering::set_order(int root, std::vector<int> ord) {
  auto sorted = ord;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != rt_->poset().up(rt_->elem(root)))
    throw PosetError("NotAtomPermutation", "order at root " + name_path(rt_->poset(), rt_->path(root)) +
                                               " is not a permutation of the covers");
  order_[root] = std::move(ord);
}

FGPartition fg_sets(const ChainAtomOrdering& C, int root, int v) {
  const Poset& p = C.poset();
  const auto& node = C.roots().node(root);
  if (node.parent < 0)
    throw PosetError("BadRoot", "fg_sets needs a root of depth >= 1");
  int u = node.elem;
  std::vector<int> earlier;
  for (int e : C.order(node.parent)) {
    if (e == u) break;
    if (p.leq(e, v)) earlier.push_back(e);
  }
  FGPartition fg;
  for (int a : C.order(root)) {
    if (!p.leq(a, v)) continue;
    bool above = std::any_of(earlier.begin(), earlier.end(),
                             [&](int e) { return e != a && p.leq(e, a); });
    (above ? fg.F : fg.G).push_back(a);
  }
  return fg;
}

bool check_condition_ii(const ChainAtomOrdering& C, int root, bool rephrased) {
  const Poset& p = C.poset();
  const auto& ord = C.order(root);
  int u = C.roots().elem(root);
  (void)u;
  for (std::size_t j = 1; j < ord.size(); ++j) {
    int aj = ord[j];
    // Covers z of a_j witnessing the condition: some earlier atom lies below z.
    std::vector<int> good_z;
    for (int z : p.up(aj)) {
      bool ok = false;
      if (rephrased) {
        // a_j is not the earliest atom of [u,z]_r.
        for (int e : ord) {
          if (e == aj) break;
          if (p.leq(e, z)) {
            ok = true;
            break;
          }
        }
      } else {
        for (std::size_t k = 0; k < j && !ok; ++k) ok = ord[k] != z && p.leq(ord[k], z);
      }
      if (ok) good_z.push_back(z);
    }
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq(aj, y) || y == aj) continue;
      bool has_earlier_below = false;
      for (std::size_t i = 0; i < j && !has_earlier_below; ++i) has_earlier_below = p.leq(ord[i], y);
      if (!has_earlier_below) continue;
      if (!std::any_of(good_z.begin(), good_z.end(), [&](int z) { return p.leq(z, y); }))
        return false;
    }
  }
  return true;
}

namespace {

// Condition (i)(b) of a GRAO at one root: for every atom a_j and every w two
// covers above a_j, the restriction to [a_j, w] either starts with an atom
// above some earlier a_i, or contains no such atom at all.
void grao_ib_at_root(const ChainAtomOrdering& C, int root, CheckReport& rep, std::size_t cap) {
  const Poset& p = C.poset();
  const auto& ord = C.order(root);
  for (std::size_t j = 1; j < ord.size(); ++j) {
    int aj = ord[j];
    std::vector<int> earlier(ord.begin(), ord.begin() + j);
    int sub = C.roots().extend(root, aj);
    const auto& sub_ord = C.order(sub);
    std::vector<char> is_w(p.size(), 0);
    for (int x : p.up(aj))
      for (int w : p.up(x)) is_w[w] = 1;
    for (int w = 0; w < p.size(); ++w) {
      if (!is_w[w]) continue;
      int first = -1;
      bool any_above = false, first_above = false;
      for (int a : sub_ord) {
        if (!p.leq(a, w)) continue;
        bool above = std::any_of(earlier.begin(), earlier.end(),
                                 [&](int e) { return e != a && p.leq(e, a); });
        if (first < 0) {
          first = a;
          first_above = above;
        }
        any_above = any_above || above;
      }
      if (any_above && !first_above) {
        rep.add(cap, "FirstAtomNotOverEarlier",
                "root " + name_root(C, root) + ", atom " + p.name(aj) + ", interval [" +
                    p.name(aj) + ", " + p.name(w) + "]: first atom " + p.name(first) +
                    " lies over no earlier atom while another atom does");
        return;
      }
    }
  }
}

void condition_ii_at_root(const ChainAtomOrdering& C, int root, CheckReport& rep,
                          std::size_t cap) {
  if (!check_condition_ii(C, root, false))
    rep.add(cap, "ConditionIIViolated", "root " + name_root(C, root));
}

}  // namespace

CheckReport check_GRAO(const ChainAtomOrdering& C, std::size_t cap) {
  CheckReport rep{"GRAO"};
  for (int r = 0; r < C.roots().count(); ++r) {
    if (C.order(r).size() < 2) {
      // (ii) is vacuous with fewer than two atoms, but (i)(b) is not.
      grao_ib_at_root(C, r, rep, cap);
      continue;
    }
    grao_ib_at_root(C, r, rep, cap);
    condition_ii_at_root(C, r, rep, cap);
  }
  return rep;
}

CheckReport check_RAO(const ChainAtomOrdering& C, std::size_t cap) {
  CheckReport rep{"RAO"};
  const Poset& p = C.poset();
  for (int r = 0; r < C.roots().count(); ++r) {
    if (C.roots().node(r).depth >= 1 && !C.order(r).empty()) {
      auto fg = fg_sets(C, r, p.top());
      // F must occupy a prefix of the order.
      bool seen_g = false;
      for (int a : C.order(r)) {
        bool in_g = std::find(fg.G.begin(), fg.G.end(), a) != fg.G.end();
        if (in_g) seen_g = true;
        else if (seen_g) {
          rep.add(cap, "FAtomAfterGAtom",
                  "root " + name_root(C, r) + ": atom " + p.name(a) +
                      " lies over an earlier atom but follows one that does not");
          break;
        }
      }
    }
    condition_ii_at_root(C, r, rep, cap);
  }
  return rep;
}

ChainAtomOrdering reorder(const ChainAtomOrdering& C, const std::vector<int>* lin) {
  const Poset& p = C.poset();
  std::vector<int> canonical;
  if (!lin) {
    canonical = p.linear_extension();
    lin = &canonical;
  }
  ChainAtomOrdering out = C;
  for (int u : *lin) {
    if (u == p.bottom()) continue;
    for (int r : C.roots().roots_of(u)) {
      if (out.order(r).empty()) continue;
      auto fg = fg_sets(out, r, p.top());
      std::vector<int> merged = fg.F;
      merged.insert(merged.end(), fg.G.begin(), fg.G.end());
      out.set_order(r, std::move(merged));
    }
  }
  return out;
}

ChainAtomOrdering swap_atoms(const ChainAtomOrdering& C, int root, int i) {
  const Poset& p = C.poset();
  const auto& ord = C.order(root);
  if (i < 0 || i + 1 >= static_cast<int>(ord.size()))
    throw PosetError("BadIndex", "swap position out of range");
  int a = ord[i], b = ord[i + 1];
  for (int w = 0; w < p.size(); ++w) {
    if (!p.leq(a, w) || !p.leq(b, w)) continue;
    int first = -1;
    for (int c : ord)
      if (p.leq(c, w)) {
        first = c;
        break;
      }
    if (first == a || first == b)
      throw PosetError("IllegalSwap", "atom " + p.name(first) + " is the earliest atom of [" +
                                          p.name(C.roots().elem(root)) + ", " + p.name(w) +
                                          "] containing both " + p.name(a) + " and " + p.name(b));
  }
  ChainAtomOrdering out = C;
  auto next = ord;
  std::swap(next[i], next[i + 1]);
  out.set_order(root, std::move(next));
  return out;
}

std::vector<std::vector<int>> cao_chain_order(const ChainAtomOrdering& C) {
  auto chains = C.poset().maximal_chains();
  std::sort(chains.begin(), chains.end(), [&](const std::vector<int>& c, const std::vector<int>& d) {
    int root = 0;
    for (std::size_t i = 1; i < c.size() && i < d.size(); ++i) {
      if (c[i] != d[i])
        return position(C.order(root), c[i]) < position(C.order(root), d[i]);
      root = C.roots().extend(root, c[i]);
    }
    return c.size() < d.size();
  });
  return chains;
}

bool check_compatible(const ChainAtomOrdering& C, const ChainEdgeLabeling& L) {
  return cao_chain_order(C) == lex_chain_order(L);
}

namespace {

ChainEdgeLabeling index_labeling(const ChainAtomOrdering& C) {
  std::map<std::pair<int, int>, int> labels;
  for (int r = 0; r < C.roots().count(); ++r) {
    const auto& ord = C.order(r);
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) labels[{r, ord[i]}] = i + 1;
  }
  return ChainEdgeLabeling::from_roots(C.roots_ptr(), std::move(labels),
                                       LabelAlphabet::numeric());
}

}  // namespace

ChainEdgeLabeling grao_to_cc(const ChainAtomOrdering& C) {
  auto rep = check_GRAO(C, 1);
  if (!rep.pass)
    throw PosetError("NotGRAO", rep.witnesses.empty() ? "GRAO check failed"
                                                      : rep.witnesses[0].detail);
  return index_labeling(C);
}

ChainEdgeLabeling rao_to_cc(const ChainAtomOrdering& C) {
  auto rep = check_RAO(C, 1);
  if (!rep.pass)
    throw PosetError("NotRAO", rep.witnesses.empty() ? "RAO check failed"
                                                     : rep.witnesses[0].detail);
  return index_labeling(C);
}

ChainEdgeLabeling rao_to_cl(const ChainAtomOrdering& C) {
  auto rep = check_RAO(C, 1);
  if (!rep.pass)
    throw PosetError("NotRAO", rep.witnesses.empty() ? "RAO check failed"
                                                     : rep.witnesses[0].detail);
  const Poset& p = C.poset();
  std::map<std::pair<int, int>, int> labels;
  // Root-tree nodes are stored parents-first, so incoming labels are ready
  // when a node is reached.
  for (int r = 0; r < C.roots().count(); ++r) {
    const auto& node = C.roots().node(r);
    const auto& ord = C.order(r);
    if (node.parent < 0) {
      for (int i = 0; i < static_cast<int>(ord.size()); ++i) labels[{r, ord[i]}] = i + 1;
      continue;
    }
    int incoming = labels.at({node.parent, node.elem});
    int j = static_cast<int>(fg_sets(C, r, p.top()).F.size());
    for (int i1 = 1; i1 <= static_cast<int>(ord.size()); ++i1)
      labels[{r, ord[i1 - 1]}] = i1 <= j ? i1 - j + incoming - 1 : i1 - j + incoming + 1;
  }
  return ChainEdgeLabeling::from_roots(C.roots_ptr(), std::move(labels),
                                       LabelAlphabet::numeric());
}

ChainAtomOrdering labeling_to_grao(const ChainEdgeLabeling& L) {
  auto tcl = check_topological_CL(L, 1);
  auto sc = check_self_consistency(L, 1);
  if (!tcl.pass || !sc.pass)
    throw PosetError("NotSelfConsistentTCL",
                     !tcl.pass ? tcl.witnesses[0].detail : sc.witnesses[0].detail);
  const Poset& p = L.poset();
  ChainAtomOrdering out = ChainAtomOrdering::element_order(L.roots_ptr());
  for (int r = 0; r < L.roots().count(); ++r) {
    int u = L.roots().elem(r);
    if (u == p.top()) continue;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;
    for (const auto& c : p.saturated_chains(u, p.top()))
      keyed.emplace_back(L.label_sequence(r, c), c);
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> ord;
    for (const auto& [seq, chain] : keyed) {
      (void)seq;
      if (std::find(ord.begin(), ord.end(), chain[1]) == ord.end()) ord.push_back(chain[1]);
    }
    out.set_order(r, std::move(ord));
  }
  return out;
}

ChainAtomOrdering restrict_cao(const ChainAtomOrdering& C, int root, int v) {
  const Poset& p = C.poset();
  int u = C.roots().elem(root);
  auto q = std::make_shared<const Poset>(p.interval(u, v));
  auto qrt = RootTree::build(q);
  ChainAtomOrdering out = ChainAtomOrdering::element_order(qrt);
  for (int s = 0; s < qrt->count(); ++s) {
    // Ambient root: `root` extended by the interval path.
    auto qpath = qrt->path(s);
    int ambient = root;
    for (std::size_t i = 1; i < qpath.size(); ++i)
      ambient = C.roots().extend(ambient, p.index(q->name(qpath[i])));
    std::vector<int> ord;
    for (int a : C.order(ambient))
      if (p.leq(a, v)) ord.push_back(q->index(p.name(a)));
    out.set_order(s, std::move(ord));
  }
  return out;
}

SearchResult search_RAO(RootTreePtr rt, std::size_t budget) {
  if (budget == 0) budget = default_budget();
  const Poset& p = rt->poset();
  ChainAtomOrdering cao = ChainAtomOrdering::element_order(rt);
  SearchResult res{SearchStatus::NotFound, std::nullopt, 0};

  // Roots are assigned in node order (parents first); each candidate order
  // must satisfy condition (ii) and, beyond the bottom, keep F as a prefix.
  std::function<bool(int)> assign = [&](int r) -> bool {
    if (r == rt->count()) return true;
    const auto& atoms = p.up(rt->elem(r));
    if (atoms.size() <= 1) {
      if (!atoms.empty() && !check_condition_ii(cao, r, false)) return false;
      return assign(r + 1);
    }
    std::vector<int> perm = atoms;  // already in ElementOrder
    std::vector<char> in_f(p.size(), 0);
    std::size_t fsize = 0;
    if (rt->node(r).depth >= 1) {
      auto fg = fg_sets(cao, r, p.top());
      for (int a : fg.F) in_f[a] = 1;
      fsize = fg.F.size();
    }
    do {
      if (++res.nodes_visited > budget) {
        res.status = SearchStatus::BudgetExceeded;
        return false;
      }
      bool prefix_ok = true;
      for (std::size_t i = 0; i < fsize && prefix_ok; ++i) prefix_ok = in_f[perm[i]];
      if (!prefix_ok) continue;
      cao.set_order(r, perm);
      if (!check_condition_ii(cao, r, false)) continue;
      if (assign(r + 1)) return true;
      if (res.status == SearchStatus::BudgetExceeded) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    cao.set_order(r, atoms);  // restore for fg computations of siblings
    return false;
  };
  if (assign(0)) {
    res.status = SearchStatus::Found;
    res.cao = std::move(cao);
  }
  return res;
}

}  // namespace shellkit
