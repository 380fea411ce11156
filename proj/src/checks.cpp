#include "shellkit/checks.hpp"

#include <algorithm>
#include <map>

namespace shellkit {
namespace {

std::string name_chain(const Poset& p, const std::vector<int>& c) {
  std::string s;
  for (int e : c) s += (s.empty() ? "" : " ") + p.name(e);
  return s;
}

std::string name_seq(const LabelAlphabet& a, const std::vector<int>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + a.token(seq[i]);
  return s + ")";
}

std::string name_rooted(const ChainEdgeLabeling& L, int root, int v) {
  const Poset& p = L.poset();
  int u = L.roots().elem(root);
  std::string s = "[" + p.name(u) + ", " + p.name(v) + "] root " +
                  name_chain(p, L.roots().path(root));
  return s;
}

struct Ctx {
  const ChainEdgeLabeling& L;
  std::map<std::tuple<int, int, int>, bool> ascent_memo;

  bool topo_ascent(int root, int v, int w) {
    auto key = std::make_tuple(root, v, w);
    auto it = ascent_memo.find(key);
    if (it != ascent_memo.end()) return it->second;
    bool r = is_topological_ascent(L, root, v, w);
    ascent_memo[key] = r;
    return r;
  }

  bool chain_topo_ascending(int root, const std::vector<int>& chain) {
    int cur = root;
    for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
      if (!topo_ascent(cur, chain[i + 1], chain[i + 2])) return false;
      cur = L.roots().extend(cur, chain[i + 1]);
    }
    return true;
  }

  bool chain_topo_descending(int root, const std::vector<int>& chain) {
    int cur = root;
    for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
      if (topo_ascent(cur, chain[i + 1], chain[i + 2])) return false;
      cur = L.roots().extend(cur, chain[i + 1]);
    }
    return true;
  }
};

// Calls fn(root, v) for every rooted interval [end(root), v] with v strictly
// above end(root).
template <typename F>
void for_each_rooted_interval(const ChainEdgeLabeling& L, F&& fn) {
  const Poset& p = L.poset();
  for (int r = 0; r < L.roots().count(); ++r) {
    int u = L.roots().elem(r);
    for (int v = 0; v < p.size(); ++v)
      if (v != u && p.leq(u, v)) fn(r, v);
  }
}

// Calls fn(u, v) for every interval with v strictly above u.
template <typename F>
void for_each_interval(const Poset& p, F&& fn) {
  for (int u = 0; u < p.size(); ++u)
    for (int v = 0; v < p.size(); ++v)
      if (v != u && p.leq(u, v)) fn(u, v);
}

}  // namespace

bool is_topological_ascent(const ChainEdgeLabeling& L, int root, int v, int w) {
  const Poset& p = L.poset();
  int u = L.roots().elem(root);
  if (!p.covers(u, v) || !p.covers(v, w))
    throw PosetError("NotComparable", "expected covers " + p.name(u) + " < " + p.name(v) +
                                          " < " + p.name(w));
  std::vector<int> pair{L.label(root, v), L.label(L.roots().extend(root, v), w)};
  for (const auto& c : p.saturated_chains(u, w)) {
    if (c.size() == 3 && c[1] == v) continue;
    if (lex_compare(pair, L.label_sequence(root, c)) != std::strong_ordering::less) return false;
  }
  return true;
}

bool is_ascending(const ChainEdgeLabeling& L, int root, const std::vector<int>& chain) {
  auto seq = L.label_sequence(root, chain);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!(seq[i] < seq[i + 1])) return false;
  return true;
}

bool is_descending(const ChainEdgeLabeling& L, int root, const std::vector<int>& chain,
                   bool topological) {
  if (topological) {
    Ctx ctx{L, {}};
    return ctx.chain_topo_descending(root, chain);
  }
  auto seq = L.label_sequence(root, chain);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] < seq[i + 1]) return false;
  return true;
}

ChainClass classify_chain(const ChainEdgeLabeling& L, int root, const std::vector<int>& chain,
                          bool topological) {
  bool asc, desc;
  if (topological) {
    Ctx ctx{L, {}};
    asc = ctx.chain_topo_ascending(root, chain);
    desc = ctx.chain_topo_descending(root, chain);
  } else {
    asc = is_ascending(L, root, chain);
    desc = is_descending(L, root, chain, false);
  }
  if (asc) return ChainClass::Ascending;
  if (desc) return ChainClass::Descending;
  return ChainClass::Mixed;
}

namespace {

// Shared body of check_EL / check_CL: EL runs over plain intervals by using
// an arbitrary root (labels ignore the root), CL over rooted intervals.
void cl_body(const ChainEdgeLabeling& L, int root, int v, CheckReport& rep, std::size_t cap) {
  const Poset& p = L.poset();
  int u = L.roots().elem(root);
  const auto& chains = p.saturated_chains(u, v);
  int ascending = 0;
  const std::vector<int>* asc_chain = nullptr;
  std::vector<int> best_seq;
  const std::vector<int>* best_chain = nullptr;
  for (const auto& c : chains) {
    auto seq = L.label_sequence(root, c);
    bool asc = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      if (!(seq[i] < seq[i + 1])) {
        asc = false;
        break;
      }
    if (asc) {
      ++ascending;
      asc_chain = &c;
    }
    if (!best_chain || lex_compare(seq, best_seq) == std::strong_ordering::less) {
      best_seq = std::move(seq);
      best_chain = &c;
    }
  }
  if (ascending == 0)
    rep.add(cap, "NoAscendingChain", name_rooted(L, root, v));
  else if (ascending > 1)
    rep.add(cap, "MultipleAscendingChains", name_rooted(L, root, v));
  else {
    auto asc_seq = L.label_sequence(root, *asc_chain);
    for (const auto& c : chains) {
      if (&c == asc_chain) continue;
      if (lex_compare(asc_seq, L.label_sequence(root, c)) != std::strong_ordering::less) {
        rep.add(cap, "AscendingChainNotLexFirst",
                name_rooted(L, root, v) + ": chain " + name_chain(p, c) + " is not lex-greater");
        break;
      }
    }
  }
}

}  // namespace

CheckReport check_EL(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"EL"};
  if (!L.is_edge_labeling())
    throw PosetError("NotEdgeLabeling", "check_EL needs a root-independent labeling");
  const Poset& p = L.poset();
  // Any root of u gives the same labels, so run the CL body on one root per
  // interval bottom.
  std::vector<int> some_root(p.size(), -1);
  for (int r = 0; r < L.roots().count(); ++r)
    if (some_root[L.roots().elem(r)] == -1) some_root[L.roots().elem(r)] = r;
  for_each_interval(p, [&](int u, int v) { cl_body(L, some_root[u], v, rep, cap); });
  return rep;
}

CheckReport check_CL(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"CL"};
  for_each_rooted_interval(L, [&](int r, int v) { cl_body(L, r, v, rep, cap); });
  return rep;
}

namespace {

void cc_body(Ctx& ctx, int root, int v, CheckReport& rep, std::size_t cap) {
  const ChainEdgeLabeling& L = ctx.L;
  const Poset& p = L.poset();
  int u = L.roots().elem(root);
  const auto& chains = p.saturated_chains(u, v);
  int ascending = 0;
  for (const auto& c : chains)
    if (ctx.chain_topo_ascending(root, c)) ++ascending;
  if (ascending != 1)
    rep.add(cap,
            ascending == 0 ? "NoTopologicallyAscendingChain" : "MultipleTopologicallyAscendingChains",
            name_rooted(L, root, v));
  std::vector<std::vector<int>> seqs;
  seqs.reserve(chains.size());
  for (const auto& c : chains) seqs.push_back(L.label_sequence(root, c));
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = i + 1; j < seqs.size(); ++j) {
      const auto& a = seqs[i];
      const auto& b = seqs[j];
      bool prefix = std::mismatch(a.begin(), a.end(), b.begin(), b.end()).first == a.end() ||
                    std::mismatch(b.begin(), b.end(), a.begin(), a.end()).first == b.end();
      if (prefix) {
        rep.add(cap, a == b ? "DuplicateLabelSequence" : "PrefixLabelSequence",
                name_rooted(L, root, v) + ": chains " + name_chain(p, chains[i]) + " and " +
                    name_chain(p, chains[j]) + " carry " + name_seq(L.alphabet(), a) + " / " +
                    name_seq(L.alphabet(), b));
        return;
      }
    }
}

}  // namespace

CheckReport check_EC(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"EC"};
  if (!L.is_edge_labeling())
    throw PosetError("NotEdgeLabeling", "check_EC needs a root-independent labeling");
  const Poset& p = L.poset();
  Ctx ctx{L, {}};
  std::vector<int> some_root(p.size(), -1);
  for (int r = 0; r < L.roots().count(); ++r)
    if (some_root[L.roots().elem(r)] == -1) some_root[L.roots().elem(r)] = r;
  for_each_interval(p, [&](int u, int v) { cc_body(ctx, some_root[u], v, rep, cap); });
  return rep;
}

CheckReport check_CC(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"CC"};
  Ctx ctx{L, {}};
  for_each_rooted_interval(L, [&](int r, int v) { cc_body(ctx, r, v, rep, cap); });
  return rep;
}

CheckReport check_topological_CL(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"topological-CL"};
  const Poset& p = L.poset();
  Ctx ctx{L, {}};
  for_each_rooted_interval(L, [&](int root, int v) {
    int u = L.roots().elem(root);
    const auto& chains = p.saturated_chains(u, v);
    std::size_t best = 0;
    std::vector<std::vector<int>> seqs;
    seqs.reserve(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
      seqs.push_back(L.label_sequence(root, chains[i]));
      if (i && lex_compare(seqs[i], seqs[best]) == std::strong_ordering::less) best = i;
    }
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (i == best) continue;
      if (lex_compare(seqs[best], seqs[i]) != std::strong_ordering::less) {
        rep.add(cap, "NoUniqueLexFirstChain",
                name_rooted(L, root, v) + ": " + name_chain(p, chains[best]) + " ties " +
                    name_chain(p, chains[i]));
        return;
      }
    }
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (i == best) continue;
      if (ctx.chain_topo_ascending(root, chains[i])) {
        rep.add(cap, "NonFirstChainWithoutDescent",
                name_rooted(L, root, v) + ": chain " + name_chain(p, chains[i]) +
                    " has no topological descent");
        return;
      }
    }
  });
  return rep;
}

CheckReport check_UE(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"UE"};
  const Poset& p = L.poset();
  for_each_rooted_interval(L, [&](int root, int v) {
    int u = L.roots().elem(root);
    int best = 0, count = 0;
    std::vector<std::pair<int, int>> atom_labels;  // (atom, label)
    for (int a : p.up(u))
      if (p.leq(a, v)) atom_labels.emplace_back(a, L.label(root, a));
    for (auto [a, l] : atom_labels) {
      (void)a;
      if (count == 0 || l < best) {
        best = l;
        count = 1;
      } else if (l == best) {
        ++count;
      }
    }
    if (count > 1) {
      std::string who;
      for (auto [a, l] : atom_labels)
        if (l == best) who += (who.empty() ? "" : ", ") + p.name(a);
      rep.add(cap, "MinimalLabelRepeated",
              name_rooted(L, root, v) + ": label " + L.alphabet().token(best) + " on atoms " + who);
    }
  });
  return rep;
}

CheckReport check_self_consistency(const ChainEdgeLabeling& L, std::size_t cap) {
  CheckReport rep{"self-consistency"};
  const Poset& p = L.poset();

  // Precondition of the notion itself: unique lex-first chains everywhere.
  for_each_rooted_interval(L, [&](int root, int v) {
    int u = L.roots().elem(root);
    const auto& chains = p.saturated_chains(u, v);
    std::vector<int> best;
    int best_i = -1, ties = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      auto seq = L.label_sequence(root, chains[i]);
      if (best_i < 0 || lex_compare(seq, best) == std::strong_ordering::less) {
        best = std::move(seq);
        best_i = static_cast<int>(i);
        ties = 1;
      } else if (lex_compare(seq, best) == std::strong_ordering::equal) {
        ++ties;
      }
    }
    if (ties > 1) rep.add(cap, "NoUniqueLexFirstChain", name_rooted(L, root, v));
  });
  if (!rep.pass) return rep;

  // Earliest chain through a given atom of [u,v']_r.
  auto earliest_via = [&](int root, int v, int atom) {
    int u = L.roots().elem(root);
    std::vector<int> best;
    bool have = false;
    for (const auto& c : p.saturated_chains(u, v)) {
      if (c.size() < 2 || c[1] != atom) continue;
      auto seq = L.label_sequence(root, c);
      if (!have || lex_compare(seq, best) == std::strong_ordering::less) {
        best = std::move(seq);
        have = true;
      }
    }
    return best;
  };

  std::map<std::tuple<int, int, int>, bool> done;  // (root, a, b) checked
  for_each_rooted_interval(L, [&](int root, int v) {
    int u = L.roots().elem(root);
    const auto& chains = p.saturated_chains(u, v);
    // Lex-first atom of [u,v]_r.
    std::vector<int> best;
    int a = -1;
    for (const auto& c : chains) {
      auto seq = L.label_sequence(root, c);
      if (a < 0 || lex_compare(seq, best) == std::strong_ordering::less) {
        best = std::move(seq);
        a = c[1];
      }
    }
    for (int b : p.up(u)) {
      if (b == a || !p.leq(b, v)) continue;
      auto key = std::make_tuple(root, a, b);
      if (done.count(key)) continue;
      done[key] = true;
      for (int vp = 0; vp < p.size(); ++vp) {
        if (!p.leq(a, vp) || !p.leq(b, vp)) continue;
        auto ea = earliest_via(root, vp, a);
        auto eb = earliest_via(root, vp, b);
        if (lex_compare(eb, ea) != std::strong_ordering::greater) {
          rep.add(cap, "InconsistentAtomOrder",
                  name_rooted(L, root, v) + ": atom " + p.name(a) + " is lex-first, but in [" +
                      p.name(u) + ", " + p.name(vp) + "] the earliest chain through " + p.name(b) +
                      " " + name_seq(L.alphabet(), eb) + " does not come after " +
                      name_seq(L.alphabet(), ea));
          return;
        }
      }
    }
  });
  return rep;
}

}  // namespace shellkit
