#include "shellkit/uncrossing.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "shellkit/atom_order.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

std::string word_string(const StrandWord& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

StrandWord word_from_string(const std::string& s) {
  StrandWord w;
  for (char c : s) {
    if (c < '1' || c > '9') throw PosetError("BadWord", "strand word " + s);
    w.push_back(c - '0');
  }
  return w;
}

StrandWord canonicalize(const StrandWord& w) {
  std::map<int, int> ren;
  StrandWord out;
  for (int x : w) {
    auto [it, fresh] = ren.emplace(x, static_cast<int>(ren.size()) + 1);
    (void)fresh;
    out.push_back(it->second);
  }
  return out;
}

std::vector<StrandWord> enumerate_matchings(int n) {
  std::vector<StrandWord> out;
  StrandWord word(2 * n, 0);
  int strands = 0;
  std::function<void()> rec = [&] {
    auto open = std::find(word.begin(), word.end(), 0);
    if (open == word.end()) {
      out.push_back(word);
      return;
    }
    std::size_t i = open - word.begin();
    ++strands;
    word[i] = strands;
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[j] != 0) continue;
      word[j] = strands;
      rec();
      word[j] = 0;
    }
    word[i] = 0;
    --strands;
  };
  rec();
  return out;
}

namespace {

// Endpoint positions of strand s in w.
std::pair<int, int> strand_ends(const StrandWord& w, int s) {
  int a = -1, b = -1;
  for (int p = 0; p < static_cast<int>(w.size()); ++p)
    if (w[p] == s) (a < 0 ? a : b) = p;
  if (b < 0) throw PosetError("BadWord", "strand " + std::to_string(s) + " missing");
  return {a, b};
}

bool interleaves(const StrandWord& w, int i, int j) {
  auto [a1, a2] = strand_ends(w, i);
  auto [b1, b2] = strand_ends(w, j);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

}  // namespace

int crossing_number(const StrandWord& w) {
  int n = *std::max_element(w.begin(), w.end());
  int acc = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (interleaves(w, i, j)) ++acc;
  return acc;
}

Uncrossed uncross(const StrandWord& w, int i, int j) {
  if (!interleaves(w, i, j))
    throw PosetError("NotCrossing", "strands " + std::to_string(i) + " and " + std::to_string(j) +
                                        " do not interleave in " + word_string(w));
  auto [p1, p3] = strand_ends(w, i);
  auto [p2, p4] = strand_ends(w, j);
  if (p2 < p1) {  // normalize to p1 < p2 < p3 < p4
    std::swap(p1, p2);
    std::swap(p3, p4);
  }
  auto repair = [&](std::pair<int, int> e1, std::pair<int, int> e2) {
    StrandWord out = w;
    int fresh = *std::max_element(w.begin(), w.end()) + 1;
    out[e1.first] = out[e1.second] = fresh;
    out[e2.first] = out[e2.second] = fresh + 1;
    return canonicalize(out);
  };
  return Uncrossed{repair({p1, p4}, {p2, p3}), repair({p1, p2}, {p3, p4})};
}

std::string uncrossing_label_token(int first, int second) {
  return (first < second ? "a:" : "d:") + std::to_string(first) + "," + std::to_string(second);
}

LabelAlphabet uncrossing_alphabet(int n) {
  std::vector<std::string> tokens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) tokens.push_back(uncrossing_label_token(i, j));
  tokens.push_back("L");
  // Descending pairs (j,i), reverse-lexicographic: larger j first, then
  // larger i.
  for (int j = n; j >= 2; --j)
    for (int i = j - 1; i >= 1; --i) tokens.push_back(uncrossing_label_token(j, i));
  return LabelAlphabet::explicit_order(std::move(tokens));
}

int uncrossing_label_rank(const std::string& token, int n) {
  return uncrossing_alphabet(n).rank(token);
}

UncrossingPoset build_uncrossing(int n) {
  auto words = enumerate_matchings(n);
  // Deterministic element order: by (rank, word).
  std::stable_sort(words.begin(), words.end(), [](const StrandWord& a, const StrandWord& b) {
    int ca = crossing_number(a), cb = crossing_number(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::pair<std::string, std::string>, std::string> down_labels;
  for (const auto& w : words) {
    int cw = crossing_number(w);
    std::string wname = word_string(w);
    if (cw == 0) {
      covers.emplace_back("0", wname);
      down_labels[{wname, "0"}] = "L";
      continue;
    }
    int strands = *std::max_element(w.begin(), w.end());
    for (int i = 1; i <= strands; ++i)
      for (int j = i + 1; j <= strands; ++j) {
        if (!interleaves(w, i, j)) continue;
        auto res = uncross(w, i, j);
        for (auto [word2, lab] :
             {std::make_pair(res.nested, uncrossing_label_token(i, j)),
              std::make_pair(res.side_by_side, uncrossing_label_token(j, i))}) {
          if (crossing_number(word2) != cw - 1) continue;
          auto key = std::make_pair(wname, word_string(word2));
          auto [it, fresh] = down_labels.emplace(key, lab);
          if (fresh) covers.emplace_back(key.second, key.first);
          else if (it->second != lab)
            throw PosetError("AmbiguousLabel", "cover " + key.second + " < " + key.first +
                                                   " reached with labels " + it->second + " and " +
                                                   lab);
        }
      }
  }
  // Elements must be interned bottom-up in (rank, word) order: emit covers
  // sorted by the upper element's position in `words`.
  std::map<std::string, int> pos{{"0", -1}};
  for (int i = 0; i < static_cast<int>(words.size()); ++i) pos[word_string(words[i])] = i;
  std::stable_sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    if (pos[a.second] != pos[b.second]) return pos[a.second] < pos[b.second];
    return pos[a.first] < pos[b.first];
  });
  UncrossingPoset out;
  out.n = n;
  auto poset = std::make_shared<const Poset>(Poset::from_covers(covers));
  out.poset = poset;
  for (const auto& [key, lab] : down_labels)
    out.down_labels[{poset->index(key.first), poset->index(key.second)}] = lab;
  return out;
}

DualUncrossing dual_uncrossing(const UncrossingPoset& P) {
  auto dual = std::make_shared<const Poset>(P.poset->dual());
  auto rt = RootTree::build(dual);
  auto alpha = uncrossing_alphabet(P.n);
  std::map<std::pair<int, int>, int> labels;
  for (const auto& [cover, lab] : P.down_labels) {
    // Indices coincide between P and its dual; (upper, lower) in P is a
    // cover (upper lessdot lower) of the dual.
    labels[cover] = alpha.rank(lab);
  }
  return DualUncrossing{P.n, dual,
                        ChainEdgeLabeling::from_edges(rt, std::move(labels), std::move(alpha))};
}

PipelineReport verify_uncrossing_pipeline(int n) {
  PipelineReport out{n, true, {}};
  auto timed = [&out](const std::string& name, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = fn();
    } catch (const PosetError& e) {
      rep.check = name;
      rep.add(kDefaultWitnessCap, e.code(), e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.stages.push_back({name, rep.pass, ms, std::move(rep)});
    out.ok = out.ok && out.stages.back().pass;
  };
  auto P = build_uncrossing(n);
  auto D = dual_uncrossing(P);
  timed("EC", [&] { return check_EC(D.labeling); });
  timed("UE", [&] { return check_UE(D.labeling); });
  timed("self-consistency", [&] { return check_self_consistency(D.labeling); });
  ChainAtomOrdering grao = ChainAtomOrdering::element_order(D.labeling.roots_ptr());
  timed("GRAO", [&] {
    grao = labeling_to_grao(D.labeling);
    return check_GRAO(grao);
  });
  ChainAtomOrdering rao = grao;
  timed("RAO", [&] {
    rao = reorder(grao);
    return check_RAO(rao);
  });
  ChainEdgeLabeling cl = D.labeling;
  timed("CL", [&] {
    cl = rao_to_cl(rao);
    return check_CL(cl);
  });
  timed("shelling", [&] {
    auto facets = order_complex_facets(*D.dual, false);
    return is_shelling(facets, chains_as_facet_order(facets, *D.dual, lex_chain_order(cl)));
  });
  return out;
}

}  // namespace shellkit
