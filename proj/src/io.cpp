#include "shellkit/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace shellkit {
namespace {

// Yields the words of each meaningful line.
std::vector<std::vector<std::string>> lines_of(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> words;
    std::string w;
    while (ls >> w) words.push_back(w);
    if (words.empty() || words[0][0] == '#') continue;
    out.push_back(std::move(words));
  }
  return out;
}

[[noreturn]] void bad_line(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += w + " ";
  throw PosetError("ParseError", "unexpected line: " + s);
}

}  // namespace

Poset parse_poset(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& words : lines_of(in)) {
    if (words[0] != "cover" || words.size() != 3) bad_line(words);
    covers.emplace_back(words[1], words[2]);
  }
  return Poset::from_covers(covers);
}

void emit_poset(std::ostream& out, const Poset& p) {
  for (auto [u, v] : p.cover_pairs()) out << "cover " << p.name(u) << " " << p.name(v) << "\n";
}

ChainEdgeLabeling parse_edge_labeling(std::istream& in, RootTreePtr rt) {
  const Poset& p = rt->poset();
  LabelAlphabet alpha = LabelAlphabet::numeric();
  std::vector<std::tuple<std::string, std::string, std::string>> raw;
  for (const auto& words : lines_of(in)) {
    if (words[0] == "alphabet") {
      alpha = LabelAlphabet::explicit_order({words.begin() + 1, words.end()});
    } else if (words[0] == "label" && words.size() == 4) {
      raw.emplace_back(words[1], words[2], words[3]);
    } else {
      bad_line(words);
    }
  }
  std::map<std::pair<int, int>, int> labels;
  for (const auto& [lo, hi, tok] : raw) labels[{p.index(lo), p.index(hi)}] = alpha.rank(tok);
  return ChainEdgeLabeling::from_edges(std::move(rt), std::move(labels), std::move(alpha));
}

void emit_edge_labeling(std::ostream& out, const ChainEdgeLabeling& L) {
  const Poset& p = L.poset();
  const auto& alpha = L.alphabet();
  if (!alpha.is_numeric()) {
    out << "alphabet";
    for (const auto& t : alpha.tokens()) out << " " << t;
    out << "\n";
  }
  for (const auto& [cover, rank] : L.edge_labels())
    out << "label " << p.name(cover.first) << " " << p.name(cover.second) << " "
        << alpha.token(rank) << "\n";
}

ChainEdgeLabeling parse_chain_labeling(std::istream& in, RootTreePtr rt) {
  const Poset& p = rt->poset();
  LabelAlphabet alpha = LabelAlphabet::numeric();
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
  for (const auto& words : lines_of(in)) {
    if (words[0] == "alphabet") {
      alpha = LabelAlphabet::explicit_order({words.begin() + 1, words.end()});
      continue;
    }
    if (words[0] != "chainlabel") bad_line(words);
    auto colon = std::find(words.begin(), words.end(), ":");
    if (colon == words.end()) bad_line(words);
    raw.emplace_back(std::vector<std::string>(words.begin() + 1, colon),
                     std::vector<std::string>(colon + 1, words.end()));
  }
  std::map<std::vector<int>, std::vector<int>> per_chain;
  for (const auto& [chain, toks] : raw) {
    std::vector<int> c, t;
    for (const auto& e : chain) c.push_back(p.index(e));
    for (const auto& tok : toks) t.push_back(alpha.rank(tok));
    per_chain[std::move(c)] = std::move(t);
  }
  return validate_CE(std::move(rt), per_chain, std::move(alpha));
}

void emit_chain_labeling(std::ostream& out, const ChainEdgeLabeling& L) {
  const Poset& p = L.poset();
  const auto& alpha = L.alphabet();
  if (!alpha.is_numeric()) {
    out << "alphabet";
    for (const auto& t : alpha.tokens()) out << " " << t;
    out << "\n";
  }
  for (const auto& chain : p.maximal_chains()) {
    out << "chainlabel";
    for (int e : chain) out << " " << p.name(e);
    out << " :";
    for (int l : L.label_sequence(0, chain)) out << " " << alpha.token(l);
    out << "\n";
  }
}

ChainAtomOrdering parse_atoms(std::istream& in, RootTreePtr rt) {
  const Poset& p = rt->poset();
  ChainAtomOrdering cao = ChainAtomOrdering::element_order(rt);
  for (const auto& words : lines_of(in)) {
    if (words[0] == "default") {
      if (words.size() != 2 || words[1] != "element-order") bad_line(words);
      continue;
    }
    if (words[0] != "atoms") bad_line(words);
    auto colon = std::find(words.begin(), words.end(), ":");
    if (colon == words.end()) bad_line(words);
    RootPath path;
    for (auto it = words.begin() + 1; it != colon; ++it) path.push_back(p.index(*it));
    std::vector<int> ord;
    for (auto it = colon + 1; it != words.end(); ++it) ord.push_back(p.index(*it));
    cao.set_order(rt->locate(path), std::move(ord));
  }
  return cao;
}

void emit_atoms(std::ostream& out, const ChainAtomOrdering& C) {
  const Poset& p = C.poset();
  out << "default element-order\n";
  for (int r = 0; r < C.roots().count(); ++r) {
    if (C.order(r) == p.up(C.roots().elem(r))) continue;  // ElementOrder default
    out << "atoms";
    for (int e : C.roots().path(r)) out << " " << p.name(e);
    out << " :";
    for (int a : C.order(r)) out << " " << p.name(a);
    out << "\n";
  }
}

FacetFile parse_facets(std::istream& in) {
  FacetFile f;
  for (const auto& words : lines_of(in)) {
    if (words[0] == "facet") {
      f.facets.add_facet({words.begin() + 1, words.end()});
    } else if (words[0] == "order") {
      for (auto it = words.begin() + 1; it != words.end(); ++it) f.order.push_back(std::stoi(*it));
    } else {
      bad_line(words);
    }
  }
  if (f.order.empty()) {
    for (std::size_t i = 0; i < f.facets.facets.size(); ++i) f.order.push_back(static_cast<int>(i));
    return f;
  }
  std::vector<bool> seen(f.facets.facets.size(), false);
  if (f.order.size() != f.facets.facets.size())
    throw PosetError("NotPermutation", "order line must list every facet exactly once");
  for (int i : f.order) {
    if (i < 0 || i >= static_cast<int>(seen.size()) || seen[i])
      throw PosetError("NotPermutation", "order line must list every facet exactly once");
    seen[i] = true;
  }
  return f;
}

void emit_facets(std::ostream& out, const FacetList& f) {
  for (const auto& facet : f.facets) {
    out << "facet";
    for (int v : facet) out << " " << f.vertices[v];
    out << "\n";
  }
}

}  // namespace shellkit
