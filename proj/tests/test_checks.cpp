#include "doctest.h"
#include "shellkit/checks.hpp"
#include "shellkit/fixtures.hpp"

using namespace shellkit;

namespace {

ChainEdgeLabeling edge_labeling(PosetPtr p, const std::vector<std::tuple<const char*, const char*, int>>& labels) {
  auto rt = RootTree::build(p);
  std::map<std::pair<int, int>, int> ranks;
  for (auto [lo, hi, v] : labels) ranks[{p->index(lo), p->index(hi)}] = v;
  return ChainEdgeLabeling::from_edges(rt, std::move(ranks), LabelAlphabet::numeric());
}

PosetPtr diamond() {
  return std::make_shared<const Poset>(
      Poset::from_covers({{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

}  // namespace

TEST_CASE("classify_chain on the diamond") {
  auto L = edge_labeling(diamond(), {{"0", "a", 1}, {"a", "1", 2}, {"0", "b", 2}, {"b", "1", 1}});
  const Poset& p = L.poset();
  std::vector<int> via_a{p.index("0"), p.index("a"), p.index("1")};
  std::vector<int> via_b{p.index("0"), p.index("b"), p.index("1")};
  CHECK(classify_chain(L, 0, via_a, false) == ChainClass::Ascending);
  CHECK(classify_chain(L, 0, via_b, false) == ChainClass::Descending);
  CHECK(is_descending(L, 0, via_b, false));
  // A single cover is both; classify reports Ascending.
  std::vector<int> one{p.index("0"), p.index("a")};
  CHECK(classify_chain(L, 0, one, false) == ChainClass::Ascending);
  CHECK(is_descending(L, 0, one, false));
}

TEST_CASE("EL on the diamond and B_3") {
  auto L = edge_labeling(diamond(), {{"0", "a", 1}, {"a", "1", 2}, {"0", "b", 2}, {"b", "1", 1}});
  CHECK(check_EL(L).pass);
  auto b3 = get_fixture("b3");
  CHECK(check_EL(*b3.labeling).pass);
  // Constant labels: no strictly ascending chain in [0,1].
  auto bad = edge_labeling(diamond(), {{"0", "a", 1}, {"a", "1", 1}, {"0", "b", 1}, {"b", "1", 1}});
  auto rep = check_EL(bad);
  CHECK(!rep.pass);
  CHECK(rep.witnesses[0].reason == "NoAscendingChain");
}

TEST_CASE("EL failure modes carry witnesses") {
  // Both chains ascending.
  auto multi = edge_labeling(diamond(), {{"0", "a", 1}, {"a", "1", 2}, {"0", "b", 1}, {"b", "1", 2}});
  auto rep = check_EL(multi);
  CHECK(!rep.pass);
  CHECK(rep.witnesses[0].reason == "MultipleAscendingChains");
  // Unique ascending chain but not lex-first: (2,3) ascending vs (1,9).
  auto not_first =
      edge_labeling(diamond(), {{"0", "a", 2}, {"a", "1", 3}, {"0", "b", 1}, {"b", "1", 9}});
  rep = check_EL(not_first);
  CHECK(!rep.pass);
  CHECK(rep.witnesses[0].reason == "MultipleAscendingChains");
}

TEST_CASE("EL not lex-first witness") {
  // Ascending (2,3) unique; other chain (1,0) not ascending but lex-smaller.
  auto L = edge_labeling(diamond(), {{"0", "a", 2}, {"a", "1", 3}, {"0", "b", 1}, {"b", "1", 0}});
  auto rep = check_EL(L);
  CHECK(!rep.pass);
  CHECK(rep.witnesses[0].reason == "AscendingChainNotLexFirst");
}

TEST_CASE("topological ascents on nonue-left") {
  auto f = get_fixture("nonue-left");
  const ChainEdgeLabeling& L = *f.labeling;
  const Poset& p = *f.poset;
  int O = p.index("0"), A = p.index("a"), B = p.index("b"), X = p.index("x"), Y = p.index("y");
  CHECK(is_topological_ascent(L, 0, A, X));     // (1,1) beats (1,2)
  CHECK(!is_topological_ascent(L, 0, B, X));    // (1,2) loses to (1,1)
  CHECK(is_topological_ascent(L, 0, B, Y));     // (1,3) beats (1,4)
  CHECK(!is_topological_ascent(L, 0, A, Y));
}

TEST_CASE("EC verdicts on the nonue triple") {
  for (const char* name : {"nonue-left", "nonue-middle", "nonue-right"}) {
    auto f = get_fixture(name);
    CHECK(check_EC(*f.labeling).pass);
  }
}

TEST_CASE("EC rejects duplicate label sequences") {
  // Two chains with identical sequences (1,1).
  auto L = edge_labeling(diamond(), {{"0", "a", 1}, {"a", "1", 1}, {"0", "b", 1}, {"b", "1", 1}});
  auto rep = check_EC(L);
  CHECK(!rep.pass);
  bool dup = false;
  for (const auto& w : rep.witnesses) dup = dup || w.reason == "DuplicateLabelSequence";
  CHECK(dup);
}

TEST_CASE("UE verdicts on the nonue triple") {
  auto left = get_fixture("nonue-left");
  auto rep = check_UE(*left.labeling);
  CHECK(!rep.pass);
  CHECK(rep.witnesses[0].reason == "MinimalLabelRepeated");
  CHECK(!check_UE(*get_fixture("nonue-middle").labeling).pass);
  CHECK(check_UE(*get_fixture("nonue-right").labeling).pass);
}

TEST_CASE("self-consistency verdicts on the nonue triple") {
  auto left = check_self_consistency(*get_fixture("nonue-left").labeling);
  CHECK(!left.pass);
  CHECK(left.witnesses[0].reason == "InconsistentAtomOrder");
  CHECK(check_self_consistency(*get_fixture("nonue-middle").labeling).pass);
  CHECK(check_self_consistency(*get_fixture("nonue-right").labeling).pass);
}

TEST_CASE("UE together with unique lex-first chains implies self-consistency") {
  // Property over random labelings: whenever UE passes and lex-first chains
  // are unique, self-consistency passes.
  std::mt19937 rng(23);
  int observed = 0;
  for (int t = 0; t < 60; ++t) {
    auto p = random_bounded_poset(rng, 8);
    auto rt = RootTree::build(p);
    std::map<std::pair<int, int>, int> labels;
    std::uniform_int_distribution<int> lab(1, 6);
    for (auto cover : p->cover_pairs()) labels[cover] = lab(rng);
    auto L = ChainEdgeLabeling::from_edges(rt, labels, LabelAlphabet::numeric());
    if (!check_UE(L).pass) continue;
    ++observed;
    CHECK(check_self_consistency(L).pass);
  }
  CHECK(observed >= 5);
}

TEST_CASE("CC passes but differs from CL on topological ascents") {
  // Rank-2 example: lone ascent-free chains still satisfy CC through the
  // topological comparison while plain CL fails.
  auto p = std::make_shared<const Poset>(Poset::from_covers(
      {{"0", "x1"}, {"0", "x2"}, {"0", "x3"}, {"x1", "1"}, {"x2", "1"}, {"x3", "1"}}));
  auto L = edge_labeling(
      p, {{"0", "x1", 1}, {"x1", "1", 2}, {"0", "x2", 2}, {"x2", "1", 1}, {"0", "x3", 2},
          {"x3", "1", 3}});
  // Chains: (1,2) (2,1) (2,3): unique ascending (1,2)... but (2,3) also
  // ascending, so CL fails while the topological comparison disqualifies it.
  CHECK(!check_CL(L).pass);
  CHECK(check_topological_CL(L).pass);
  CHECK(check_CC(L).pass);
}

TEST_CASE("topological CL admits self-inconsistent labelings (nonue-left)") {
  auto f = get_fixture("nonue-left");
  CHECK(check_topological_CL(*f.labeling).pass);
  CHECK(!check_self_consistency(*f.labeling).pass);
}

TEST_CASE("CC-style checks fail on prefix sequences in non-graded intervals") {
  // Non-graded [0,1]: a length-2 chain whose sequence prefixes a length-3
  // one.
  auto p = std::make_shared<const Poset>(
      Poset::from_covers({{"0", "a"}, {"a", "1"}, {"0", "b"}, {"b", "c"}, {"c", "1"}}));
  auto L = edge_labeling(p, {{"0", "a", 1}, {"a", "1", 2}, {"0", "b", 1}, {"b", "c", 2},
                             {"c", "1", 3}});
  auto rep = check_CC(L);
  CHECK(!rep.pass);
  bool prefix = false;
  for (const auto& w : rep.witnesses) prefix = prefix || w.reason == "PrefixLabelSequence";
  CHECK(prefix);
}

TEST_CASE("EL implies its chain embedding passes CL") {
  for (const char* name : {"b3", "pi3", "j-v3", "nonue-right"}) {
    auto f = get_fixture(name);
    if (!check_EL(*f.labeling).pass) continue;
    CHECK(check_CL(*f.labeling).pass);
  }
}

TEST_CASE("witness cap bounds retained witnesses but counts all failures") {
  auto left = get_fixture("nonue-left");
  auto rep = check_UE(*left.labeling, 1);
  CHECK(!rep.pass);
  CHECK(rep.witnesses.size() == 1);
  CHECK(rep.total_failures >= 2);
}
