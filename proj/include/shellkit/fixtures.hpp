#pragma once

#include <optional>
#include <random>

#include "shellkit/atom_order.hpp"
#include "shellkit/labeling.hpp"

namespace shellkit {

/// A named example: a poset plus (optionally) an edge labeling and/or a
/// chain-atom ordering, and the verdict map the checkers reproduce on it.
/// Expected keys are lowercase check names ("ec", "ue", "sc", "grao", ...).
struct Fixture {
  std::string name;
  PosetPtr poset;
  RootTreePtr roots;
  std::optional<ChainEdgeLabeling> labeling;
  std::optional<ChainAtomOrdering> ordering;
  std::map<std::string, bool> expected;
};

/// Names: graoex-left, graoex-right, figure2-left, figure2-right,
/// nonue-left, nonue-middle, nonue-right, disjoint-chains, b2, b3, b4,
/// pi3, pi4, j-chain3, j-v3.
std::vector<std::string> fixture_names();
Fixture get_fixture(const std::string& name);

/// Subsets of {1..n} ordered by inclusion, labeled by the inserted element.
Fixture boolean_lattice(int n);
/// Set partitions of {1..n} by refinement, merges labeled
/// max(min B1, min B2).
Fixture partition_lattice(int n);
/// Lattice of order ideals of the strict order `less` on {1..k}, covers
/// labeled by the inserted element, alphabet ordered by a linear extension.
Fixture distributive_from_poset(int k, const std::vector<std::pair<int, int>>& less,
                                const std::string& name = "j");

/// Every strict partial order on {1..k} (as full less-than pair lists),
/// enumerated deterministically.
std::vector<std::vector<std::pair<int, int>>> all_strict_orders(int k);

/// Random bounded poset with at most max_elems elements: element 1 is forced
/// below and element max below everything else, the rest of the relation is
/// sampled and closed transitively.
PosetPtr random_bounded_poset(std::mt19937& rng, int max_elems);

}  // namespace shellkit
