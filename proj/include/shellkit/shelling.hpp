#pragma once

#include <map>

#include "shellkit/checks.hpp"
#include "shellkit/labeling.hpp"

namespace shellkit {

/// A simplicial complex given by its facets over named vertices. Facets are
/// stored as sorted vertex-index sets in insertion order.
struct FacetList {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> facets;

  int vertex(const std::string& name);  // interns
  void add_facet(const std::vector<std::string>& verts);
};

/// Facets of the order complex of P (maximal chains). With `proper` the
/// bottom and top are stripped first; an empty proper part yields the empty
/// complex (no facets).
FacetList order_complex_facets(const Poset& p, bool proper);

/// Pairwise shelling criterion for the facets taken in the order given by
/// `order` (a permutation of facet indices): for each j and each i < j there
/// must be k < j with F_i cap F_j subseteq F_k cap F_j and
/// |F_k cap F_j| = |F_j| - 1. `jobs` > 1 scans the j loop in parallel.
/// Throws PosetError(NotPermutation).
CheckReport is_shelling(const FacetList& f, const std::vector<int>& order, int jobs = 1,
                        std::size_t witness_cap = kDefaultWitnessCap);

/// Positions of `chains` (maximal chains of L's poset) as facet order for
/// is_shelling over order_complex_facets(*, proper=false).
std::vector<int> chains_as_facet_order(const FacetList& f, const Poset& p,
                                       const std::vector<std::vector<int>>& chains);

/// Count of (topologically) descending maximal chains of [end(root), v]
/// under the root, bucketed by chain length. The length-0 chain of [u,u] and
/// every length-1 chain count as descending.
std::map<int, long long> descend_census(const ChainEdgeLabeling& L, int root, int v,
                                        bool topological);

/// Moebius number of [u,v] as the alternating sum over the census, rooted at
/// the lex-first root of u. Pre: L passes check_CL (plain) or
/// check_CC/check_topological_CL (topological); set `run_precheck` to have
/// this verified here (PosetError(CheckerPreconditionFailed) otherwise).
int mobius_via_descents(const ChainEdgeLabeling& L, int u, int v, bool topological,
                        bool run_precheck = false);

/// Dimension -> number of spheres: descending maximal chains of [0hat,1hat]
/// of length l reported at dimension l - 2.
std::map<int, long long> sphere_vector(const ChainEdgeLabeling& L, bool topological);

/// Reduced Euler characteristic of the complex generated by the facets.
long long reduced_euler(const FacetList& f);

/// Lex-first root of u under L: the root path with the smallest
/// (label sequence, element sequence).
int lex_first_root(const ChainEdgeLabeling& L, int u);

}  // namespace shellkit
