#pragma once

#include <iosfwd>

#include "shellkit/atom_order.hpp"
#include "shellkit/labeling.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

/// Text formats. All files are line based; blank lines and lines starting
/// with '#' are ignored. Element names, labels and tokens are
/// whitespace-free words.
///
///   poset:        cover <lo> <hi>
///   edge labels:  label <lo> <hi> <token>        (optional alphabet line)
///   chain labels: chainlabel <e0> ... <ek> : <t1> ... <tk>
///   alphabet:     alphabet <t1> <t2> ...
///   atoms:        default element-order           (optional header)
///                 atoms <e0> ... <ek> : <a1> ... <at>
///   facets:       facet <v1> <v2> ...
///                 order <i1> <i2> ...             (optional, 0-based)

Poset parse_poset(std::istream& in);
void emit_poset(std::ostream& out, const Poset& p);

/// Edge labeling; an `alphabet` line inside the file switches from the
/// numeric default to that explicit order.
ChainEdgeLabeling parse_edge_labeling(std::istream& in, RootTreePtr rt);
void emit_edge_labeling(std::ostream& out, const ChainEdgeLabeling& L);

/// Chain labels, validated through validate_CE.
ChainEdgeLabeling parse_chain_labeling(std::istream& in, RootTreePtr rt);
void emit_chain_labeling(std::ostream& out, const ChainEdgeLabeling& L);

/// Atoms file: orders keyed by full root paths; roots not listed use
/// ElementOrder (the header documents that).
ChainAtomOrdering parse_atoms(std::istream& in, RootTreePtr rt);
void emit_atoms(std::ostream& out, const ChainAtomOrdering& C);

struct FacetFile {
  FacetList facets;
  std::vector<int> order;  // file order when no `order` line is present
};
FacetFile parse_facets(std::istream& in);
void emit_facets(std::ostream& out, const FacetList& f);

}  // namespace shellkit
