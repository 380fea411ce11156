#pragma once

#include "shellkit/checks.hpp"
#include "shellkit/labeling.hpp"

namespace shellkit {

/// A perfect matching of {1..2n} written as a strand word: position i holds
/// the strand number of the pairing covering i, with strands numbered by
/// first occurrence (so the word is canonical, e.g. "123312").
using StrandWord = std::vector<int>;

std::string word_string(const StrandWord& w);
StrandWord word_from_string(const std::string& s);
/// Renumbers strands by first occurrence.
StrandWord canonicalize(const StrandWord& w);

/// All canonical strand words on 2n letters, in the deterministic order that
/// pairs the smallest open position with each later position in turn.
std::vector<StrandWord> enumerate_matchings(int n);

/// Number of interleaving strand pairs (pattern i j i j).
int crossing_number(const StrandWord& w);

/// Both resolutions of the crossing between interleaving strands i < j (by
/// the numbering of w): first the nested one, labeled (i,j), then the
/// side-by-side one, labeled (j,i). Throws PosetError(NotCrossing) when the
/// strands do not interleave.
struct Uncrossed {
  StrandWord nested;        // pattern i j j i, label (i,j)
  StrandWord side_by_side;  // pattern i i j j, label (j,i)
};
Uncrossed uncross(const StrandWord& w, int i, int j);

/// Label token of a downward cover of the uncrossing poset: "a:i,j" for an
/// ascending pair (i < j), "d:i,j" for a descending pair (i > j), "L" on
/// covers of the adjoined bottom.
std::string uncrossing_label_token(int first, int second);

/// Rank of a label token in the dual EC-labeling order: ascending pairs in
/// lexicographic order, then L, then descending pairs in reverse
/// lexicographic order.
int uncrossing_label_rank(const std::string& token, int n);
LabelAlphabet uncrossing_alphabet(int n);

/// The uncrossing poset P_n: all matchings on 2n points ordered so that
/// uncrossing moves down, with an adjoined bottom "0". Ranks are
/// crossing_number + 1 (bottom at 0); covers are the uncross results that
/// drop the crossing number by exactly one.
struct UncrossingPoset {
  int n;
  PosetPtr poset;
  /// Labels on the covers of the dual poset (top-down covers of P_n).
  std::map<std::pair<int, int>, std::string> down_labels;  // keyed by dual cover (upper, lower)
};
UncrossingPoset build_uncrossing(int n);

/// Dual poset of P_n with its EC edge labeling.
struct DualUncrossing {
  int n;
  PosetPtr dual;
  ChainEdgeLabeling labeling;
};
DualUncrossing dual_uncrossing(const UncrossingPoset& P);

/// Runs the whole pipeline on P_n*: EC, UE, self-consistency, derived GRAO,
/// reorder to RAO, RAO-to-CL, and the lexicographic shelling of the order
/// complex. Stage reports carry wall-clock milliseconds.
struct PipelineStage {
  std::string name;
  bool pass;
  double ms;
  CheckReport report;
};
struct PipelineReport {
  int n;
  bool ok;
  std::vector<PipelineStage> stages;
};
PipelineReport verify_uncrossing_pipeline(int n);

}  // namespace shellkit
