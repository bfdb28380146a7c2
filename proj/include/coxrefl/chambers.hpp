#ifndef COXREFL_CHAMBERS_HPP_
#define COXREFL_CHAMBERS_HPP_

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxrefl/word_engine.hpp"

namespace coxrefl {

// A reflection t = w s w^{-1}, kept with its decomposition.  The element has
// odd length and squares to the identity.
struct Reflection {
  Elt word;
  Gen core;        // 0-based generator index
  Elt conjugator;  // w
};

// A finite set of chambers (group elements) holding a candidate convex
// polytope.  Members are kept sorted by (length, ShortLex word), duplicates
// removed; whether the set contains the identity or is connected is checked
// by the verification routines, not assumed here.
class ChamberSet {
 public:
  ChamberSet() = default;
  ChamberSet(WordEngine& engine, std::vector<Elt> members);

  const std::vector<Elt>& members() const { return members_; }
  bool contains(Elt e) const { return index_.find(e) != index_.end(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int max_length() const { return max_length_; }
  bool contains_identity() const { return contains(0); }

  bool operator==(const ChamberSet& other) const {
    return members_ == other.members_;
  }

 private:
  std::vector<Elt> members_;
  std::unordered_set<Elt> index_;
  int max_length_ = 0;
};

struct RadiusTooSmall : std::invalid_argument {
  RadiusTooSmall(int given, int needed)
      : std::invalid_argument("radius " + std::to_string(given) +
                              " too small; this check needs at least " +
                              std::to_string(needed)),
        given(given),
        needed(needed) {}
  int given;
  int needed;
};

// Sorts elements by (length, ShortLex word).
void sort_canonical(WordEngine& engine, std::vector<Elt>& elements);

// All elements of length <= radius, canonically ordered.
std::vector<Elt> ball(WordEngine& engine, int radius);

// Same with a node budget; nullopt when the budget is hit.
std::optional<std::vector<Elt>> ball_limited(WordEngine& engine, int radius,
                                             std::size_t max_nodes);

// The rank neighbors w s_1 .. w s_n with 1-based generator indices.
std::vector<std::pair<int, Elt>> neighbors(WordEngine& engine, Elt w);

// The wall separating the chambers of w and w*s (1-based s).
Reflection wall_between(WordEngine& engine, Elt w, int s);

// Chambers around one rank-2 residue (coset of <s_i, s_j>), i < j 1-based.
struct ResidueArc {
  int i = 0, j = 0;
  Elt base = 0;                // minimal-length coset representative
  std::vector<Elt> cycle;      // all 2m residue chambers, walk order
  std::vector<Elt> arc_members;  // members of the probed set on the cycle
  int residue_size = 0;        // 2 m_ij
  bool full = false;           // every residue chamber belongs to the set
  bool contiguous = false;     // members form one circular block
};

// Precondition: m_ij finite (throws std::invalid_argument otherwise) and w a
// member of the set.  The cycle is walked from the minimal representative,
// stepping with the smaller generator first.
ResidueArc residue_arc(WordEngine& engine, const ChamberSet& set, Elt w, int i,
                       int j);

struct ConvexityReport {
  bool convex = false;
  // A chamber outside the set lying on a geodesic between two members.
  std::optional<Elt> counterexample;
};

// Metric-betweenness convexity: every chamber on a geodesic between two
// members belongs to the set.  Checked through the equivalent local facet
// condition (each first step of each geodesic between members stays inside),
// so no ambient ball is materialized; search_radius is validated against
// 2 * max_length as the declared search envelope.
ConvexityReport is_convex(WordEngine& engine, const ChamberSet& set,
                          int search_radius);

struct ArcViolation {
  Elt member;
  int i, j;
  int arc_size;
  int order;        // m_ij
  bool contiguous;  // false when the arc is split around the cycle
};

struct PolytopeReport {
  bool ok = false;
  std::vector<ArcViolation> violations;
};

// A convex set is a Coxeter polytope iff for every finite pair the residue
// arc through each member is the full residue or a contiguous arc whose size
// divides m_ij.  Convexity is a precondition and is not re-checked here.
PolytopeReport is_coxeter_polytope(WordEngine& engine, const ChamberSet& set);

// Walls crossed when leaving the set, deduplicated, sorted canonically.
// These generate the reflection subgroup the set is a fundamental domain of.
std::vector<Reflection> bounding_reflections(WordEngine& engine,
                                             const ChamberSet& set);

struct TilingReport {
  int index = 0;
  bool covered = false;
  bool overlap = false;
  bool truncated = false;  // node budget hit before the ball was settled
  std::size_t ball_size = 0;
  std::size_t translate_count = 0;
  std::optional<Elt> uncovered_witness;
  std::optional<Elt> overlap_witness;
  bool ok() const { return covered && !overlap && !truncated; }
};

// Develops translates v * I over the subgroup generated by the bounding
// reflections and checks that they partition the ball of the given radius.
// Rejects radius < 2 * max_length(set).
TilingReport verify_tiling(WordEngine& engine, const ChamberSet& set,
                           int radius, std::size_t node_budget = 2'000'000);

struct LocalTilingReport {
  bool ok = false;
  std::optional<Elt> reflection_witness;  // t with t*I meeting I
  std::optional<Elt> chamber_witness;
};

// Exact first-shell tiling check: no reflected copy t * I of the set across
// one of its own walls meets the set.  Used when the full ball development
// is out of budget; every chamber adjacent to the set is covered by the copy
// across the shared wall by construction, so disjointness is the content.
LocalTilingReport adjacent_translates_disjoint(WordEngine& engine,
                                               const ChamberSet& set);

// Is the set connected in the Cayley graph?
bool is_connected(WordEngine& engine, const ChamberSet& set);

// Half-space form of convexity used as a cross-check: members of
// ball(max_length) lying on the identity side of every bounding wall.
std::vector<Elt> halfspace_hull(WordEngine& engine, const ChamberSet& set);

struct SearchReport {
  std::vector<ChamberSet> found;
  bool complete = false;
  std::size_t expansions = 0;
};

// Enumerates connected chamber sets containing the identity with
// 2 <= size <= max_size inside ball(radius) and returns those passing the
// convexity and Coxeter-polytope checks, in deterministic order.  Candidates
// whose arc defects can no longer change inside the ball are pruned.
SearchReport search_coxeter_polytopes(WordEngine& engine, int max_size,
                                      int radius,
                                      std::size_t node_budget = 10'000'000);

}  // namespace coxrefl

#endif
