#ifndef COXREFL_CRITERION_HPP_
#define COXREFL_CRITERION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coxrefl/divisibility.hpp"

namespace coxrefl {

enum class Answer { HasSubgroup, NoSubgroup };

// Why a connected diagram admits a finite-index reflection subgroup.
enum class ComponentReasonKind {
  SmallComponent,        // order 1 or 2
  SingleMultipleEdge,    // at most one edge labeled >= 5
  FiveFiveThreePattern,  // a (5,5,3) triangle, everything else simple
};

std::string to_string(ComponentReasonKind kind);
std::string to_string(Answer answer);

struct ComponentReason {
  ComponentReasonKind kind;
  std::vector<int> triple;  // the (5,5,3) vertices when kind is the pattern
};

struct ForbiddenSubdiagram {
  std::vector<int> vertices;  // 1-based in the diagram the verdict refers to
  DivisibilityDiagram diagram;
};

struct Verdict {
  Answer answer;
  // HasSubgroup: the witnessing component (index into connected_components
  // order, 0-based) and the matched type.
  std::optional<int> component_index;
  std::optional<ComponentReason> reason;
  // NoSubgroup: one minimal forbidden subdiagram per component, vertices in
  // the coordinates of the classified diagram.
  std::vector<ForbiddenSubdiagram> forbidden;
};

// Decides a connected diagram by the three-type characterization:
//   1. order <= 2;
//   2. at most one multiple edge;
//   3. a (5,5,3) triangle whose complement has only simple non-absent edges.
// Precondition: c connected.
Verdict classify_component(const DivisibilityDiagram& c);

// Whole systems: a free factor decides for the product, so the answer is the
// disjunction over connected components of the divisibility diagram.
Verdict classify(const CoxeterMatrix& system);
Verdict classify_diagram(const DivisibilityDiagram& d);

// First (by size, then lexicographic vertex list) connected induced
// subdiagram that classifies NoSubgroup while all of its proper connected
// subdiagrams classify HasSubgroup.  Empty when c itself has a subgroup.
// Precondition: c connected.
std::optional<std::vector<int>> find_minimal_forbidden(const DivisibilityDiagram& c);

struct CrossCheckReport {
  long long diagrams_checked = 0;
  long long disagreements = 0;
  std::vector<DivisibilityDiagram> first_disagreements;  // up to a handful
};

// Exhaustively compares classify_component against "contains a forbidden
// subdiagram" over every connected diagram of order <= max_rank with edge
// labels drawn from label_set (plus absent).  Any disagreement is a bug.
CrossCheckReport cross_check_classifiers(int max_rank,
                                         const std::vector<int>& label_set,
                                         long long budget = 200'000'000);

// The minimal forbidden diagrams themselves (deduplicated up to vertex
// relabeling) over the given label set, for documentation and tests.
std::vector<DivisibilityDiagram> minimal_forbidden_diagrams(
    int max_rank, const std::vector<int>& label_set);

}  // namespace coxrefl

#endif
