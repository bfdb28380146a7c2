#ifndef COXREFL_DIVISIBILITY_HPP_
#define COXREFL_DIVISIBILITY_HPP_

#include <optional>
#include <vector>

#include "coxrefl/coxeter_matrix.hpp"

namespace coxrefl {

// Smallest prime dividing n.  Precondition: n >= 3.
int least_prime_divisor(int n);

// Graph on the generators with each finite pair carrying the least prime
// divisor of its order; infinite pairs carry no edge.  An edge labeled 3 is
// "simple", a label >= 5 is "multiple".  Vertices are 1-based.
class DivisibilityDiagram {
 public:
  explicit DivisibilityDiagram(int order);

  static DivisibilityDiagram of(const CoxeterMatrix& m);

  int order() const { return order_; }
  std::optional<int> label(int i, int j) const;
  void set_label(int i, int j, std::optional<int> prime);

  bool has_edge(int i, int j) const { return label(i, j).has_value(); }
  bool simple_edge(int i, int j) const;
  bool multiple_edge(int i, int j) const;
  int multiple_edge_count() const;
  int edge_count() const;

  bool connected() const;

  // Induced subdiagram on the given 1-based vertices (must be sorted,
  // distinct).  Vertex k of the result corresponds to vertices[k-1].
  DivisibilityDiagram induced(const std::vector<int>& vertices) const;

  bool operator==(const DivisibilityDiagram& other) const = default;

 private:
  int pair_index(int i, int j) const;
  int order_;
  std::vector<std::optional<int>> labels_;
};

struct DiagramComponent {
  std::vector<int> vertices;  // sorted, 1-based in the parent diagram
  DivisibilityDiagram diagram;
};

// Partition into maximal connected pieces, ordered by smallest vertex.
std::vector<DiagramComponent> connected_components(const DivisibilityDiagram& d);

// Streams every vertex subset of size <= max_order whose induced subdiagram
// is connected, each exactly once.  Order: by size, then lexicographically on
// the sorted vertex list.
class ConnectedSubdiagramEnumerator {
 public:
  ConnectedSubdiagramEnumerator(const DivisibilityDiagram& d, int max_order);

  // Returns the next subset, or nullopt when exhausted.
  std::optional<std::vector<int>> next();

 private:
  bool advance();
  const DivisibilityDiagram& diagram_;
  int max_order_;
  int size_;                  // current subset size
  std::vector<int> current_;  // current size_-subset (1-based, increasing)
  bool fresh_;                // current_ not yet emitted
};

// Convenience eager form; fine for the small ranks used in practice.
std::vector<std::vector<int>> connected_subdiagrams(const DivisibilityDiagram& d,
                                                    int max_order);

}  // namespace coxrefl

#endif
