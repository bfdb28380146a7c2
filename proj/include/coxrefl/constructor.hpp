#ifndef COXREFL_CONSTRUCTOR_HPP_
#define COXREFL_CONSTRUCTOR_HPP_

#include <variant>

#include "coxrefl/chambers.hpp"
#include "coxrefl/criterion.hpp"
#include "coxrefl/words.hpp"

namespace coxrefl {

// Which construction produced a certificate.
enum class Provenance {
  Triangle553,         // rank-3 (3k,5k',5k'') rotation construction
  SingleMultipleEdge,  // dihedral residue plus attached neighbors
  Extended553,         // 553 core lifted through simple edges
  FreeProductLift,     // component certificate reread in the full group
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& tag);

// How the tiling side of verification was established.  Full develops the
// reflection subgroup's translates over a ball of the reported radius;
// LocalOnly falls back to the exact adjacent-copy disjointness check when
// that ball exceeds the node budget.
enum class TilingMode { Full, LocalOnly };

struct VerificationSummary {
  bool has_identity = false;
  bool connected = false;
  bool convex = false;
  bool polytope = false;
  bool tiling_ok = false;
  TilingMode tiling_mode = TilingMode::Full;
  int tiling_radius = 0;
  std::string failure;  // empty when verified

  bool verified() const {
    return has_identity && connected && convex && polytope && tiling_ok;
  }
};

struct ConstructOptions {
  // Ball size the internal tiling verification may develop before falling
  // back to the local disjointness check.  The CLI verify command uses its
  // own, larger default.
  std::size_t tiling_node_budget = 30'000;
  int length_cap = 64;
};

// A machine-checked fundamental domain: the subgroup generated by the
// bounding reflections has index exactly |chambers|.
struct Certificate {
  CoxeterMatrix system{1};
  std::vector<Word> chambers;    // canonical order, contains e
  std::vector<Word> generators;  // bounding reflections, canonical order
  int index = 0;
  Provenance provenance = Provenance::SingleMultipleEdge;
  VerificationSummary verification;
};

// A construction that fails its own verification is a bug, not a user error.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The construction's hypotheses do not hold for the given system.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Runs the full verification battery on an arbitrary chamber set.
VerificationSummary verify_chamber_set(WordEngine& engine, const ChamberSet& set,
                                       const ConstructOptions& options);

// Rank-3 systems with m12 = 3 k12, m13 = 5 k13, m23 = 5 k23 (k13, k23 coprime
// to 6), up to relabeling: the union of 3 k12 rotated copies of a fixed
// 6-chamber patch, 18 k12 chambers in total.
Certificate construct_553(const CoxeterMatrix& system,
                          const ConstructOptions& options = {});

// Systems whose divisibility diagram has at most one multiple edge.  Glues
// the full dihedral residue of the base edge with the neighbors of all its
// even-length chambers.  Degenerate cases: rank 1 and edgeless systems give
// the two-chamber domain {e, s}; a finite dihedral rank-2 system gives the
// half-cycle of m chambers.
Certificate construct_single_multiple_edge(const CoxeterMatrix& system,
                                           const ConstructOptions& options = {});

// Connected diagrams containing a (5,5,3) triangle with every other edge
// simple: the rank-3 construction on the triangle's special subgroup,
// extended by the neighbors of its even-length chambers.
Certificate construct_553_extended(const CoxeterMatrix& system,
                                   const ConstructOptions& options = {});

// Reinterprets a certificate for the special subgroup on component_vertices
// inside the full system (same letters through the vertex map) and
// re-verifies there.  The index is preserved.
Certificate construct_free_product_lift(const CoxeterMatrix& system,
                                        const Certificate& component_certificate,
                                        const std::vector<int>& component_vertices,
                                        const ConstructOptions& options = {});

using ConstructResult = std::variant<Certificate, Verdict>;

// Dispatcher: classifies the system and routes the witnessing component to
// its construction, lifting into the full group when the component is proper.
ConstructResult construct(const CoxeterMatrix& system,
                          const ConstructOptions& options = {});

// Boundary angle data of a certificate: one (arc size, order) pair per
// boundary codimension-2 face, canonically ordered.  Interior (full) residues
// are excluded.
std::vector<std::pair<int, int>> boundary_arc_profile(WordEngine& engine,
                                                      const ChamberSet& set);

}  // namespace coxrefl

#endif
