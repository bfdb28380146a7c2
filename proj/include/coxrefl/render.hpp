#ifndef COXREFL_RENDER_HPP_
#define COXREFL_RENDER_HPP_

#include <array>
#include <string>

#include "coxrefl/words.hpp"

namespace coxrefl {

enum class SceneModel { PoincareDisk, Euclidean };

struct SceneParams {
  SceneModel model = SceneModel::PoincareDisk;
  int depth = 4;                 // draw chambers of word length <= depth
  std::vector<Word> highlight;   // chambers to fill
  int canvas = 800;              // pixel square
};

// Model demanded by the curvature 1/m12 + 1/m13 + 1/m23 (exact rational
// comparison; 1/inf = 0): sum < 1 needs the disk, sum = 1 the plane.  Throws
// on rank != 3.
SceneModel rank3_model(const CoxeterMatrix& system);

// Interior angles of the base triangle as actually drawn, measured from the
// constructed mirror geometry, in the order (pair 1-2, pair 1-3, pair 2-3).
std::array<double, 3> rank3_base_angles(const CoxeterMatrix& system);

// Deterministic SVG of the rank-3 tessellation: byte-identical output for
// identical inputs (floats fixed at 9 significant digits).  Highlighted
// chambers are filled; ideal vertices sit on the boundary circle.
std::string render_rank3(const CoxeterMatrix& system, const SceneParams& params);

}  // namespace coxrefl

#endif
