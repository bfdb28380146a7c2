#ifndef COXREFL_GEOREP_HPP_
#define COXREFL_GEOREP_HPP_

#include <span>
#include <vector>

#include "coxrefl/coxeter_matrix.hpp"
#include "coxrefl/word_engine.hpp"

namespace coxrefl {

// Dense rank x rank matrix of doubles, row-major.
class RepMatrix {
 public:
  RepMatrix(int n, double diagonal);
  int n() const { return n_; }
  double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  RepMatrix operator*(const RepMatrix& rhs) const;
  double max_abs_diff(const RepMatrix& rhs) const;

 private:
  int n_;
  std::vector<double> data_;
};

// Numeric oracle for element equality through the standard reflection
// representation: B(e_i, e_i) = 1, B(e_i, e_j) = -cos(pi / m_ij), and -1 for
// infinite m_ij.  Test-only by contract: nothing on a production code path
// may decide exact combinatorics from these floats.
class GeoRep {
 public:
  explicit GeoRep(const CoxeterMatrix& system);

  // Reflection s_i (1-based): v -> v - 2 B(e_i, v) e_i.
  const RepMatrix& generator_matrix(int i) const;

  // Ordered product of generator matrices over 1-based letters.
  RepMatrix word_matrix(std::span<const int> word) const;

  bool equal_numeric(std::span<const int> w, std::span<const int> v,
                     double tol = 1e-6) const;

  double bilinear(int i, int j) const;

 private:
  int rank_;
  std::vector<double> form_;          // B entries, row-major
  std::vector<RepMatrix> generators_;
};

}  // namespace coxrefl

#endif
