#include "coxrefl/georep.hpp"

#include <cmath>
#include <numbers>

namespace coxrefl {

RepMatrix::RepMatrix(int n, double diagonal) : n_(n) {
  data_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) at(i, i) = diagonal;
}

RepMatrix RepMatrix::operator*(const RepMatrix& rhs) const {
  RepMatrix out(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      double a = at(i, k);
      if (a == 0.0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

double RepMatrix::max_abs_diff(const RepMatrix& rhs) const {
  double worst = 0.0;
  for (std::size_t t = 0; t < data_.size(); ++t)
    worst = std::max(worst, std::abs(data_[t] - rhs.data_[t]));
  return worst;
}

GeoRep::GeoRep(const CoxeterMatrix& system) : rank_(system.rank()) {
  form_.assign(static_cast<std::size_t>(rank_) * rank_, 0.0);
  for (int i = 1; i <= rank_; ++i)
    for (int j = 1; j <= rank_; ++j) {
      double value;
      if (i == j) {
        value = 1.0;
      } else {
        Order m = system.order(i, j);
        value = m.is_finite() ? -std::cos(std::numbers::pi / m.value()) : -1.0;
      }
      form_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)] = value;
    }
  generators_.reserve(rank_);
  for (int i = 0; i < rank_; ++i) {
    RepMatrix m(rank_, 1.0);
    for (int j = 0; j < rank_; ++j)
      m.at(i, j) -= 2.0 * form_[static_cast<std::size_t>(i) * rank_ + j];
    generators_.push_back(std::move(m));
  }
}

double GeoRep::bilinear(int i, int j) const {
  return form_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)];
}

const RepMatrix& GeoRep::generator_matrix(int i) const {
  return generators_.at(static_cast<std::size_t>(i - 1));
}

RepMatrix GeoRep::word_matrix(std::span<const int> word) const {
  RepMatrix acc(rank_, 1.0);
  for (int s : word) acc = acc * generator_matrix(s);
  return acc;
}

bool GeoRep::equal_numeric(std::span<const int> w, std::span<const int> v,
                           double tol) const {
  return word_matrix(w).max_abs_diff(word_matrix(v)) <= tol;
}

}  // namespace coxrefl
