#ifndef COXREFL_COXETER_MATRIX_HPP_
#define COXREFL_COXETER_MATRIX_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxrefl {

// Largest finite order accepted by the text format.  Keeps trial division
// and the word engine within sane bounds.
inline constexpr int kMaxFiniteOrder = 1'000'000;

// Order of a product of two distinct generators: an odd integer >= 3, or
// infinite.  Infinity is a distinguished state, never a sentinel integer.
class Order {
 public:
  static Order infinite() { return Order(0, true); }

  // Throws std::invalid_argument unless m is odd, >= 3 and <= kMaxFiniteOrder.
  static Order finite(int m);

  bool is_finite() const { return !infinite_; }

  // Precondition: is_finite().
  int value() const;

  bool operator==(const Order& other) const = default;

 private:
  Order(int v, bool inf) : value_(v), infinite_(inf) {}
  int value_;
  bool infinite_;
};

// Presentation of a finitely generated odd-angled Coxeter group: the rank n
// and, for each unordered pair 1 <= i < j <= n, the order m_ij.  Unset pairs
// are infinite.  Generators are 1-based in the public interface.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(int rank);

  int rank() const { return rank_; }

  // i != j, both in 1..rank.
  Order order(int i, int j) const;
  void set_order(int i, int j, Order m);

  bool operator==(const CoxeterMatrix& other) const = default;

  // Compact single-line description, e.g. "rank 3: m12=3 m13=5 m23=inf".
  std::string describe() const;

 private:
  int pair_index(int i, int j) const;
  int rank_;
  std::vector<Order> orders_;  // upper triangle, row-major
};

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& message);
  int line;
  int column;
};

// Parses the line-oriented input format:
//   # comment
//   rank <n>
//   m <i> <j> <v>     with v an odd integer >= 3 or "inf"
// Omitted pairs default to inf.  Throws ParseError with 1-based position.
CoxeterMatrix parse_coxeter_matrix(std::string_view text);

// Serializes back to the input format (one "m i j v" line per finite pair).
std::string format_coxeter_matrix(const CoxeterMatrix& m);

// Convenience for tests and the CLI: rank-3 system with the three orders
// given as ints, 0 meaning infinite.
CoxeterMatrix triangle_system(int m12, int m13, int m23);

}  // namespace coxrefl

#endif
