#include "coxrefl/divisibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxrefl {

int least_prime_divisor(int n) {
  if (n < 3) throw std::invalid_argument("least_prime_divisor needs n >= 3");
  if (n % 2 == 0) return 2;
  for (int p = 3; p * p <= n; p += 2)
    if (n % p == 0) return p;
  return n;
}

DivisibilityDiagram::DivisibilityDiagram(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("diagram order must be >= 1");
  labels_.assign(static_cast<std::size_t>(order) * (order - 1) / 2, std::nullopt);
}

DivisibilityDiagram DivisibilityDiagram::of(const CoxeterMatrix& m) {
  DivisibilityDiagram d(m.rank());
  for (int i = 1; i <= m.rank(); ++i)
    for (int j = i + 1; j <= m.rank(); ++j)
      if (m.order(i, j).is_finite())
        d.set_label(i, j, least_prime_divisor(m.order(i, j).value()));
  return d;
}

int DivisibilityDiagram::pair_index(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > order_ || j > order_)
    throw std::out_of_range("vertex pair out of range");
  if (i > j) std::swap(i, j);
  return (i - 1) * order_ - (i - 1) * i / 2 + (j - i - 1);
}

std::optional<int> DivisibilityDiagram::label(int i, int j) const {
  return labels_[static_cast<std::size_t>(pair_index(i, j))];
}

void DivisibilityDiagram::set_label(int i, int j, std::optional<int> prime) {
  if (prime && (*prime < 3 || least_prime_divisor(*prime) != *prime))
    throw std::invalid_argument("edge label must be a prime >= 3");
  labels_[static_cast<std::size_t>(pair_index(i, j))] = prime;
}

bool DivisibilityDiagram::simple_edge(int i, int j) const {
  auto l = label(i, j);
  return l && *l == 3;
}

bool DivisibilityDiagram::multiple_edge(int i, int j) const {
  auto l = label(i, j);
  return l && *l >= 5;
}

int DivisibilityDiagram::multiple_edge_count() const {
  int count = 0;
  for (int i = 1; i <= order_; ++i)
    for (int j = i + 1; j <= order_; ++j)
      if (multiple_edge(i, j)) ++count;
  return count;
}

int DivisibilityDiagram::edge_count() const {
  int count = 0;
  for (const auto& l : labels_)
    if (l) ++count;
  return count;
}

namespace {

// Connectivity of the subset (1-based vertices) in d.
bool subset_connected(const DivisibilityDiagram& d, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  std::vector<bool> reached(vs.size(), false);
  std::vector<int> stack = {0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < vs.size(); ++b)
      if (!reached[b] && d.has_edge(vs[a], vs[b])) {
        reached[b] = true;
        ++count;
        stack.push_back(static_cast<int>(b));
      }
  }
  return count == vs.size();
}

}  // namespace

bool DivisibilityDiagram::connected() const {
  std::vector<int> all(order_);
  for (int i = 0; i < order_; ++i) all[i] = i + 1;
  return subset_connected(*this, all);
}

DivisibilityDiagram DivisibilityDiagram::induced(const std::vector<int>& vertices) const {
  DivisibilityDiagram d(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      d.set_label(static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                  label(vertices[a], vertices[b]));
  return d;
}

std::vector<DiagramComponent> connected_components(const DivisibilityDiagram& d) {
  std::vector<DiagramComponent> components;
  std::vector<bool> assigned(static_cast<std::size_t>(d.order()) + 1, false);
  for (int v = 1; v <= d.order(); ++v) {
    if (assigned[v]) continue;
    std::vector<int> verts = {v};
    assigned[v] = true;
    std::vector<int> stack = {v};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 1; b <= d.order(); ++b)
        if (!assigned[b] && d.has_edge(a, b)) {
          assigned[b] = true;
          verts.push_back(b);
          stack.push_back(b);
        }
    }
    std::sort(verts.begin(), verts.end());
    components.push_back({verts, d.induced(verts)});
  }
  return components;
}

ConnectedSubdiagramEnumerator::ConnectedSubdiagramEnumerator(
    const DivisibilityDiagram& d, int max_order)
    : diagram_(d), max_order_(std::min(max_order, d.order())), size_(1),
      current_{1}, fresh_(true) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
}

// Steps current_ to the next size_-subset in lexicographic order, or to the
// first subset of the next size.  Returns false when everything is exhausted.
bool ConnectedSubdiagramEnumerator::advance() {
  int n = diagram_.order();
  int k = size_;
  int pos = k - 1;
  while (pos >= 0 && current_[pos] == n - (k - 1 - pos)) --pos;
  if (pos < 0) {
    if (size_ >= max_order_) return false;
    ++size_;
    current_.resize(size_);
    for (int t = 0; t < size_; ++t) current_[t] = t + 1;
    return true;
  }
  ++current_[pos];
  for (int t = pos + 1; t < k; ++t) current_[t] = current_[t - 1] + 1;
  return true;
}

std::optional<std::vector<int>> ConnectedSubdiagramEnumerator::next() {
  while (true) {
    if (!fresh_) {
      if (!advance()) return std::nullopt;
    }
    fresh_ = false;
    if (subset_connected(diagram_, current_)) return current_;
  }
}

std::vector<std::vector<int>> connected_subdiagrams(const DivisibilityDiagram& d,
                                                    int max_order) {
  ConnectedSubdiagramEnumerator it(d, max_order);
  std::vector<std::vector<int>> out;
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace coxrefl
