#include "coxrefl/criterion.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace coxrefl {

std::string to_string(ComponentReasonKind kind) {
  switch (kind) {
    case ComponentReasonKind::SmallComponent: return "small-component";
    case ComponentReasonKind::SingleMultipleEdge: return "single-multiple-edge";
    case ComponentReasonKind::FiveFiveThreePattern: return "five-five-three";
  }
  return "?";
}

std::string to_string(Answer answer) {
  return answer == Answer::HasSubgroup ? "has-subgroup" : "no-subgroup";
}

namespace {

// Does the triple (a,b,c) carry labels {5,5,3} with every other non-absent
// edge of the diagram simple?
bool matches_553(const DivisibilityDiagram& d, int a, int b, int c) {
  int fives = 0, threes = 0;
  const int pairs[3][2] = {{a, b}, {a, c}, {b, c}};
  for (auto& p : pairs) {
    auto l = d.label(p[0], p[1]);
    if (!l) return false;
    if (*l == 5)
      ++fives;
    else if (*l == 3)
      ++threes;
    else
      return false;
  }
  if (fives != 2 || threes != 1) return false;
  for (int x = 1; x <= d.order(); ++x)
    for (int y = x + 1; y <= d.order(); ++y) {
      bool inside = (x == a || x == b || x == c) && (y == a || y == b || y == c);
      if (inside) continue;
      auto l = d.label(x, y);
      if (l && *l != 3) return false;
    }
  return true;
}

std::optional<std::array<int, 3>> find_553_triple(const DivisibilityDiagram& d) {
  for (int a = 1; a <= d.order(); ++a)
    for (int b = a + 1; b <= d.order(); ++b)
      for (int c = b + 1; c <= d.order(); ++c)
        if (matches_553(d, a, b, c)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

bool has_subgroup_component(const DivisibilityDiagram& c) {
  if (c.order() <= 2) return true;
  if (c.multiple_edge_count() <= 1) return true;
  return find_553_triple(c).has_value();
}

}  // namespace

Verdict classify_component(const DivisibilityDiagram& c) {
  if (!c.connected())
    throw std::invalid_argument("classify_component requires a connected diagram");
  Verdict v;
  v.component_index = 0;
  if (c.order() <= 2) {
    v.answer = Answer::HasSubgroup;
    v.reason = ComponentReason{ComponentReasonKind::SmallComponent, {}};
    return v;
  }
  if (c.multiple_edge_count() <= 1) {
    v.answer = Answer::HasSubgroup;
    v.reason = ComponentReason{ComponentReasonKind::SingleMultipleEdge, {}};
    return v;
  }
  if (auto triple = find_553_triple(c)) {
    v.answer = Answer::HasSubgroup;
    v.reason = ComponentReason{ComponentReasonKind::FiveFiveThreePattern,
                               {(*triple)[0], (*triple)[1], (*triple)[2]}};
    return v;
  }
  v.answer = Answer::NoSubgroup;
  if (auto sub = find_minimal_forbidden(c))
    v.forbidden.push_back({*sub, c.induced(*sub)});
  return v;
}

Verdict classify_diagram(const DivisibilityDiagram& d) {
  auto components = connected_components(d);
  Verdict out;
  out.answer = Answer::NoSubgroup;
  for (std::size_t idx = 0; idx < components.size(); ++idx) {
    const auto& comp = components[idx];
    Verdict cv = classify_component(comp.diagram);
    if (cv.answer == Answer::HasSubgroup) {
      out.answer = Answer::HasSubgroup;
      out.component_index = static_cast<int>(idx);
      out.reason = cv.reason;
      if (out.reason)
        for (int& t : out.reason->triple) t = comp.vertices[t - 1];
      out.forbidden.clear();
      return out;
    }
    for (auto& f : cv.forbidden) {
      for (int& t : f.vertices) t = comp.vertices[t - 1];
      out.forbidden.push_back(std::move(f));
    }
  }
  return out;
}

Verdict classify(const CoxeterMatrix& system) {
  return classify_diagram(DivisibilityDiagram::of(system));
}

std::optional<std::vector<int>> find_minimal_forbidden(const DivisibilityDiagram& c) {
  if (!c.connected())
    throw std::invalid_argument("find_minimal_forbidden requires a connected diagram");
  // Size-then-lex enumeration means the first NoSubgroup subdiagram found is
  // automatically minimal: every proper connected subdiagram is smaller and
  // was already seen to have a subgroup.
  ConnectedSubdiagramEnumerator it(c, c.order());
  while (auto vs = it.next())
    if (!has_subgroup_component(c.induced(*vs))) return vs;
  return std::nullopt;
}

namespace {

// Odometer over all label assignments for the C(order,2) vertex pairs.
// Slot value 0 means absent, v >= 1 means label_set[v-1].
class DiagramEnumerator {
 public:
  DiagramEnumerator(int order, const std::vector<int>& labels)
      : order_(order), labels_(labels),
        slots_(static_cast<std::size_t>(order) * (order - 1) / 2, 0), done_(false) {}

  std::optional<DivisibilityDiagram> next() {
    if (done_) return std::nullopt;
    DivisibilityDiagram d(order_);
    std::size_t k = 0;
    for (int i = 1; i <= order_; ++i)
      for (int j = i + 1; j <= order_; ++j, ++k)
        if (slots_[k] > 0) d.set_label(i, j, labels_[slots_[k] - 1]);
    // advance
    std::size_t pos = 0;
    while (pos < slots_.size()) {
      if (slots_[pos] < static_cast<int>(labels_.size())) {
        ++slots_[pos];
        break;
      }
      slots_[pos] = 0;
      ++pos;
    }
    if (pos == slots_.size()) done_ = true;
    return d;
  }

 private:
  int order_;
  std::vector<int> labels_;
  std::vector<int> slots_;
  bool done_;
};

std::string diagram_code(const DivisibilityDiagram& d,
                         const std::vector<int>& perm) {
  std::string code;
  code.push_back(static_cast<char>(d.order()));
  for (int i = 1; i <= d.order(); ++i)
    for (int j = i + 1; j <= d.order(); ++j) {
      auto l = d.label(perm[i - 1], perm[j - 1]);
      code.push_back(static_cast<char>(l ? *l : 0));
    }
  return code;
}

std::string canonical_code(const DivisibilityDiagram& d) {
  std::vector<int> perm(d.order());
  for (int i = 0; i < d.order(); ++i) perm[i] = i + 1;
  std::string best = diagram_code(d, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, diagram_code(d, perm));
  return best;
}

}  // namespace

CrossCheckReport cross_check_classifiers(int max_rank,
                                         const std::vector<int>& label_set,
                                         long long budget) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
  for (int l : label_set)
    if (l < 3 || least_prime_divisor(l) != l)
      throw std::invalid_argument("labels must be primes >= 3");

  CrossCheckReport report;
  for (int order = 1; order <= max_rank; ++order) {
    DiagramEnumerator diagrams(order, label_set);
    while (auto d = diagrams.next()) {
      if (--budget < 0)
        throw std::runtime_error("cross-check budget exceeded");
      if (!d->connected()) continue;
      ++report.diagrams_checked;
      bool has = has_subgroup_component(*d);
      bool contains_forbidden = find_minimal_forbidden(*d).has_value();
      if (has == contains_forbidden) {
        ++report.disagreements;
        if (report.first_disagreements.size() < 5)
          report.first_disagreements.push_back(*d);
      }
    }
  }
  return report;
}

std::vector<DivisibilityDiagram> minimal_forbidden_diagrams(
    int max_rank, const std::vector<int>& label_set) {
  std::vector<DivisibilityDiagram> out;
  std::unordered_set<std::string> seen;
  for (int order = 1; order <= max_rank; ++order) {
    DiagramEnumerator diagrams(order, label_set);
    while (auto d = diagrams.next()) {
      if (!d->connected()) continue;
      if (has_subgroup_component(*d)) continue;
      auto minimal = find_minimal_forbidden(*d);
      if (!minimal || static_cast<int>(minimal->size()) != order) continue;
      if (seen.insert(canonical_code(*d)).second) out.push_back(*d);
    }
  }
  return out;
}

}  // namespace coxrefl
