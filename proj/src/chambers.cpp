#include "coxrefl/chambers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace coxrefl {

void sort_canonical(WordEngine& engine, std::vector<Elt>& elements) {
  std::vector<std::pair<std::string, Elt>> keyed;
  keyed.reserve(elements.size());
  for (Elt e : elements) keyed.emplace_back(engine.word(e), e);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  elements.clear();
  for (auto& [word, e] : keyed) elements.push_back(e);
}

ChamberSet::ChamberSet(WordEngine& engine, std::vector<Elt> members) {
  sort_canonical(engine, members);
  members_ = std::move(members);
  for (Elt e : members_) {
    index_.insert(e);
    max_length_ = std::max(max_length_, engine.length(e));
  }
}

namespace {

std::optional<std::vector<Elt>> ball_impl(WordEngine& engine, int radius,
                                          std::size_t max_nodes, bool project) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  std::vector<Elt> shell = {engine.identity()};
  std::vector<Elt> all = shell;
  std::unordered_set<Elt> seen(shell.begin(), shell.end());
  std::size_t previous_shell = 1;
  for (int len = 1; len <= radius; ++len) {
    std::vector<Elt> next;
    for (Elt w : shell)
      for (int g = 0; g < engine.rank(); ++g) {
        Elt u = engine.mul_gen(w, static_cast<Gen>(g));
        if (engine.length(u) == len && seen.insert(u).second) {
          next.push_back(u);
          if (all.size() + next.size() > max_nodes) return std::nullopt;
        }
      }
    sort_canonical(engine, next);
    all.insert(all.end(), next.begin(), next.end());
    if (project && len >= 4 && !next.empty() && previous_shell > 0) {
      // Give up early once the growth ratio projects past the budget.
      double ratio = std::max(
          1.0, static_cast<double>(next.size()) / static_cast<double>(previous_shell));
      double projected = static_cast<double>(all.size());
      double tail = static_cast<double>(next.size());
      for (int rest = len + 1; rest <= radius; ++rest) {
        tail *= ratio;
        projected += tail;
        if (projected > static_cast<double>(max_nodes)) return std::nullopt;
      }
    }
    previous_shell = next.size();
    shell = std::move(next);
    if (shell.empty()) break;  // finite group exhausted
  }
  return all;
}

}  // namespace

std::optional<std::vector<Elt>> ball_limited(WordEngine& engine, int radius,
                                             std::size_t max_nodes) {
  return ball_impl(engine, radius, max_nodes, false);
}

std::vector<Elt> ball(WordEngine& engine, int radius) {
  auto result = ball_limited(engine, radius, static_cast<std::size_t>(-1));
  return std::move(*result);
}

std::vector<std::pair<int, Elt>> neighbors(WordEngine& engine, Elt w) {
  std::vector<std::pair<int, Elt>> out;
  out.reserve(engine.rank());
  for (int g = 0; g < engine.rank(); ++g)
    out.emplace_back(g + 1, engine.mul_gen(w, static_cast<Gen>(g)));
  return out;
}

Reflection wall_between(WordEngine& engine, Elt w, int s) {
  if (s < 1 || s > engine.rank())
    throw std::out_of_range("generator index out of range");
  Elt ws = engine.mul_gen(w, static_cast<Gen>(s - 1));
  Elt t = engine.mul(ws, engine.inverse(w));
  return Reflection{t, static_cast<Gen>(s - 1), w};
}

namespace {

// Minimal-length representative of the coset w <s_i, s_j> (0-based gens).
Elt residue_min_rep(WordEngine& engine, Elt w, Gen gi, Gen gj) {
  for (;;) {
    int len = engine.length(w);
    Elt wi = engine.mul_gen(w, gi);
    if (engine.length(wi) < len) {
      w = wi;
      continue;
    }
    Elt wj = engine.mul_gen(w, gj);
    if (engine.length(wj) < len) {
      w = wj;
      continue;
    }
    return w;
  }
}

}  // namespace

ResidueArc residue_arc(WordEngine& engine, const ChamberSet& set, Elt w, int i,
                       int j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 1 || j > engine.rank())
    throw std::out_of_range("residue pair out of range");
  Order m = engine.system().order(i, j);
  if (!m.is_finite())
    throw std::invalid_argument(
        "residue_arc: pair (" + std::to_string(i) + "," + std::to_string(j) +
        ") has infinite order; the residue is a line, not a cycle");

  ResidueArc arc;
  arc.i = i;
  arc.j = j;
  arc.residue_size = 2 * m.value();
  Gen gi = static_cast<Gen>(i - 1), gj = static_cast<Gen>(j - 1);
  arc.base = residue_min_rep(engine, w, gi, gj);

  Elt cur = arc.base;
  bool step_i = true;
  std::vector<bool> member;
  member.reserve(arc.residue_size);
  for (int t = 0; t < arc.residue_size; ++t) {
    arc.cycle.push_back(cur);
    bool in = set.contains(cur);
    member.push_back(in);
    if (in) arc.arc_members.push_back(cur);
    cur = engine.mul_gen(cur, step_i ? gi : gj);
    step_i = !step_i;
  }

  int blocks = 0;
  for (int t = 0; t < arc.residue_size; ++t)
    if (member[t] && !member[(t + 1) % arc.residue_size]) ++blocks;
  arc.full = static_cast<int>(arc.arc_members.size()) == arc.residue_size;
  arc.contiguous = arc.full || blocks == 1;
  return arc;
}

ConvexityReport is_convex(WordEngine& engine, const ChamberSet& set,
                          int search_radius) {
  if (search_radius < 2 * set.max_length())
    throw RadiusTooSmall(search_radius, 2 * set.max_length());

  ConvexityReport report;
  const auto& members = set.members();
  // w = u*s lies on a geodesic from u to v iff l(w^{-1} v) < l(u^{-1} v);
  // with x = u^{-1} v that distance is l(g x) = l(x^{-1} g).
  for (Elt u : members) {
    Elt inv_u = engine.inverse(u);
    for (Elt v : members) {
      if (u == v) continue;
      Elt x = engine.mul(inv_u, v);
      Elt xi = engine.inverse(x);
      int d = engine.length(x);
      for (int g = 0; g < engine.rank(); ++g) {
        if (engine.length(engine.mul_gen(xi, static_cast<Gen>(g))) >= d)
          continue;
        Elt w = engine.mul_gen(u, static_cast<Gen>(g));
        if (!set.contains(w)) {
          report.convex = false;
          report.counterexample = w;
          return report;
        }
      }
    }
  }
  report.convex = true;
  return report;
}

PolytopeReport is_coxeter_polytope(WordEngine& engine, const ChamberSet& set) {
  PolytopeReport report;
  std::unordered_set<std::uint64_t> visited;  // (base, i, j) residues seen
  for (Elt w : set.members()) {
    for (int i = 1; i <= engine.rank(); ++i)
      for (int j = i + 1; j <= engine.rank(); ++j) {
        if (!engine.system().order(i, j).is_finite()) continue;
        Elt base = residue_min_rep(engine, w, static_cast<Gen>(i - 1),
                                   static_cast<Gen>(j - 1));
        std::uint64_t key = (static_cast<std::uint64_t>(base) << 14) |
                            static_cast<std::uint64_t>(i << 7) |
                            static_cast<std::uint64_t>(j);
        if (!visited.insert(key).second) continue;
        ResidueArc arc = residue_arc(engine, set, w, i, j);
        if (arc.full) continue;
        int d = static_cast<int>(arc.arc_members.size());
        int m = engine.system().order(i, j).value();
        if (!arc.contiguous || m % d != 0)
          report.violations.push_back({w, i, j, d, m, arc.contiguous});
      }
  }
  report.ok = report.violations.empty();
  return report;
}

std::vector<Reflection> bounding_reflections(WordEngine& engine,
                                             const ChamberSet& set) {
  std::vector<Reflection> out;
  std::unordered_set<Elt> seen;
  for (Elt w : set.members())
    for (int g = 0; g < engine.rank(); ++g) {
      Elt ws = engine.mul_gen(w, static_cast<Gen>(g));
      if (set.contains(ws)) continue;
      Reflection r = wall_between(engine, w, g + 1);
      if (seen.insert(r.word).second) out.push_back(r);
    }
  std::sort(out.begin(), out.end(), [&](const Reflection& a, const Reflection& b) {
    std::string wa = engine.word(a.word), wb = engine.word(b.word);
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    return wa < wb;
  });
  return out;
}

TilingReport verify_tiling(WordEngine& engine, const ChamberSet& set,
                           int radius, std::size_t node_budget) {
  if (radius < 2 * set.max_length())
    throw RadiusTooSmall(radius, 2 * set.max_length());

  if (!set.contains_identity())
    throw std::invalid_argument("verify_tiling needs the identity chamber");

  TilingReport report;
  auto maybe_ball = ball_impl(engine, radius, node_budget, true);
  if (!maybe_ball) {
    report.truncated = true;
    return report;
  }
  const std::vector<Elt>& space = *maybe_ball;
  report.ball_size = space.size();

  // Propagate the translate address (v, u) with c = v * u, u in I, across
  // the edges of the ball: an edge either stays in the current translate or
  // crosses one of its walls into the neighbor copy v2 = c * u^-1.  A
  // chamber reached with two different translates is an overlap; since every
  // chamber extends an addressed shorter neighbor, coverage is structural.
  std::unordered_map<Elt, Elt> inverse_member;
  for (Elt u : set.members()) inverse_member.emplace(u, engine.inverse(u));

  std::unordered_map<Elt, std::pair<Elt, Elt>> address;  // chamber -> (v, u)
  address.reserve(space.size() * 2);
  address.emplace(engine.identity(), std::make_pair(engine.identity(), engine.identity()));
  std::unordered_set<Elt> translates = {engine.identity()};

  for (Elt c : space) {
    const int len = engine.length(c);
    if (len == 0) continue;
    for (int g = 0; g < engine.rank(); ++g) {
      Elt prev = engine.mul_gen(c, static_cast<Gen>(g));
      if (engine.length(prev) > len) continue;
      auto it = address.find(prev);
      if (it == address.end()) continue;  // outside the ball (cannot happen)
      auto [v, u] = it->second;
      Elt u_next = engine.mul_gen(u, static_cast<Gen>(g));
      std::pair<Elt, Elt> candidate;
      if (set.contains(u_next)) {
        candidate = {v, u_next};
      } else {
        Elt v2 = engine.mul(c, inverse_member.at(u));
        candidate = {v2, u};
        translates.insert(v2);
      }
      auto [slot, inserted] = address.emplace(c, candidate);
      if (!inserted && slot->second.first != candidate.first) {
        report.overlap = true;
        report.overlap_witness = c;
      }
    }
    if (address.find(c) == address.end()) {
      report.covered = false;
      report.uncovered_witness = c;
      report.translate_count = translates.size();
      return report;
    }
  }

  report.covered = true;
  report.translate_count = translates.size();
  if (report.covered && !report.overlap)
    report.index = static_cast<int>(set.size());
  return report;
}

LocalTilingReport adjacent_translates_disjoint(WordEngine& engine,
                                               const ChamberSet& set) {
  LocalTilingReport report;
  for (const Reflection& r : bounding_reflections(engine, set)) {
    for (Elt w : set.members()) {
      Elt image = engine.mul(r.word, w);
      if (set.contains(image)) {
        report.ok = false;
        report.reflection_witness = r.word;
        report.chamber_witness = image;
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

bool is_connected(WordEngine& engine, const ChamberSet& set) {
  if (set.empty()) return false;
  std::unordered_set<Elt> reached;
  std::vector<Elt> stack = {set.members().front()};
  reached.insert(stack.back());
  while (!stack.empty()) {
    Elt w = stack.back();
    stack.pop_back();
    for (int g = 0; g < engine.rank(); ++g) {
      Elt u = engine.mul_gen(w, static_cast<Gen>(g));
      if (set.contains(u) && reached.insert(u).second) stack.push_back(u);
    }
  }
  return reached.size() == set.size();
}

std::vector<Elt> halfspace_hull(WordEngine& engine, const ChamberSet& set) {
  auto walls = bounding_reflections(engine, set);
  std::vector<Elt> hull;
  for (Elt u : ball(engine, set.max_length())) {
    bool inside = true;
    for (const Reflection& r : walls)
      if (engine.length(engine.mul(r.word, u)) <= engine.length(u)) {
        inside = false;
        break;
      }
    if (inside) hull.push_back(u);
  }
  return hull;
}

namespace {

std::string set_key(const std::vector<Elt>& sorted_ids) {
  std::string key;
  key.reserve(sorted_ids.size() * 4);
  for (Elt e : sorted_ids) {
    key.push_back(static_cast<char>(e & 0xFF));
    key.push_back(static_cast<char>((e >> 8) & 0xFF));
    key.push_back(static_cast<char>((e >> 16) & 0xFF));
    key.push_back(static_cast<char>((e >> 24) & 0xFF));
  }
  return key;
}

// True when some residue arc of the set violates the divisibility condition
// and the rest of that residue cycle lies outside the ball, so no candidate
// grown inside the ball can repair it.
bool frozen_arc_violation(WordEngine& engine, const ChamberSet& set,
                          const std::unordered_set<Elt>& ball_set) {
  for (Elt w : set.members())
    for (int i = 1; i <= engine.rank(); ++i)
      for (int j = i + 1; j <= engine.rank(); ++j) {
        if (!engine.system().order(i, j).is_finite()) continue;
        ResidueArc arc = residue_arc(engine, set, w, i, j);
        if (arc.full) continue;
        int d = static_cast<int>(arc.arc_members.size());
        int m = engine.system().order(i, j).value();
        bool violating = !arc.contiguous || m % d != 0;
        if (!violating) continue;
        bool frozen = true;
        for (Elt c : arc.cycle)
          if (!set.contains(c) && ball_set.find(c) != ball_set.end()) {
            frozen = false;
            break;
          }
        if (frozen) return true;
      }
  return false;
}

}  // namespace

SearchReport search_coxeter_polytopes(WordEngine& engine, int max_size,
                                      int radius, std::size_t node_budget) {
  if (max_size < 2) throw std::invalid_argument("max_size must be >= 2");
  SearchReport report;
  std::vector<Elt> space = ball(engine, radius);
  std::unordered_set<Elt> space_set(space.begin(), space.end());

  // Level-wise growth of connected sets containing the identity, deduplicated
  // by the sorted member list.
  std::vector<std::vector<Elt>> level = {{engine.identity()}};
  std::unordered_set<std::string> seen = {set_key(level.front())};

  for (int size = 2; size <= max_size; ++size) {
    std::vector<std::vector<Elt>> next;
    for (const auto& current : level) {
      for (Elt w : current) {
        for (int g = 0; g < engine.rank(); ++g) {
          Elt c = engine.mul_gen(w, static_cast<Gen>(g));
          if (space_set.find(c) == space_set.end()) continue;
          if (std::find(current.begin(), current.end(), c) != current.end())
            continue;
          std::vector<Elt> grown = current;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
          if (++report.expansions > node_budget) {
            report.complete = false;
            return report;
          }
          if (!seen.insert(set_key(grown)).second) continue;
          next.push_back(std::move(grown));
        }
      }
    }
    // Deterministic processing order independent of hash iteration.
    std::sort(next.begin(), next.end());
    std::vector<std::vector<Elt>> kept;
    for (auto& ids : next) {
      ChamberSet candidate(engine, ids);
      if (frozen_arc_violation(engine, candidate, space_set)) continue;
      kept.push_back(ids);
      auto convexity = is_convex(engine, candidate, 2 * candidate.max_length());
      if (!convexity.convex) continue;
      if (is_coxeter_polytope(engine, candidate).ok)
        report.found.push_back(std::move(candidate));
    }
    level = std::move(kept);
  }

  std::sort(report.found.begin(), report.found.end(),
            [](const ChamberSet& a, const ChamberSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.members() < b.members();
            });
  report.complete = true;
  return report;
}

}  // namespace coxrefl
