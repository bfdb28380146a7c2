#include "coxrefl/constructor.hpp"

#include <algorithm>

namespace coxrefl {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Triangle553: return "triangle-553";
    case Provenance::SingleMultipleEdge: return "single-multiple-edge";
    case Provenance::Extended553: return "553-extended";
    case Provenance::FreeProductLift: return "free-product-lift";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& tag) {
  if (tag == "triangle-553") return Provenance::Triangle553;
  if (tag == "single-multiple-edge") return Provenance::SingleMultipleEdge;
  if (tag == "553-extended") return Provenance::Extended553;
  if (tag == "free-product-lift") return Provenance::FreeProductLift;
  throw std::invalid_argument("unknown provenance tag '" + tag + "'");
}

VerificationSummary verify_chamber_set(WordEngine& engine, const ChamberSet& set,
                                       const ConstructOptions& options) {
  VerificationSummary summary;
  summary.has_identity = set.contains_identity();
  if (!summary.has_identity) {
    summary.failure = "chamber set does not contain the identity";
    return summary;
  }
  summary.connected = is_connected(engine, set);
  if (!summary.connected) {
    summary.failure = "chamber set is not connected";
    return summary;
  }
  auto convexity = is_convex(engine, set, 2 * set.max_length());
  summary.convex = convexity.convex;
  if (!summary.convex) {
    summary.failure = "not convex; geodesic chamber " +
                      format_word_literal(from_letters(
                          engine.word(*convexity.counterexample))) +
                      " missing";
    return summary;
  }
  auto polytope = is_coxeter_polytope(engine, set);
  summary.polytope = polytope.ok;
  if (!summary.polytope) {
    const auto& v = polytope.violations.front();
    summary.failure = "residue arc at pair (" + std::to_string(v.i) + "," +
                      std::to_string(v.j) + ") has size " +
                      std::to_string(v.arc_size) +
                      (v.contiguous ? " which does not divide "
                                    : ", split around a face of order ") +
                      std::to_string(v.order);
    return summary;
  }

  summary.tiling_radius = 2 * set.max_length();
  TilingReport tiling =
      verify_tiling(engine, set, summary.tiling_radius, options.tiling_node_budget);
  if (!tiling.truncated) {
    summary.tiling_mode = TilingMode::Full;
    summary.tiling_ok = tiling.ok();
    if (!summary.tiling_ok)
      summary.failure = tiling.overlap ? "translates overlap" : "ball not covered";
  } else {
    summary.tiling_mode = TilingMode::LocalOnly;
    auto local = adjacent_translates_disjoint(engine, set);
    summary.tiling_ok = local.ok;
    if (!summary.tiling_ok)
      summary.failure = "reflected copy of the set meets the set";
  }
  return summary;
}

namespace {

WordEngineConfig engine_config(const ConstructOptions& options) {
  WordEngineConfig config;
  config.length_cap = options.length_cap;
  return config;
}

Certificate finish_certificate(WordEngine& engine, const ChamberSet& set,
                               Provenance provenance,
                               const ConstructOptions& options) {
  Certificate cert;
  cert.system = engine.system();
  cert.provenance = provenance;
  cert.index = static_cast<int>(set.size());
  for (Elt e : set.members())
    cert.chambers.push_back(from_letters(engine.word(e)));
  for (const Reflection& r : bounding_reflections(engine, set))
    cert.generators.push_back(from_letters(engine.word(r.word)));
  cert.verification = verify_chamber_set(engine, set, options);
  if (!cert.verification.verified())
    throw ConstructionError("construction for " + engine.system().describe() +
                            " failed verification: " + cert.verification.failure);
  return cert;
}

// Roles for the rank-3 pattern: apex carries both 5-edges, base1 < base2 the
// 3-edge.  Throws HypothesisError when the labels do not match.
struct TriangleRoles {
  int base1, base2, apex;
  int k12, k13, k23;
};

TriangleRoles triangle_roles(const CoxeterMatrix& system) {
  if (system.rank() != 3)
    throw HypothesisError("the rank-3 construction needs rank 3, got rank " +
                          std::to_string(system.rank()));
  DivisibilityDiagram d = DivisibilityDiagram::of(system);
  for (int apex = 1; apex <= 3; ++apex) {
    int b1 = apex == 1 ? 2 : 1;
    int b2 = apex == 3 ? 2 : 3;
    auto l12 = d.label(b1, b2), l13 = d.label(b1, apex), l23 = d.label(b2, apex);
    if (l12 && *l12 == 3 && l13 && *l13 == 5 && l23 && *l23 == 5) {
      TriangleRoles roles{b1, b2, apex, 0, 0, 0};
      roles.k12 = system.order(b1, b2).value() / 3;
      roles.k13 = system.order(b1, apex).value() / 5;
      roles.k23 = system.order(b2, apex).value() / 5;
      return roles;
    }
  }
  throw HypothesisError(
      "system " + system.describe() +
      " does not match the (3k,5k',5k'') pattern (k',k'' coprime to 6)");
}

// The 6-chamber patch and its rotated copies; uses role letters.
std::vector<Elt> triangle_core_members(WordEngine& engine,
                                       const TriangleRoles& roles) {
  Gen s1 = static_cast<Gen>(roles.base1 - 1);
  Gen s2 = static_cast<Gen>(roles.base2 - 1);
  Gen s3 = static_cast<Gen>(roles.apex - 1);
  auto chain = [&](std::initializer_list<Gen> letters) {
    Elt acc = engine.identity();
    for (Gen g : letters) acc = engine.mul_gen(acc, g);
    return acc;
  };
  std::vector<Elt> patch = {
      engine.identity(),   chain({s3}),         chain({s1}),
      chain({s1, s3}),     chain({s1, s3, s1}), chain({s1, s3, s2}),
  };
  Elt rotation = chain({s2, s1});
  std::vector<Elt> members;
  Elt power = engine.identity();
  for (int k = 0; k < 3 * roles.k12; ++k) {
    for (Elt p : patch) members.push_back(engine.mul(power, p));
    power = engine.mul(power, rotation);
  }
  return members;
}

}  // namespace

Certificate construct_553(const CoxeterMatrix& system,
                          const ConstructOptions& options) {
  TriangleRoles roles = triangle_roles(system);
  WordEngine engine(system, engine_config(options));
  std::vector<Elt> members = triangle_core_members(engine, roles);
  ChamberSet set(engine, members);
  if (static_cast<int>(set.size()) != 18 * roles.k12)
    throw ConstructionError("rotated patches of " + system.describe() +
                            " produced " + std::to_string(set.size()) +
                            " chambers, expected " + std::to_string(18 * roles.k12));
  return finish_certificate(engine, set, Provenance::Triangle553, options);
}

Certificate construct_single_multiple_edge(const CoxeterMatrix& system,
                                           const ConstructOptions& options) {
  const int n = system.rank();
  DivisibilityDiagram d = DivisibilityDiagram::of(system);
  if (d.multiple_edge_count() > 1)
    throw HypothesisError("system " + system.describe() +
                          " has more than one multiple edge");
  WordEngine engine(system, engine_config(options));

  // Degenerate shapes first: a single generator, or no relation at all.
  bool any_edge = false;
  for (int i = 1; i <= n && !any_edge; ++i)
    for (int j = i + 1; j <= n && !any_edge; ++j)
      if (d.has_edge(i, j)) any_edge = true;
  if (n == 1 || !any_edge) {
    ChamberSet set(engine, {engine.identity(), engine.mul_gen(0, 0)});
    return finish_certificate(engine, set, Provenance::SingleMultipleEdge, options);
  }

  // Base edge: the multiple edge when present, else the finite edge with the
  // smallest order (ties to the smallest pair).
  int bi = 0, bj = 0;
  for (int i = 1; i <= n && bi == 0; ++i)
    for (int j = i + 1; j <= n && bi == 0; ++j)
      if (d.multiple_edge(i, j)) bi = i, bj = j;
  if (bi == 0) {
    int best = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (d.has_edge(i, j)) {
          int m = system.order(i, j).value();
          if (best == 0 || m < best) best = m, bi = i, bj = j;
        }
  }
  const int m = system.order(bi, bj).value();
  Gen gi = static_cast<Gen>(bi - 1), gj = static_cast<Gen>(bj - 1);

  if (n == 2) {
    // The full residue would be the whole group; take the half-cycle of m
    // chambers instead, a contiguous arc with size m dividing m.
    std::vector<Elt> members;
    Elt cur = engine.identity();
    for (int t = 0; t < m; ++t) {
      members.push_back(cur);
      cur = engine.mul_gen(cur, t % 2 == 0 ? gi : gj);
    }
    ChamberSet set(engine, members);
    return finish_certificate(engine, set, Provenance::SingleMultipleEdge, options);
  }

  // Full dihedral residue of the base edge...
  std::vector<Elt> members;
  std::vector<Elt> even_members;
  Elt cur = engine.identity();
  for (int t = 0; t < 2 * m; ++t) {
    members.push_back(cur);
    if (engine.length(cur) % 2 == 0) even_members.push_back(cur);
    cur = engine.mul_gen(cur, t % 2 == 0 ? gi : gj);
  }
  // ...plus every chamber adjacent to an even-length one.
  for (Elt w : even_members)
    for (int g = 0; g < n; ++g)
      members.push_back(engine.mul_gen(w, static_cast<Gen>(g)));

  ChamberSet set(engine, members);
  return finish_certificate(engine, set, Provenance::SingleMultipleEdge, options);
}

Certificate construct_553_extended(const CoxeterMatrix& system,
                                   const ConstructOptions& options) {
  if (system.rank() == 3) return construct_553(system, options);

  DivisibilityDiagram d = DivisibilityDiagram::of(system);
  if (!d.connected())
    throw HypothesisError("system " + system.describe() +
                          " has a disconnected diagram; lift per component");
  Verdict verdict = classify_component(d);
  if (verdict.answer != Answer::HasSubgroup || !verdict.reason ||
      verdict.reason->kind != ComponentReasonKind::FiveFiveThreePattern)
    throw HypothesisError("system " + system.describe() +
                          " does not match the extended (5,5,3) pattern");
  const std::vector<int>& triple = verdict.reason->triple;

  // Rank-3 core on the triple's special subgroup.
  CoxeterMatrix core(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      core.set_order(a + 1, b + 1, system.order(triple[a], triple[b]));
  Certificate core_cert = construct_553(core, options);

  WordEngine engine(system, engine_config(options));
  std::vector<Elt> members;
  for (const Word& w : core_cert.chambers) {
    Word mapped;
    for (int letter : w) mapped.push_back(triple[letter - 1]);
    members.push_back(element_of(engine, mapped));
  }
  ChamberSet core_set(engine, members);

  // The construction needs the chambers facing out of the rank-3 subcomplex
  // to have odd length; reflect the whole core once if they do not.
  auto boundary_parities = [&](const ChamberSet& set) {
    int odd = 0, even = 0;
    for (Elt w : set.members()) {
      bool boundary = false;
      for (int t : triple)
        if (!set.contains(engine.mul_gen(w, static_cast<Gen>(t - 1))))
          boundary = true;
      if (!boundary) continue;
      (engine.length(w) % 2 ? odd : even)++;
    }
    return std::pair<int, int>(odd, even);
  };
  auto [odd, even] = boundary_parities(core_set);
  if (odd > 0 && even > 0)
    throw ConstructionError("mixed boundary parity in the rank-3 core for " +
                            system.describe());
  if (even > 0) {
    // Reflecting in a wall of a length-1 member flips all parities and keeps
    // the identity inside.
    Elt mirror = kNoElt;
    for (Elt w : core_set.members())
      if (engine.length(w) == 1) mirror = w;
    if (mirror == kNoElt)
      throw ConstructionError("no length-1 chamber to reflect the core through");
    std::vector<Elt> reflected;
    for (Elt w : core_set.members())
      reflected.push_back(engine.mul(mirror, w));
    core_set = ChamberSet(engine, reflected);
    auto parities = boundary_parities(core_set);
    if (parities.second > 0)
      throw ConstructionError("core reflection did not fix boundary parity for " +
                              system.describe());
  }

  std::vector<Elt> extended(core_set.members().begin(), core_set.members().end());
  for (Elt w : core_set.members()) {
    if (engine.length(w) % 2 != 0) continue;
    for (int g = 0; g < system.rank(); ++g)
      extended.push_back(engine.mul_gen(w, static_cast<Gen>(g)));
  }
  ChamberSet set(engine, extended);
  return finish_certificate(engine, set, Provenance::Extended553, options);
}

Certificate construct_free_product_lift(const CoxeterMatrix& system,
                                        const Certificate& component_certificate,
                                        const std::vector<int>& component_vertices,
                                        const ConstructOptions& options) {
  WordEngine engine(system, engine_config(options));
  std::vector<Elt> members;
  for (const Word& w : component_certificate.chambers) {
    Word mapped;
    for (int letter : w) {
      if (letter < 1 || letter > static_cast<int>(component_vertices.size()))
        throw std::invalid_argument("certificate letter outside the component");
      mapped.push_back(component_vertices[letter - 1]);
    }
    members.push_back(element_of(engine, mapped));
  }
  ChamberSet set(engine, members);
  if (static_cast<int>(set.size()) != component_certificate.index)
    throw ConstructionError("lift of a component certificate changed its size");
  return finish_certificate(engine, set, Provenance::FreeProductLift, options);
}

ConstructResult construct(const CoxeterMatrix& system,
                          const ConstructOptions& options) {
  Verdict verdict = classify(system);
  if (verdict.answer == Answer::NoSubgroup) return verdict;

  DivisibilityDiagram d = DivisibilityDiagram::of(system);
  auto components = connected_components(d);
  const DiagramComponent& component = components[*verdict.component_index];

  const bool whole = static_cast<int>(component.vertices.size()) == system.rank();
  CoxeterMatrix target = system;
  if (!whole) {
    CoxeterMatrix sub(static_cast<int>(component.vertices.size()));
    for (std::size_t a = 0; a < component.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < component.vertices.size(); ++b)
        sub.set_order(static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                      system.order(component.vertices[a], component.vertices[b]));
    target = sub;
  }

  Certificate cert;
  switch (verdict.reason->kind) {
    case ComponentReasonKind::SmallComponent:
    case ComponentReasonKind::SingleMultipleEdge:
      cert = construct_single_multiple_edge(target, options);
      break;
    case ComponentReasonKind::FiveFiveThreePattern:
      cert = construct_553_extended(target, options);
      break;
  }
  if (whole) return cert;
  return construct_free_product_lift(system, cert, component.vertices, options);
}

std::vector<std::pair<int, int>> boundary_arc_profile(WordEngine& engine,
                                                      const ChamberSet& set) {
  std::vector<std::pair<int, int>> profile;
  std::unordered_set<std::uint64_t> visited;
  for (Elt w : set.members())
    for (int i = 1; i <= engine.rank(); ++i)
      for (int j = i + 1; j <= engine.rank(); ++j) {
        if (!engine.system().order(i, j).is_finite()) continue;
        ResidueArc arc = residue_arc(engine, set, w, i, j);
        std::uint64_t key = (static_cast<std::uint64_t>(arc.base) << 14) |
                            static_cast<std::uint64_t>(i << 7) |
                            static_cast<std::uint64_t>(j);
        if (!visited.insert(key).second) continue;
        if (arc.full) continue;
        profile.emplace_back(static_cast<int>(arc.arc_members.size()),
                             engine.system().order(i, j).value());
      }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace coxrefl
