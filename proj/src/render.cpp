#include "coxrefl/render.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "coxrefl/chambers.hpp"

namespace coxrefl {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string fmt9(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return buffer;
}

// ---------------------------------------------------------------------------
// Hyperbolic scene: mirrors are diameters or circles orthogonal to the unit
// circle; reflections act as anti-Moebius maps z -> moeb(M)(conj z).

struct AntiIsometry {
  // Action: moeb(M)(z or conj z).
  Complex a, b, c, d;
  bool conjugate = false;

  Complex apply(Complex z) const {
    if (conjugate) z = std::conj(z);
    return (a * z + b) / (c * z + d);
  }
};

AntiIsometry compose(const AntiIsometry& f, const AntiIsometry& g) {
  AntiIsometry h;
  Complex ga = g.a, gb = g.b, gc = g.c, gd = g.d;
  if (f.conjugate) {
    ga = std::conj(ga);
    gb = std::conj(gb);
    gc = std::conj(gc);
    gd = std::conj(gd);
  }
  h.a = f.a * ga + f.b * gc;
  h.b = f.a * gb + f.b * gd;
  h.c = f.c * ga + f.d * gc;
  h.d = f.c * gb + f.d * gd;
  h.conjugate = f.conjugate != g.conjugate;
  return h;
}

AntiIsometry identity_isometry() { return {1.0, 0.0, 0.0, 1.0, false}; }

// Reflection in the diameter at angle theta: z -> e^{2 i theta} conj(z).
AntiIsometry line_reflection(double theta) {
  return {std::polar(1.0, 2.0 * theta), 0.0, 0.0, 1.0, true};
}

// Reflection (inversion) in the circle with center c, radius r.
AntiIsometry circle_reflection(Complex center, double r) {
  return {center, r * r - std::norm(center), 1.0, -std::conj(center), true};
}

struct HyperbolicScene {
  std::array<AntiIsometry, 3> mirror;  // indexed by 0-based generator
  std::array<Complex, 3> vertex;       // vertex[k]: where the two walls != k meet
  std::array<double, 3> measured_angle;  // same indexing as vertex
};

double angle_or_zero(const CoxeterMatrix& m, int i, int j) {
  Order o = m.order(i, j);
  return o.is_finite() ? kPi / o.value() : 0.0;
}

// Geodesic circle crossing the diameter at angle `theta_line` under interior
// angle beta and the x-axis under alpha; returns center (x0, y0) and radius.
struct SolvedCircle {
  Complex center;
  double radius;
};

SolvedCircle solve_third_mirror(double theta, double alpha, double beta) {
  double den = (std::cos(theta + alpha) + std::cos(beta)) *
               (std::cos(theta - alpha) + std::cos(beta));
  double r = std::sin(theta) / std::sqrt(den);
  double y0 = r * std::cos(alpha);
  double x0 = r * (std::cos(alpha) * std::cos(theta) + std::cos(beta)) /
              std::sin(theta);
  return {Complex(x0, y0), r};
}

// Inner intersection of a mirror circle with the diameter ray at angle phi.
Complex ray_circle_vertex(Complex center, double phi) {
  Complex rotated = center * std::polar(1.0, -phi);
  double x0 = rotated.real();
  double disc = std::max(x0 * x0 - 1.0, 0.0);
  double x = x0 - std::sqrt(disc);
  return std::polar(1.0, phi) * Complex(x, 0.0);
}

// Tangent-based interior angle between a diameter (direction into the
// triangle `along`) and a circle at their common vertex.
double circle_line_angle(Complex vertex, Complex center, Complex along) {
  Complex radius = vertex - center;
  Complex tangent(-radius.imag(), radius.real());
  if ((tangent * std::conj(along)).real() < 0.0) tangent = -tangent;
  double c = (tangent * std::conj(along)).real() /
             (std::abs(tangent) * std::abs(along));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

HyperbolicScene build_hyperbolic_scene(const CoxeterMatrix& m) {
  HyperbolicScene scene;

  // First finite pair becomes the two diameters.
  int a = 0, b = 0;
  const int pair_order[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (auto& p : pair_order)
    if (m.order(p[0], p[1]).is_finite()) {
      a = p[0];
      b = p[1];
      break;
    }

  if (a == 0) {
    // Free product: ideal triangle with vertices on the boundary circle.
    std::array<Complex, 3> ideal;
    for (int k = 0; k < 3; ++k)
      ideal[k] = std::polar(1.0, kPi / 2.0 + 2.0 * kPi * k / 3.0);
    // Mirror of generator k joins the two ideal vertices adjacent to it:
    // vertex[k] is opposite, so mirror k passes through the other two.
    for (int k = 0; k < 3; ++k) {
      Complex p = ideal[(k + 1) % 3], q = ideal[(k + 2) % 3];
      Complex center = (p + q) / (1.0 + (p * std::conj(q)).real());
      double r = std::sqrt(std::norm(center) - 1.0);
      scene.mirror[k] = circle_reflection(center, r);
      scene.vertex[k] = ideal[k];
      scene.measured_angle[k] = 0.0;
    }
    return scene;
  }

  int c = 6 - a - b;  // the remaining generator
  double theta = kPi / m.order(a, b).value();
  double alpha = angle_or_zero(m, a, c);
  double beta = angle_or_zero(m, b, c);
  SolvedCircle third = solve_third_mirror(theta, alpha, beta);

  scene.mirror[a - 1] = line_reflection(0.0);
  scene.mirror[b - 1] = line_reflection(theta);
  scene.mirror[c - 1] = circle_reflection(third.center, third.radius);

  Complex v_ab(0.0, 0.0);
  Complex v_ac = ray_circle_vertex(third.center, 0.0);
  Complex v_bc = ray_circle_vertex(third.center, theta);
  scene.vertex[c - 1] = v_ab;
  scene.vertex[b - 1] = v_ac;
  scene.vertex[a - 1] = v_bc;

  scene.measured_angle[c - 1] = theta;
  scene.measured_angle[b - 1] =
      circle_line_angle(v_ac, third.center, Complex(-1.0, 0.0));
  scene.measured_angle[a - 1] =
      circle_line_angle(v_bc, third.center, -std::polar(1.0, theta));
  return scene;
}

// ---------------------------------------------------------------------------
// Euclidean scene (the single flat case: all orders 3).

struct AffineIsometry {
  // x -> A x + t
  double a11, a12, a21, a22;
  Complex t;

  Complex apply(Complex z) const {
    return Complex(a11 * z.real() + a12 * z.imag(),
                   a21 * z.real() + a22 * z.imag()) +
           t;
  }
};

AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g) {
  AffineIsometry h;
  h.a11 = f.a11 * g.a11 + f.a12 * g.a21;
  h.a12 = f.a11 * g.a12 + f.a12 * g.a22;
  h.a21 = f.a21 * g.a11 + f.a22 * g.a21;
  h.a22 = f.a21 * g.a12 + f.a22 * g.a22;
  h.t = f.apply(g.t);
  return h;
}

// Reflection across the line through p with direction d.
AffineIsometry euclidean_reflection(Complex p, Complex d) {
  double phi = std::atan2(d.imag(), d.real());
  double c2 = std::cos(2 * phi), s2 = std::sin(2 * phi);
  AffineIsometry r{c2, s2, s2, -c2, {0.0, 0.0}};
  Complex image = r.apply(p);
  r.t = p - image;
  return r;
}

struct EuclideanScene {
  std::array<AffineIsometry, 3> mirror;
  std::array<Complex, 3> vertex;
};

EuclideanScene build_euclidean_scene() {
  EuclideanScene scene;
  Complex v12(0.0, 0.0), v13(1.0, 0.0), v23(0.5, std::sqrt(3.0) / 2.0);
  scene.vertex[2] = v12;
  scene.vertex[1] = v13;
  scene.vertex[0] = v23;
  scene.mirror[0] = euclidean_reflection(v12, v13 - v12);  // wall 1: v12-v13
  scene.mirror[1] = euclidean_reflection(v12, v23 - v12);  // wall 2: v12-v23
  scene.mirror[2] = euclidean_reflection(v13, v23 - v13);  // wall 3: v13-v23
  return scene;
}

// ---------------------------------------------------------------------------

// Geodesic arc in the disk between two points: either a straight chord
// through the origin or the minor arc of the orthogonal circle.
void append_disk_edge(std::ostringstream& path, Complex from, Complex to,
                      double scale, Complex offset) {
  auto sx = [&](Complex z) {
    return Complex(offset.real() + z.real() * scale, offset.imag() - z.imag() * scale);
  };
  Complex p = from, q = to;
  double det = p.real() * q.imag() - p.imag() * q.real();
  Complex tq = sx(q);
  if (std::abs(det) < 1e-12) {
    path << "L" << fmt9(tq.real()) << " " << fmt9(tq.imag());
    return;
  }
  double rp = (std::norm(p) + 1.0) / 2.0;
  double rq = (std::norm(q) + 1.0) / 2.0;
  double cx = (rp * q.imag() - rq * p.imag()) / det;
  double cy = (rq * p.real() - rp * q.real()) / det;
  double r = std::sqrt(std::max(std::norm(Complex(cx, cy)) - 1.0, 0.0));
  // Sweep: sign of the rotation from (p - c) to (q - c); the y-flip of the
  // screen transform inverts it.
  Complex pc = p - Complex(cx, cy), qc = q - Complex(cx, cy);
  double cross = pc.real() * qc.imag() - pc.imag() * qc.real();
  int sweep = cross > 0 ? 0 : 1;
  path << "A" << fmt9(r * scale) << " " << fmt9(r * scale) << " 0 0 " << sweep
       << " " << fmt9(tq.real()) << " " << fmt9(tq.imag());
}

struct Palette {
  const char* background = "#ffffff";
  const char* boundary = "#202020";
  const char* stroke = "#404040";
  const char* fill = "#f2f2f2";
  const char* highlight = "#7aa6d6";
};

}  // namespace

SceneModel rank3_model(const CoxeterMatrix& system) {
  if (system.rank() != 3)
    throw std::invalid_argument("rendering handles rank 3 only, got rank " +
                                std::to_string(system.rank()));
  // Exact comparison of 1/m12 + 1/m13 + 1/m23 with 1.
  long long num = 0, den = 1;
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    Order o = system.order(i, j);
    if (!o.is_finite()) continue;
    num = num * o.value() + den;
    den *= o.value();
  }
  if (num > den)
    throw std::logic_error("spherical rank-3 system cannot be odd-angled");
  return num == den ? SceneModel::Euclidean : SceneModel::PoincareDisk;
}

std::array<double, 3> rank3_base_angles(const CoxeterMatrix& system) {
  if (rank3_model(system) == SceneModel::Euclidean)
    return {kPi / 3, kPi / 3, kPi / 3};
  HyperbolicScene scene = build_hyperbolic_scene(system);
  // vertex[k] faces generator k; the angle there belongs to the other pair.
  return {scene.measured_angle[2], scene.measured_angle[1],
          scene.measured_angle[0]};
}

std::string render_rank3(const CoxeterMatrix& system, const SceneParams& params) {
  SceneModel required = rank3_model(system);
  if (params.model != required)
    throw std::invalid_argument(
        "scene model does not match the system's curvature");
  if (params.depth < 0) throw std::invalid_argument("depth must be >= 0");

  WordEngine engine(system);
  std::vector<Elt> chambers = ball(engine, params.depth);
  std::unordered_set<Elt> highlighted;
  for (const Word& w : params.highlight)
    highlighted.insert(element_of(engine, w));

  const Palette palette;
  const double canvas = params.canvas;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << params.canvas
      << "\" height=\"" << params.canvas << "\" viewBox=\"0 0 " << params.canvas
      << " " << params.canvas << "\">\n";
  svg << "<rect width=\"" << params.canvas << "\" height=\"" << params.canvas
      << "\" fill=\"" << palette.background << "\"/>\n";

  if (required == SceneModel::PoincareDisk) {
    HyperbolicScene scene = build_hyperbolic_scene(system);
    const double scale = canvas * 0.48;
    const Complex offset(canvas / 2.0, canvas / 2.0);
    auto sx = [&](Complex z) {
      return Complex(offset.real() + z.real() * scale,
                     offset.imag() - z.imag() * scale);
    };

    for (Elt w : chambers) {
      AntiIsometry map = identity_isometry();
      for (char letter : engine.word(w))
        map = compose(map, scene.mirror[static_cast<unsigned char>(letter)]);
      std::array<Complex, 3> v;
      for (int k = 0; k < 3; ++k) v[k] = map.apply(scene.vertex[k]);
      std::ostringstream path;
      Complex start = sx(v[0]);
      path << "M" << fmt9(start.real()) << " " << fmt9(start.imag());
      append_disk_edge(path, v[0], v[1], scale, offset);
      append_disk_edge(path, v[1], v[2], scale, offset);
      append_disk_edge(path, v[2], v[0], scale, offset);
      path << "Z";
      svg << "<path d=\"" << path.str() << "\" fill=\""
          << (highlighted.count(w) ? palette.highlight : palette.fill)
          << "\" stroke=\"" << palette.stroke << "\" stroke-width=\"1\"/>\n";
    }
    svg << "<circle cx=\"" << fmt9(offset.real()) << "\" cy=\""
        << fmt9(offset.imag()) << "\" r=\"" << fmt9(scale)
        << "\" fill=\"none\" stroke=\"" << palette.boundary
        << "\" stroke-width=\"1.5\"/>\n";
  } else {
    EuclideanScene scene = build_euclidean_scene();
    const double world = params.depth + 1.5;
    const double scale = canvas / (2.0 * world);
    const Complex centroid(0.5, std::sqrt(3.0) / 6.0);
    auto sx = [&](Complex z) {
      return Complex(canvas / 2.0 + (z.real() - centroid.real()) * scale,
                     canvas / 2.0 - (z.imag() - centroid.imag()) * scale);
    };
    for (Elt w : chambers) {
      AffineIsometry map{1, 0, 0, 1, {0, 0}};
      for (char letter : engine.word(w))
        map = compose(map, scene.mirror[static_cast<unsigned char>(letter)]);
      svg << "<polygon points=\"";
      for (int k = 0; k < 3; ++k) {
        Complex p = sx(map.apply(scene.vertex[k]));
        if (k) svg << " ";
        svg << fmt9(p.real()) << "," << fmt9(p.imag());
      }
      svg << "\" fill=\""
          << (highlighted.count(w) ? palette.highlight : palette.fill)
          << "\" stroke=\"" << palette.stroke << "\" stroke-width=\"1\"/>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace coxrefl
