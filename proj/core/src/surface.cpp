#include "flatlab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace flatlab {

Vec2 TranslationSurface::edge_vector(int p, int e) const {
  if (float_mode_) fail(Errc::float_mode_unsupported, "exact edge vector of float-mode surface");
  const auto& poly = polys_[p];
  int n = (int)poly.size();
  return poly[(e + 1) % n] - poly[e];
}

Vec2d TranslationSurface::edge_vector_approx(int p, int e) const {
  const auto& poly = polys_f_[p];
  int n = (int)poly.size();
  return {poly[(e + 1) % n].x - poly[e].x, poly[(e + 1) % n].y - poly[e].y};
}

int TranslationSurface::corner_index(int p, int v) const { return corner_offset_[p] + v; }

std::pair<int, int> next_corner_ccw(const TranslationSurface& s, int p, int v) {
  int n = s.edge_count(p);
  GluedEdge g = s.partner(p, (v + n - 1) % n);
  return {g.poly, g.edge};
}

namespace {

// Winding number of the closed direction sequence (each step turning CCW by
// an angle in (0, pi)): number of passes over the ray (1,0).
int winding_of(const std::vector<Vec2>& dirs) {
  int w = 0;
  for (size_t i = 0; i < dirs.size(); ++i) {
    const Vec2& a = dirs[i];
    const Vec2& b = dirs[(i + 1) % dirs.size()];
    if (dir_less(b, a) || dir_equal(b, a)) ++w;
  }
  return w;
}

}  // namespace

TranslationSurface TranslationSurface::build(std::vector<std::vector<Vec2>> polygons,
                                             std::vector<std::vector<GluedEdge>> gluing) {
  if (polygons.empty()) fail(Errc::invariant_violation, "surface with no polygons");
  if (gluing.size() != polygons.size())
    fail(Errc::gluing_mismatch, "gluing table size does not match polygon count");

  TranslationSurface s;
  s.polys_ = std::move(polygons);
  s.glue_ = std::move(gluing);

  // Field tag: the unique nonzero discriminant among all coordinates.
  long d = 0;
  for (const auto& poly : s.polys_)
    for (const auto& v : poly)
      for (const ExactReal* c : {&v.x, &v.y})
        if (c->disc() != 0) {
          if (d != 0 && d != c->disc()) fail(Errc::field_mismatch, "coordinates in two fields");
          d = c->disc();
        }
  s.field_d_ = d;

  // Strict convexity, positive orientation, winding one.
  for (int p = 0; p < (int)s.polys_.size(); ++p) {
    const auto& poly = s.polys_[p];
    int n = (int)poly.size();
    if (n < 3) fail(Errc::nonconvex_polygon, "polygon " + std::to_string(p) + " has < 3 vertices");
    std::vector<Vec2> edges(n);
    for (int i = 0; i < n; ++i) {
      edges[i] = poly[(i + 1) % n] - poly[i];
      if (edges[i].is_zero())
        fail(Errc::nonconvex_polygon, "degenerate edge in polygon " + std::to_string(p));
    }
    for (int i = 0; i < n; ++i) {
      if (cross(edges[i], edges[(i + 1) % n]).sign() <= 0)
        fail(Errc::nonconvex_polygon, "polygon " + std::to_string(p) + " is not strictly convex");
    }
    if (winding_of(edges) != 1)
      fail(Errc::nonconvex_polygon, "polygon " + std::to_string(p) + " winds more than once");
  }

  // Gluing: fixed-point-free involution with opposite holonomy.
  for (int p = 0; p < (int)s.polys_.size(); ++p) {
    int n = (int)s.polys_[p].size();
    if ((int)s.glue_[p].size() != n)
      fail(Errc::gluing_mismatch, "polygon " + std::to_string(p) + " gluing row size mismatch");
    for (int e = 0; e < n; ++e) {
      GluedEdge g = s.glue_[p][e];
      if (g.poly < 0 || g.poly >= (int)s.polys_.size() || g.edge < 0 ||
          g.edge >= (int)s.polys_[g.poly].size())
        fail(Errc::gluing_mismatch, "gluing target out of range");
      if (g.poly == p && g.edge == e) fail(Errc::gluing_mismatch, "edge glued to itself");
      GluedEdge back = s.glue_[g.poly][g.edge];
      if (!(back == GluedEdge{p, e})) fail(Errc::gluing_mismatch, "gluing is not an involution");
      Vec2 mine = s.polys_[p][(e + 1) % n] - s.polys_[p][e];
      int m = (int)s.polys_[g.poly].size();
      Vec2 theirs = s.polys_[g.poly][(g.edge + 1) % m] - s.polys_[g.poly][g.edge];
      if (!((mine + theirs).is_zero()))
        fail(Errc::gluing_mismatch, "glued edges " + std::to_string(p) + "." + std::to_string(e) +
                                        " and " + std::to_string(g.poly) + "." +
                                        std::to_string(g.edge) + " are not opposite translations");
    }
  }

  // Connectivity.
  {
    std::vector<char> seen(s.polys_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (const auto& g : s.glue_[p])
        if (!seen[g.poly]) {
          seen[g.poly] = 1;
          stack.push_back(g.poly);
        }
    }
    for (char c : seen)
      if (!c) fail(Errc::disconnected_surface, "glued complex is not connected");
  }

  s.polys_f_.resize(s.polys_.size());
  for (size_t p = 0; p < s.polys_.size(); ++p)
    for (const auto& v : s.polys_[p]) s.polys_f_[p].push_back(approx(v));

  s.compute_cones();
  return s;
}

void TranslationSurface::compute_cones() {
  corner_offset_.assign(polys_.size(), 0);
  int total = 0;
  for (size_t p = 0; p < polys_.size(); ++p) {
    corner_offset_[p] = total;
    total += (int)polys_[p].size();
  }
  corner_class_.assign(total, -1);
  cones_.clear();

  for (int p = 0; p < (int)polys_.size(); ++p) {
    for (int v = 0; v < (int)polys_[p].size(); ++v) {
      if (corner_class_[corner_index(p, v)] >= 0) continue;
      ConePoint cone;
      std::vector<Vec2> sector_lows;
      int cp = p, cv = v;
      do {
        corner_class_[corner_index(cp, cv)] = (int)cones_.size();
        cone.corners.emplace_back(cp, cv);
        sector_lows.push_back(edge_vector(cp, cv));
        auto [np, nv] = next_corner_ccw(*this, cp, cv);
        cp = np;
        cv = nv;
      } while (!(cp == p && cv == v));
      cone.angle_multiple = winding_of(sector_lows);
      if (cone.angle_multiple < 1) fail(Errc::internal, "cone angle below 2*pi");
      cones_.push_back(std::move(cone));
    }
  }

  int vertices = (int)cones_.size();
  int edges = total / 2;
  int faces = (int)polys_.size();
  int chi = vertices - edges + faces;
  if (chi % 2 != 0) fail(Errc::internal, "odd Euler characteristic");
  genus_ = (2 - chi) / 2;
  if (genus_ < 0) fail(Errc::invariant_violation, "negative genus");

  int order_sum = 0;
  for (const auto& c : cones_) order_sum += c.order();
  if (order_sum != 2 * genus_ - 2)
    fail(Errc::invariant_violation, "cone orders violate Gauss-Bonnet");
}

std::vector<int> TranslationSurface::stratum_orders() const {
  std::vector<int> out;
  for (const auto& c : cones_)
    if (c.order() > 0) out.push_back(c.order());
  std::sort(out.rbegin(), out.rend());
  return out;
}

int TranslationSurface::marked_point_count() const {
  int n = 0;
  for (const auto& c : cones_)
    if (c.order() == 0) ++n;
  return n;
}

ExactReal TranslationSurface::area() const {
  if (float_mode_) fail(Errc::float_mode_unsupported, "exact area of a float-mode surface");
  ExactReal two_a;
  for (const auto& poly : polys_) {
    int n = (int)poly.size();
    for (int i = 0; i < n; ++i) two_a += cross(poly[i], poly[(i + 1) % n]);
  }
  return Rational(1, 2) * two_a;
}

double TranslationSurface::area_approx() const {
  double two_a = 0;
  for (const auto& poly : polys_f_) {
    int n = (int)poly.size();
    for (int i = 0; i < n; ++i)
      two_a += poly[i].x * poly[(i + 1) % n].y - poly[i].y * poly[(i + 1) % n].x;
  }
  return two_a / 2;
}

double TranslationSurface::diameter_upper_bound() const {
  // Any two points connect through a chain of polygons; the sum of polygon
  // diameters bounds the distance.
  double sum = 0;
  for (const auto& poly : polys_f_) {
    double dm = 0;
    for (size_t i = 0; i < poly.size(); ++i)
      for (size_t j = i + 1; j < poly.size(); ++j)
        dm = std::max(dm, std::hypot(poly[i].x - poly[j].x, poly[i].y - poly[j].y));
    sum += dm;
  }
  return sum;
}

TranslationSurface TranslationSurface::apply(const Mat2& m) const {
  if (m.exact() && !float_mode_) {
    ExactReal det = m.det_exact();
    if (det.is_zero()) fail(Errc::singular_matrix, "apply with singular matrix");
    if (det.sign() < 0) fail(Errc::orientation_reversing, "apply with negative determinant");
    std::vector<std::vector<Vec2>> polys(polys_.size());
    for (size_t p = 0; p < polys_.size(); ++p)
      for (const auto& v : polys_[p]) polys[p].push_back(m.apply(v));
    return build(std::move(polys), glue_);
  }
  double det = m.det_approx();
  if (det == 0) fail(Errc::singular_matrix, "apply with singular matrix");
  if (det < 0) fail(Errc::orientation_reversing, "apply with negative determinant");
  TranslationSurface s;
  s.float_mode_ = true;
  s.field_d_ = 0;
  s.glue_ = glue_;
  s.cones_ = cones_;
  s.corner_class_ = corner_class_;
  s.corner_offset_ = corner_offset_;
  s.genus_ = genus_;
  s.polys_f_.resize(polys_f_.size());
  for (size_t p = 0; p < polys_f_.size(); ++p)
    for (const auto& v : polys_f_[p]) s.polys_f_[p].push_back(m.apply(v));
  return s;
}

bool TranslationSurface::same_presentation(const TranslationSurface& o) const {
  if (float_mode_ || o.float_mode_) return false;
  if (polys_.size() != o.polys_.size() || glue_ != o.glue_) return false;
  for (size_t p = 0; p < polys_.size(); ++p) {
    if (polys_[p].size() != o.polys_[p].size()) return false;
    for (size_t v = 0; v < polys_[p].size(); ++v)
      if (!(polys_[p][v] == o.polys_[p][v])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

std::vector<Vec2> rect(const ExactReal& x0, const ExactReal& y0, const ExactReal& x1,
                       const ExactReal& y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

}  // namespace

TranslationSurface TranslationSurface::torus() {
  std::vector<std::vector<GluedEdge>> glue{{{0, 2}, {0, 3}, {0, 0}, {0, 1}}};
  return build({rect(0, 0, 1, 1)}, std::move(glue));
}

TranslationSurface TranslationSurface::octagon() {
  ExactReal s(Rational(0), Rational(1, 2), 2);  // sqrt(2)/2
  ExactReal one(1), zero(0);
  std::vector<Vec2> oct{{zero, zero},
                        {one, zero},
                        {one + s, s},
                        {one + s, one + s},
                        {one, one + s + s},
                        {zero, one + s + s},
                        {-s, one + s},
                        {-s, s}};
  std::vector<GluedEdge> g(8);
  for (int i = 0; i < 8; ++i) g[i] = {0, (i + 4) % 8};
  return build({oct}, {g});
}

TranslationSurface TranslationSurface::golden_l() {
  ExactReal phi(Rational(1, 2), Rational(1, 2), 5);
  std::vector<std::vector<Vec2>> polys{rect(0, 0, 1, 1), rect(1, 0, phi, 1), rect(0, 1, 1, phi)};
  // edges: 0 bottom, 1 right, 2 top, 3 left
  std::vector<std::vector<GluedEdge>> glue{
      {{2, 2}, {1, 3}, {2, 0}, {1, 1}},   // R0: b<->R2.t, r<->R1.l, t<->R2.b, l<->R1.r
      {{1, 2}, {0, 3}, {1, 0}, {0, 1}},   // R1: b<->R1.t, r<->R0.l
      {{0, 2}, {2, 3}, {0, 0}, {2, 1}}};  // R2: b<->R0.t, r<->R2.l, t<->R0.b
  return build(std::move(polys), std::move(glue));
}

TranslationSurface TranslationSurface::origami(const std::vector<int>& right,
                                               const std::vector<int>& up) {
  int n = (int)right.size();
  if (n == 0 || (int)up.size() != n)
    fail(Errc::invariant_violation, "origami permutations must be nonempty and equal size");
  auto check_perm = [n](const std::vector<int>& perm) {
    std::vector<char> hit(n, 0);
    for (int v : perm) {
      if (v < 0 || v >= n || hit[v]) fail(Errc::invariant_violation, "not a permutation");
      hit[v] = 1;
    }
  };
  check_perm(right);
  check_perm(up);
  std::vector<int> right_inv(n), up_inv(n);
  for (int i = 0; i < n; ++i) {
    right_inv[right[i]] = i;
    up_inv[up[i]] = i;
  }
  std::vector<std::vector<Vec2>> polys(n, rect(0, 0, 1, 1));
  std::vector<std::vector<GluedEdge>> glue(n);
  for (int i = 0; i < n; ++i)
    glue[i] = {{up_inv[i], 2}, {right[i], 3}, {up[i], 0}, {right_inv[i], 1}};
  return build(std::move(polys), std::move(glue));
}

namespace {

std::vector<int> parse_cycles(const std::string& text, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace((unsigned char)text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail(Errc::syntax_error, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace((unsigned char)text[i]) || text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit((unsigned char)text[i])) fail(Errc::syntax_error, "bad cycle entry");
      int v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > n) fail(Errc::syntax_error, "cycle label out of range");
      cyc.push_back(v - 1);
    }
    if (i >= text.size()) fail(Errc::syntax_error, "unterminated cycle");
    ++i;
    for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return img;
}

int max_cycle_label(const std::string& text) {
  int mx = 0, cur = 0;
  for (char c : text) {
    if (std::isdigit((unsigned char)c)) {
      cur = cur * 10 + (c - '0');
      mx = std::max(mx, cur);
    } else {
      cur = 0;
    }
  }
  return mx;
}

}  // namespace

TranslationSurface TranslationSurface::origami_cycles(const std::string& right,
                                                      const std::string& up, int squares) {
  int n = squares > 0 ? squares : std::max(max_cycle_label(right), max_cycle_label(up));
  if (n == 0) fail(Errc::syntax_error, "origami with no squares");
  return origami(parse_cycles(right, n), parse_cycles(up, n));
}

TranslationSurface TranslationSurface::perturbed_l(const Rational& ex, const Rational& ey) {
  ExactReal a = ExactReal(1) + ExactReal(ex);
  ExactReal c = ExactReal(1) + ExactReal(ey);
  if (a.sign() <= 0 || c.sign() <= 0)
    fail(Errc::invariant_violation, "perturbed-l requires eps > -1");
  ExactReal b = a + ExactReal(1), d = c + ExactReal(1);
  std::vector<std::vector<Vec2>> polys{rect(0, 0, a, c), rect(a, ExactReal(0), b, c),
                                       rect(0, c, a, d)};
  std::vector<std::vector<GluedEdge>> glue{
      {{2, 2}, {1, 3}, {2, 0}, {1, 1}},
      {{1, 2}, {0, 3}, {1, 0}, {0, 1}},
      {{0, 2}, {2, 3}, {0, 0}, {2, 1}}};
  return build(std::move(polys), std::move(glue));
}

TranslationSurface TranslationSurface::from_builder_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::string name;
  in >> name;
  if (name == "torus") return torus();
  if (name == "octagon") return octagon();
  if (name == "golden-l") return golden_l();
  if (name == "origami") {
    std::string rest;
    std::getline(in, rest);
    // Two permutations, separated by whitespace outside parentheses.
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : rest) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (std::isspace((unsigned char)ch) && depth == 0) {
        if (!cur.empty()) {
          parts.push_back(cur);
          cur.clear();
        }
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.size() != 2) fail(Errc::syntax_error, "origami expects two permutations");
    return origami_cycles(parts[0], parts[1]);
  }
  if (name == "perturbed-l") {
    std::string sx, sy;
    in >> sx >> sy;
    if (sx.empty() || sy.empty()) fail(Errc::syntax_error, "perturbed-l expects eps_x eps_y");
    return perturbed_l(parse_rational(sx), parse_rational(sy));
  }
  fail(Errc::syntax_error, "unknown builder '" + name + "'");
}

}  // namespace flatlab
