#include "flatlab/triangulation.hpp"

#include <map>
#include <vector>

namespace flatlab {

MarkedTriangulation MarkedTriangulation::from_surface(const TranslationSurface& s) {
  if (s.float_mode()) fail(Errc::float_mode_unsupported, "triangulation of a float-mode surface");
  MarkedTriangulation out;
  out.field_d_ = s.field_disc();
  out.class_count_ = (int)s.cone_points().size();

  // Fan triangulation: polygon p with vertices v0..v_{n-1} becomes triangles
  // (v0, v_{j+1}, v_{j+2}).  Boundary side of polygon edge e:
  //   e == 0     -> (first tri, side 0)
  //   1..n-2     -> (tri e-1, side 1)
  //   e == n-1   -> (last tri, side 2)
  std::vector<int> tri_base(s.polygon_count());
  int total = 0;
  for (int p = 0; p < s.polygon_count(); ++p) {
    tri_base[p] = total;
    total += s.edge_count(p) - 2;
  }
  out.tris_.resize(total);

  auto boundary_slot = [&](int p, int e) -> std::pair<int, int> {
    int n = s.edge_count(p);
    if (e == 0) return {tri_base[p], 0};
    if (e == n - 1) return {tri_base[p] + n - 3, 2};
    return {tri_base[p] + e - 1, 1};
  };

  for (int p = 0; p < s.polygon_count(); ++p) {
    const auto& poly = s.polygon(p);
    int n = (int)poly.size();
    for (int j = 0; j + 2 < n; ++j) {
      Triangle& t = out.tris_[tri_base[p] + j];
      const Vec2 &a = poly[0], &b = poly[j + 1], &c = poly[j + 2];
      t.side[0] = b - a;
      t.side[1] = c - b;
      t.side[2] = a - c;
      t.corner_class[0] = s.cone_class(p, 0);
      t.corner_class[1] = s.cone_class(p, j + 1);
      t.corner_class[2] = s.cone_class(p, j + 2);
      // interior fan diagonals
      if (j > 0) {
        t.nbr[0] = tri_base[p] + j - 1;
        t.nside[0] = 2;
      }
      if (j + 3 < n) {
        t.nbr[2] = tri_base[p] + j + 1;
        t.nside[2] = 0;
      }
    }
    for (int e = 0; e < n; ++e) {
      auto [t1, s1] = boundary_slot(p, e);
      GluedEdge g = s.partner(p, e);
      auto [t2, s2] = boundary_slot(g.poly, g.edge);
      out.tris_[t1].nbr[s1] = t2;
      out.tris_[t1].nside[s1] = s2;
    }
  }
  return out;
}

Vec2 MarkedTriangulation::corner_position(int t, int i) const {
  const Triangle& tr = tris_[t];
  if (i == 0) return Vec2();
  if (i == 1) return tr.side[0];
  return tr.side[0] + tr.side[1];
}

std::pair<int, int> MarkedTriangulation::next_corner_ccw(int t, int i) const {
  // Cross the side incident to corner i on the sector's upper boundary.
  int s = (i + 2) % 3;
  return {tris_[t].nbr[s], tris_[t].nside[s]};
}

int MarkedTriangulation::edge_incircle(int t, int s) const {
  const Triangle& tr = tris_[t];
  int t2 = tr.nbr[s], s2 = tr.nside[s];
  Vec2 a;  // corner s at the origin
  Vec2 b = tr.side[s];
  Vec2 c = b + tr.side[(s + 1) % 3];
  // Partner develops with its corner s2 at b and corner s2+1 at a.
  Vec2 p = a + tris_[t2].side[(s2 + 1) % 3];
  return incircle(a, b, c, p);
}

void MarkedTriangulation::flip(int t, int s) {
  delaunay_flag_ = false;
  Triangle tr1 = tris_[t];
  int t2 = tr1.nbr[s], s2 = tr1.nside[s];
  if (t2 == t) fail(Errc::internal, "triangle glued to itself");
  Triangle tr2 = tris_[t2];

  Vec2 a;  // corner s of t
  Vec2 b = tr1.side[s];
  Vec2 c = b + tr1.side[(s + 1) % 3];
  Vec2 p = a + tr2.side[(s2 + 1) % 3];

  if (orient(a, p, c) <= 0 || orient(p, b, c) <= 0)
    fail(Errc::internal, "flip on a non-convex quad");

  int cl_a = tr1.corner_class[s], cl_b = tr1.corner_class[(s + 1) % 3],
      cl_c = tr1.corner_class[(s + 2) % 3], cl_p = tr2.corner_class[(s2 + 2) % 3];

  // Old outer slots -> new slots after the flip.
  std::map<std::pair<int, int>, std::pair<int, int>> renames{
      {{t, (s + 1) % 3}, {t2, 1}},
      {{t, (s + 2) % 3}, {t, 2}},
      {{t2, (s2 + 1) % 3}, {t, 0}},
      {{t2, (s2 + 2) % 3}, {t2, 0}},
  };
  struct Outer {
    std::pair<int, int> new_slot, partner;
  };
  std::vector<Outer> outers;
  for (const auto& [old_slot, new_slot] : renames) {
    const Triangle& o = old_slot.first == t ? tr1 : tr2;
    std::pair<int, int> partner{o.nbr[old_slot.second], o.nside[old_slot.second]};
    auto it = renames.find(partner);
    if (it != renames.end()) partner = it->second;
    outers.push_back({new_slot, partner});
  }

  Triangle n1, n2;  // n1 = (A, P, C) in slot t, n2 = (P, B, C) in slot t2
  n1.side[0] = p - a;
  n1.side[1] = c - p;
  n1.side[2] = a - c;
  n1.corner_class[0] = cl_a;
  n1.corner_class[1] = cl_p;
  n1.corner_class[2] = cl_c;
  n2.side[0] = b - p;
  n2.side[1] = c - b;
  n2.side[2] = p - c;
  n2.corner_class[0] = cl_p;
  n2.corner_class[1] = cl_b;
  n2.corner_class[2] = cl_c;
  n1.nbr[1] = t2;
  n1.nside[1] = 2;
  n2.nbr[2] = t;
  n2.nside[2] = 1;
  tris_[t] = n1;
  tris_[t2] = n2;

  for (const auto& o : outers) {
    tris_[o.new_slot.first].nbr[o.new_slot.second] = o.partner.first;
    tris_[o.new_slot.first].nside[o.new_slot.second] = o.partner.second;
    tris_[o.partner.first].nbr[o.partner.second] = o.new_slot.first;
    tris_[o.partner.first].nside[o.partner.second] = o.new_slot.second;
  }
}

void MarkedTriangulation::make_delaunay() {
  std::vector<std::pair<int, int>> stack;
  for (int t = 0; t < (int)tris_.size(); ++t)
    for (int s = 0; s < 3; ++s) stack.emplace_back(t, s);
  long flips = 0;
  while (!stack.empty()) {
    auto [t, s] = stack.back();
    stack.pop_back();
    if (edge_incircle(t, s) <= 0) continue;
    int t2 = tris_[t].nbr[s];
    flip(t, s);
    if (++flips > 10000000L) fail(Errc::internal, "delaunay flip cap exceeded");
    stack.emplace_back(t, 0);
    stack.emplace_back(t, 2);
    stack.emplace_back(t2, 0);
    stack.emplace_back(t2, 1);
  }
  delaunay_flag_ = true;
}

ExactReal MarkedTriangulation::min_side_length_sq() const {
  ExactReal best;
  bool first = true;
  for (const auto& tr : tris_)
    for (const auto& v : tr.side) {
      ExactReal l = v.length_sq();
      if (first || l < best) {
        best = l;
        first = false;
      }
    }
  return best;
}

ExactReal MarkedTriangulation::max_side_length_sq() const {
  ExactReal best;
  for (const auto& tr : tris_)
    for (const auto& v : tr.side) {
      ExactReal l = v.length_sq();
      if (l > best) best = l;
    }
  return best;
}

bool MarkedTriangulation::check_consistent() const {
  for (int t = 0; t < (int)tris_.size(); ++t) {
    const Triangle& tr = tris_[t];
    if (!(tr.side[0] + tr.side[1] + tr.side[2]).is_zero()) return false;
    if (cross(tr.side[0], tr.side[1]).sign() <= 0) return false;
    for (int s = 0; s < 3; ++s) {
      int t2 = tr.nbr[s], s2 = tr.nside[s];
      if (t2 < 0 || t2 >= (int)tris_.size() || s2 < 0 || s2 >= 3) return false;
      if (tris_[t2].nbr[s2] != t || tris_[t2].nside[s2] != s) return false;
      if (!(tr.side[s] + tris_[t2].side[s2]).is_zero()) return false;
      if (tr.corner_class[s] != tris_[t2].corner_class[(s2 + 1) % 3]) return false;
    }
  }
  return true;
}

MarkedTriangulation delaunay(const TranslationSurface& s) {
  MarkedTriangulation t = MarkedTriangulation::from_surface(s);
  t.make_delaunay();
  return t;
}

}  // namespace flatlab
