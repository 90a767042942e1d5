#include "flatlab/saddle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "flatlab/parallel.hpp"

namespace flatlab {

namespace {

// One wavefront work item: rays from the origin (the start cone point)
// entering triangle t through its side s, whose endpoints develop to a
// (corner s) and b (corner s+1).  The open direction cone (lo, hi) is
// counter-clockwise from lo to hi and spans less than pi.
struct Job {
  int t, s;
  Vec2 a, b;
  Vec2 lo, hi;
};

// Exact min squared distance from the origin to the part of segment [a,b]
// cut out by the cone.
ExactReal cone_segment_min_dist_sq(const Vec2& a, const Vec2& b, const Vec2& lo, const Vec2& hi) {
  Vec2 ab = b - a;
  // Ray d crosses the segment at parameter cross(d,a) / cross(d, a-b).
  auto param = [&](const Vec2& d) { return cross(d, a) / cross(d, a - b); };
  ExactReal tmin = param(hi), tmax = param(lo);
  ExactReal zero(0), one(1);
  if (tmin < zero) tmin = zero;
  if (tmax > one) tmax = one;
  if (tmax < tmin) tmax = tmin;
  auto at = [&](const ExactReal& t) { return (a + t * ab).length_sq(); };
  ExactReal denom = ab.length_sq();
  ExactReal tstar = -dot(a, ab) / denom;
  if (tstar > tmin && tstar < tmax) return at(tstar);
  ExactReal lo_v = at(tmin), hi_v = at(tmax);
  return lo_v < hi_v ? lo_v : hi_v;
}

void explore_corner(const MarkedTriangulation& tri, int t0, int i0, const ExactReal& bound_sq,
                    std::size_t max_items, std::vector<SaddleConnection>& out,
                    std::atomic<std::size_t>& work) {
  const Triangle& root = tri.tri(t0);
  // Corner sector: from the outgoing side to the diagonal toward corner i+2.
  Vec2 near_end = root.side[i0];                              // corner i0+1
  Vec2 far_end = root.side[i0] + root.side[(i0 + 1) % 3];     // corner i0+2
  int exit_s = (i0 + 1) % 3;
  std::vector<Job> stack;
  stack.push_back({root.nbr[exit_s], root.nside[exit_s], far_end, near_end, near_end, far_end});
  int start_class = root.corner_class[i0];
  int start_corner = 3 * t0 + i0;

  while (!stack.empty()) {
    if (work.fetch_add(1, std::memory_order_relaxed) > max_items)
      fail(Errc::bound_too_large, "saddle connection search exceeded the work cap");
    Job j = stack.back();
    stack.pop_back();
    if (cone_segment_min_dist_sq(j.a, j.b, j.lo, j.hi) > bound_sq) continue;
    const Triangle& tr = tri.tri(j.t);
    int s = j.s;
    Vec2 c = j.b + tr.side[(s + 1) % 3];  // apex: corner s+2 developed
    int cl = cross(j.lo, c).sign();
    int ch = cross(c, j.hi).sign();
    int side_bc = (s + 1) % 3;  // b -> c
    int side_ca = (s + 2) % 3;  // c -> a
    if (cl > 0 && ch > 0) {
      if (c.length_sq() <= bound_sq) {
        out.push_back({c, c.length_sq(), start_class, tr.corner_class[(s + 2) % 3], start_corner,
                       3 * j.t + (s + 2) % 3});
      }
      // split at the apex; rays exactly toward c are blocked by the cone point
      stack.push_back({tr.nbr[side_bc], tr.nside[side_bc], c, j.b, j.lo, c});
      stack.push_back({tr.nbr[side_ca], tr.nside[side_ca], j.a, c, c, j.hi});
    } else if (cl <= 0) {
      // whole cone passes on the a-side of the apex
      stack.push_back({tr.nbr[side_ca], tr.nside[side_ca], j.a, c, j.lo, j.hi});
    } else {
      stack.push_back({tr.nbr[side_bc], tr.nside[side_bc], c, j.b, j.lo, j.hi});
    }
  }
}

bool saddle_order(const SaddleConnection& x, const SaddleConnection& y) {
  if (x.length_sq != y.length_sq) return x.length_sq < y.length_sq;
  if (!(x.holonomy == y.holonomy)) return dir_less(x.holonomy, y.holonomy);
  if (x.start_corner != y.start_corner) return x.start_corner < y.start_corner;
  return x.end_corner < y.end_corner;
}

}  // namespace

std::vector<SaddleConnection> saddle_connections_sq(const MarkedTriangulation& tri,
                                                    const ExactReal& bound_sq,
                                                    const SearchOptions& opt) {
  int n = tri.size();
  std::vector<std::vector<SaddleConnection>> per_corner(3 * n);
  std::atomic<bool> overflow{false};
  std::size_t per_corner_cap = opt.max_frontier / std::max(1, 3 * n) + 1024;

  parallel_for(3 * n, opt.workers, [&](int cid) {
    int t = cid / 3, i = cid % 3;
    // the directed side at this corner is itself a saddle connection
    const Triangle& tr = tri.tri(t);
    Vec2 side = tr.side[i];
    if (side.length_sq() <= bound_sq) {
      per_corner[cid].push_back({side, side.length_sq(), tr.corner_class[i],
                                 tr.corner_class[(i + 1) % 3], cid, 3 * t + (i + 1) % 3});
    }
    explore_corner(tri, t, i, bound_sq, per_corner_cap, per_corner[cid], overflow);
  });
  if (overflow.load())
    fail(Errc::bound_too_large, "saddle connection search exceeded the work cap");

  std::vector<SaddleConnection> out;
  for (auto& v : per_corner) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  }
  std::sort(out.begin(), out.end(), saddle_order);
  return out;
}

std::vector<SaddleConnection> saddle_connections(const TranslationSurface& s, double bound,
                                                 const SearchOptions& opt) {
  if (bound < 0) fail(Errc::invariant_violation, "negative length bound");
  MarkedTriangulation tri = delaunay(s);
  Rational b(bound);
  return saddle_connections_sq(tri, ExactReal(b * b), opt);
}

Systole systole(const TranslationSurface& s) {
  MarkedTriangulation tri = delaunay(s);
  ExactReal bound_sq = tri.min_side_length_sq();
  auto conns = saddle_connections_sq(tri, bound_sq);
  if (conns.empty()) fail(Errc::internal, "no saddle connection at the delaunay bound");
  Systole out;
  out.length_sq = conns.front().length_sq;
  out.length = out.length_sq.sqrt_in_field(s.field_disc());
  out.approx = std::sqrt(out.length_sq.approx());
  return out;
}

ThickPartQuery in_thick_part(const TranslationSurface& s, double epsilon) {
  if (epsilon < 0) fail(Errc::invariant_violation, "negative epsilon");
  ThickPartQuery q;
  q.epsilon = epsilon;
  q.systole_sq = systole(s).length_sq;
  Rational e(epsilon);
  q.member = !(q.systole_sq < ExactReal(e * e));
  return q;
}

ExactReal min_virtual_triangle_area(const TranslationSurface& s, double bound,
                                    const SearchOptions& opt) {
  auto conns = saddle_connections(s, bound, opt);
  // the area statistic depends only on the holonomy set
  std::vector<Vec2> hols;
  for (const auto& c : conns) {
    bool dup = false;
    for (const auto& h : hols)
      if (h == c.holonomy) {
        dup = true;
        break;
      }
    if (!dup) hols.push_back(c.holonomy);
  }
  bool found = false;
  ExactReal best;
  for (size_t i = 0; i < hols.size(); ++i)
    for (size_t j = i + 1; j < hols.size(); ++j) {
      ExactReal cr = cross(hols[i], hols[j]);
      if (cr.sign() == 0) continue;
      if (cr.sign() < 0) cr = -cr;
      cr = Rational(1, 2) * cr;
      if (!found || cr < best) {
        best = cr;
        found = true;
      }
    }
  if (!found)
    fail(Errc::insufficient_saddle_connections,
         "need two non-parallel saddle connections within the bound");
  return best;
}

}  // namespace flatlab
