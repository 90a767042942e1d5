#include "flatlab/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace flatlab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CellComplex delaunay_cells(const MarkedTriangulation& tri) {
  if (!tri.delaunay_flag()) fail(Errc::internal, "cells require a delaunay triangulation");
  int n = tri.size();
  UnionFind uf(n);
  // cocircular interior edges merge their triangles into one inscribed cell
  std::vector<std::array<bool, 3>> internal(n, {false, false, false});
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < 3; ++s) {
      if (internal[t][s]) continue;
      if (tri.edge_incircle(t, s) == 0) {
        internal[t][s] = true;
        internal[tri.tri(t).nbr[s]][tri.tri(t).nside[s]] = true;
        uf.unite(t, tri.tri(t).nbr[s]);
      }
    }

  std::map<int, int> cell_id;
  for (int t = 0; t < n; ++t) {
    int r = uf.find(t);
    if (!cell_id.count(r)) cell_id.emplace(r, (int)cell_id.size());
  }

  // Walk each cell boundary counter-clockwise.  From a boundary side, rotate
  // around its end vertex through internal (cocircular) edges until the next
  // boundary side.
  auto next_boundary = [&](int t, int s) -> std::pair<int, int> {
    int ct = t, cs = (s + 1) % 3;
    while (internal[ct][cs]) {
      int nt = tri.tri(ct).nbr[cs], ns = tri.tri(ct).nside[cs];
      ct = nt;
      cs = (ns + 1) % 3;
    }
    return {ct, cs};
  };

  CellComplex out;
  out.cells.resize(cell_id.size());
  std::map<std::pair<int, int>, std::pair<int, int>> slot_of;  // (tri,side) -> (cell,pos)
  std::vector<char> visited_side(3 * n, 0);
  for (int t0 = 0; t0 < n; ++t0)
    for (int s0 = 0; s0 < 3; ++s0) {
      if (internal[t0][s0] || visited_side[3 * t0 + s0]) continue;
      int cell = cell_id[uf.find(t0)];
      if (!out.cells[cell].empty())
        fail(Errc::internal, "cell with more than one boundary cycle");
      int t = t0, s = s0;
      Vec2 total;
      do {
        visited_side[3 * t + s] = 1;
        slot_of[{t, s}] = {cell, (int)out.cells[cell].size()};
        out.cells[cell].push_back({tri.tri(t).side[s], -1, -1});
        total = total + tri.tri(t).side[s];
        auto [nt, ns] = next_boundary(t, s);
        t = nt;
        s = ns;
      } while (!(t == t0 && s == s0));
      if (!total.is_zero()) fail(Errc::internal, "cell boundary does not close");
    }

  for (int t = 0; t < n; ++t)
    for (int s = 0; s < 3; ++s) {
      if (internal[t][s]) continue;
      auto me = slot_of.at({t, s});
      auto other = slot_of.at({tri.tri(t).nbr[s], tri.tri(t).nside[s]});
      out.cells[me.first][me.second].partner_cell = other.first;
      out.cells[me.first][me.second].partner_pos = other.second;
    }
  for (const auto& cell : out.cells)
    if (cell.empty()) fail(Errc::internal, "cell with empty boundary");
  return out;
}

namespace {

std::string code_for_flag(const CellComplex& cc, int c0, int e0) {
  int n = (int)cc.cells.size();
  std::vector<int> order(n, -1), entry(n, 0);
  std::vector<int> queue;
  order[c0] = 0;
  entry[c0] = e0;
  queue.push_back(c0);
  std::ostringstream out;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    int deg = (int)cc.cells[c].size();
    out << "c" << deg << ";";
    for (int k = 0; k < deg; ++k) {
      const auto& edge = cc.cells[c][(entry[c] + k) % deg];
      int pc = edge.partner_cell;
      if (order[pc] < 0) {
        order[pc] = (int)queue.size();
        entry[pc] = edge.partner_pos;
        queue.push_back(pc);
      }
      int pdeg = (int)cc.cells[pc].size();
      int off = ((edge.partner_pos - entry[pc]) % pdeg + pdeg) % pdeg;
      out << edge.vec.x.str() << "," << edge.vec.y.str() << ">" << order[pc] << "." << off << ";";
    }
  }
  return out.str();
}

}  // namespace

std::string canonical_code(const TranslationSurface& s) {
  if (s.float_mode()) fail(Errc::float_mode_unsupported, "canonical code of a float-mode surface");
  CellComplex cc = delaunay_cells(delaunay(s));
  std::string best;
  for (int c = 0; c < (int)cc.cells.size(); ++c)
    for (int e = 0; e < (int)cc.cells[c].size(); ++e) {
      std::string code = code_for_flag(cc, c, e);
      if (best.empty() || code < best) best = std::move(code);
    }
  return best;
}

bool equivalent(const TranslationSurface& a, const TranslationSurface& b) {
  if (a.float_mode() || b.float_mode())
    fail(Errc::float_mode_unsupported, "equivalence of float-mode surfaces");
  if (a.field_disc() != b.field_disc() && a.field_disc() != 0 && b.field_disc() != 0)
    fail(Errc::field_mismatch, "equivalence across different quadratic fields");
  return canonical_code(a) == canonical_code(b);
}

}  // namespace flatlab
