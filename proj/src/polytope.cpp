#include "latcover/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latcover/error.hpp"

namespace latcover {

int orient2(const Vec& a, const Vec& b, const Vec& c) {
  return cross2(b - a, c - a).sign();
}

int orient3(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  return cross3(b - a, c - a).dot(d - a).sign();
}

namespace {

std::vector<Vec> sorted_dedup(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// 2D chart for points of a plane with normal n: drop the axis with the
// largest |n_i| (projection is injective on the plane).
int chart_drop_axis(const Vec& n) {
  int drop = 0;
  Rat best = n[0].abs();
  for (int i = 1; i < 3; ++i) {
    Rat a = n[i].abs();
    if (a > best) {
      best = a;
      drop = i;
    }
  }
  return drop;
}

Vec chart_project(const Vec& p, int drop) {
  Vec q(2);
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != drop) q[k++] = p[i];
  return q;
}

// Monotone chain; returns CCW cycle of extreme points (collinear middles
// dropped). Input must be sorted and deduplicated.
std::vector<int> ccw_hull_indices(const std::vector<Vec>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  auto build = [&](std::vector<int>& out, bool lower) {
    for (int ii = 0; ii < n; ++ii) {
      int i = lower ? ii : n - 1 - ii;
      while (out.size() >= 2) {
        int o = orient2(pts[out[out.size() - 2]], pts[out[out.size() - 1]], pts[i]);
        if (o > 0) break;
        out.pop_back();
      }
      out.push_back(i);
    }
  };
  std::vector<int> lo, hi;
  build(lo, true);
  build(hi, false);
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

Polytope Polytope::from_cycle2(std::vector<Vec> ccw) {
  int n = static_cast<int>(ccw.size());
  // rotate so the lexicographically smallest vertex comes first
  int start = 0;
  for (int i = 1; i < n; ++i)
    if (ccw[i] < ccw[start]) start = i;
  std::rotate(ccw.begin(), ccw.begin() + start, ccw.end());

  Polytope p;
  p.dim_ = 2;
  p.vertices_ = std::move(ccw);
  for (int i = 0; i < n; ++i) {
    const Vec& u = p.vertices_[i];
    const Vec& v = p.vertices_[(i + 1) % n];
    Vec d = v - u;
    Vec normal{d[1], -d[0]};
    p.facets_.push_back(canonicalize(Halfspace(normal, Rat(0))));
    p.facets_.back().offset = p.facets_.back().normal.dot(u);
    p.cycles_.push_back({i, (i + 1) % n});
  }
  p.compute_volume();
  return p;
}

Polytope Polytope::hull2(std::vector<Vec> pts) {
  pts = sorted_dedup(std::move(pts));
  if (pts.size() < 3) throw Error(Errc::DegenerateInput, "need 3 points spanning E^2");
  std::vector<int> cyc = ccw_hull_indices(pts);
  if (cyc.size() < 3) throw Error(Errc::DegenerateInput, "points are collinear");
  std::vector<Vec> ccw;
  ccw.reserve(cyc.size());
  for (int i : cyc) ccw.push_back(pts[i]);
  return from_cycle2(std::move(ccw));
}

Polytope Polytope::hull3(std::vector<Vec> pts) {
  pts = sorted_dedup(std::move(pts));
  int n = static_cast<int>(pts.size());
  if (n < 4) throw Error(Errc::DegenerateInput, "need 4 points spanning E^3");

  // initial affinely independent quadruple
  int i1 = 1;
  int i2 = -1, i3 = -1;
  for (int i = 2; i < n && i2 < 0; ++i)
    if (!cross3(pts[i1] - pts[0], pts[i] - pts[0]).is_zero()) i2 = i;
  if (i2 >= 0)
    for (int i = 2; i < n && i3 < 0; ++i)
      if (i != i2 && orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
  if (i2 < 0 || i3 < 0) throw Error(Errc::DegenerateInput, "points do not span E^3");

  struct Tri {
    int a, b, c;
    Vec n;
    Rat off;
    bool alive = true;
  };
  std::vector<Tri> tris;
  std::map<std::pair<int, int>, int> owner;  // directed edge -> triangle

  auto add_tri = [&](int a, int b, int c) {
    Tri t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.n = cross3(pts[b] - pts[a], pts[c] - pts[a]);
    t.off = t.n.dot(pts[a]);
    int id = static_cast<int>(tris.size());
    tris.push_back(std::move(t));
    owner[{a, b}] = id;
    owner[{b, c}] = id;
    owner[{c, a}] = id;
    return id;
  };

  {
    int o = orient3(pts[0], pts[i1], pts[i2], pts[i3]);
    int a = 0, b = i1, c = i2;
    if (o > 0) std::swap(b, c);  // make i3 lie on the negative side
    add_tri(a, b, c);
    add_tri(a, c, i3);
    add_tri(c, b, i3);
    add_tri(b, a, i3);
  }

  for (int p = 0; p < n; ++p) {
    if (p == 0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
      if (tris[t].alive && (tris[t].n.dot(pts[p]) - tris[t].off).sign() > 0)
        visible.push_back(t);
    if (visible.empty()) continue;  // inside or on the surface: not extreme

    std::vector<char> vis(tris.size(), 0);
    for (int t : visible) vis[t] = 1;
    std::vector<std::pair<int, int>> horizon;
    for (int t : visible) {
      const Tri& tr = tris[t];
      const std::array<std::pair<int, int>, 3> es{{{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}}};
      for (auto [u, v] : es) {
        auto it = owner.find({v, u});
        if (it == owner.end() || !vis[it->second]) horizon.emplace_back(u, v);
      }
    }
    for (int t : visible) {
      const Tri& tr = tris[t];
      tris[t].alive = false;
      owner.erase({tr.a, tr.b});
      owner.erase({tr.b, tr.c});
      owner.erase({tr.c, tr.a});
    }
    for (auto [u, v] : horizon) add_tri(u, v, p);
  }

  // group coplanar triangles into maximal facets
  std::map<Halfspace, std::vector<int>> groups;  // canonical plane -> point ids
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    Halfspace key = canonicalize(Halfspace(t.n, t.off));
    auto& g = groups[key];
    g.push_back(t.a);
    g.push_back(t.b);
    g.push_back(t.c);
  }

  struct RawFacet {
    Halfspace h;
    std::vector<int> cycle;  // indices into pts
  };
  std::vector<RawFacet> raw;
  std::set<int> used;
  for (auto& [h, ids0] : groups) {
    std::vector<int> ids = ids0;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    int drop = chart_drop_axis(h.normal);
    std::vector<Vec> chart;
    chart.reserve(ids.size());
    for (int id : ids) chart.push_back(chart_project(pts[id], drop));
    // chart points may repeat order differently: ids are sorted by 3D lex,
    // ccw_hull_indices needs chart-lex sorting
    std::vector<int> perm(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
      if (chart[x] != chart[y]) return chart[x] < chart[y];
      return ids[x] < ids[y];
    });
    std::vector<Vec> sorted_chart;
    std::vector<int> sorted_ids;
    for (int i : perm) {
      sorted_chart.push_back(chart[i]);
      sorted_ids.push_back(ids[i]);
    }
    std::vector<int> cyc2 = ccw_hull_indices(sorted_chart);
    if (cyc2.size() < 3) throw Error(Errc::Internal, "degenerate facet group");
    std::vector<int> cycle;
    for (int i : cyc2) cycle.push_back(sorted_ids[i]);
    // orient the cycle CCW seen from outside (against the outward normal)
    int s = cross3(pts[cycle[1]] - pts[cycle[0]], pts[cycle[2]] - pts[cycle[0]])
                .dot(h.normal)
                .sign();
    if (s < 0) std::reverse(cycle.begin(), cycle.end());
    for (int id : cycle) used.insert(id);
    raw.push_back(RawFacet{h, std::move(cycle)});
  }

  // final vertex set: only cycle corners survive
  std::vector<int> keep(used.begin(), used.end());
  std::sort(keep.begin(), keep.end(), [&](int x, int y) { return pts[x] < pts[y]; });
  std::vector<int> remap(n, -1);
  Polytope poly;
  poly.dim_ = 3;
  for (size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<int>(i);
    poly.vertices_.push_back(pts[keep[i]]);
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawFacet& x, const RawFacet& y) { return x.h < y.h; });
  for (auto& rf : raw) {
    std::vector<int> cyc;
    cyc.reserve(rf.cycle.size());
    for (int id : rf.cycle) cyc.push_back(remap[id]);
    // canonical rotation: smallest vertex index first, direction preserved
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    poly.facets_.push_back(rf.h);
    poly.cycles_.push_back(std::move(cyc));
  }
  poly.compute_volume();
  return poly;
}

Polytope Polytope::hull(std::vector<Vec> points) {
  if (points.empty()) throw Error(Errc::DegenerateInput, "no points");
  int d = points[0].dim();
  for (const auto& p : points)
    if (p.dim() != d) throw Error(Errc::DimensionMismatch, "mixed point dimensions");
  if (d == 1) {
    auto pts = sorted_dedup(std::move(points));
    if (pts.size() < 2) throw Error(Errc::DegenerateInput, "need 2 distinct points in E^1");
    return segment(pts.front()[0], pts.back()[0]);
  }
  if (d == 2) return hull2(std::move(points));
  if (d == 3) return hull3(std::move(points));
  throw Error(Errc::DimensionUnsupported, "hull supports dim 1..3, got " + std::to_string(d));
}

Polytope Polytope::segment(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw Error(Errc::DegenerateInput, "empty segment");
  Polytope p;
  p.dim_ = 1;
  p.vertices_ = {Vec{lo}, Vec{hi}};
  p.facets_ = {Halfspace(Vec{Rat(-1)}, -lo), Halfspace(Vec{Rat(1)}, hi)};
  p.cycles_ = {{0}, {1}};
  p.volume_ = hi - lo;
  return p;
}

Polytope Polytope::box(const std::vector<Rat>& lo, const std::vector<Rat>& hi) {
  if (lo.size() != hi.size() || lo.empty())
    throw Error(Errc::DimensionMismatch, "box bounds mismatch");
  Polytope p = segment(lo[0], hi[0]);
  for (size_t i = 1; i < lo.size(); ++i) p = product(p, segment(lo[i], hi[i]));
  return p;
}

Polytope Polytope::product(const Polytope& p, const Polytope& q) {
  int d = p.dim_ + q.dim_;
  std::vector<Vec> verts;
  verts.reserve(p.vertices_.size() * q.vertices_.size());
  for (const auto& a : p.vertices_)
    for (const auto& b : q.vertices_) verts.push_back(concat(a, b));
  if (d <= 3) return hull(std::move(verts));

  Polytope r;
  r.dim_ = d;
  std::sort(verts.begin(), verts.end());
  r.vertices_ = std::move(verts);
  Vec zp(p.dim_), zq(q.dim_);
  for (const auto& h : p.facets_) r.facets_.emplace_back(concat(h.normal, zq), h.offset);
  for (const auto& h : q.facets_) r.facets_.emplace_back(concat(zp, h.normal), h.offset);
  std::sort(r.facets_.begin(), r.facets_.end());
  r.volume_ = p.volume_ * q.volume_;
  return r;
}

void Polytope::compute_volume() {
  if (dim_ == 1) {
    volume_ = vertices_[1][0] - vertices_[0][0];
    return;
  }
  if (dim_ == 2) {
    Rat s;
    int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i) s += cross2(vertices_[i], vertices_[(i + 1) % n]);
    volume_ = s / Rat(2);
    if (volume_.sign() <= 0) throw Error(Errc::Internal, "non-positive polygon area");
    return;
  }
  if (dim_ == 3) {
    // simplex fan from vertex 0 (divergence sum after recentering)
    const Vec& apex = vertices_[0];
    Rat s;
    for (const auto& cyc : cycles_) {
      const Vec a0 = vertices_[cyc[0]] - apex;
      for (size_t i = 1; i + 1 < cyc.size(); ++i) {
        const Vec b = vertices_[cyc[i]] - apex;
        const Vec c = vertices_[cyc[i + 1]] - apex;
        s += a0.dot(cross3(b, c));
      }
    }
    volume_ = s / Rat(6);
    if (volume_.sign() <= 0) throw Error(Errc::Internal, "non-positive polytope volume");
    return;
  }
  throw Error(Errc::DimensionUnsupported, "volume from combinatorics needs dim <= 3");
}

Vec Polytope::vertex_barycenter() const {
  Vec c(dim_);
  for (const auto& v : vertices_) c += v;
  Rat inv = Rat(1) / Rat(static_cast<long>(vertices_.size()));
  return inv * c;
}

void Polytope::bounding_box(Vec& lo, Vec& hi) const {
  lo = vertices_[0];
  hi = vertices_[0];
  for (const auto& v : vertices_)
    for (int i = 0; i < dim_; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (hi[i] < v[i]) hi[i] = v[i];
    }
}

Containment Polytope::contains(const Vec& x) const {
  if (x.dim() != dim_) throw Error(Errc::DimensionMismatch, "point dim mismatch");
  Containment c;
  c.inside = true;
  for (const auto& h : facets_) {
    int s = h.eval(x).sign();
    if (s > 0) return Containment{false, false};
    if (s == 0) c.on_boundary = true;
  }
  return c;
}

bool Polytope::contains_polytope(const Polytope& inner) const {
  if (inner.dim_ != dim_) throw Error(Errc::DimensionMismatch, "polytope dim mismatch");
  for (const auto& v : inner.vertices_)
    for (const auto& h : facets_)
      if (h.eval(v).sign() > 0) return false;
  return true;
}

std::optional<Vec> Polytope::symmetry_center() const {
  Vec c = vertex_barycenter();
  std::vector<Vec> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  Vec twoc = Rat(2) * c;
  for (const auto& v : vertices_) {
    Vec mirror = twoc - v;
    if (!std::binary_search(sorted.begin(), sorted.end(), mirror)) return std::nullopt;
  }
  return c;
}

Polytope Polytope::translated(const Vec& t) const {
  Polytope r = *this;
  for (auto& v : r.vertices_) v += t;
  for (auto& h : r.facets_) h.offset += h.normal.dot(t);
  return r;
}

Polytope Polytope::affine_image(const Mat& m, const Vec& t) const {
  if (m.dim() != dim_ || t.dim() != dim_)
    throw Error(Errc::DimensionMismatch, "map dim mismatch");
  Rat d = m.det();
  if (d.is_zero()) throw Error(Errc::SingularMatrix, "affine map not invertible");
  std::vector<Vec> verts;
  verts.reserve(vertices_.size());
  for (const auto& v : vertices_) verts.push_back(m.apply(v) + t);
  if (dim_ <= 3) return hull(std::move(verts));

  Polytope r;
  r.dim_ = dim_;
  std::sort(verts.begin(), verts.end());
  r.vertices_ = std::move(verts);
  Mat minvt = m.inverse().transpose();
  for (const auto& h : facets_) {
    Vec n = minvt.apply(h.normal);
    r.facets_.push_back(canonicalize(Halfspace(n, h.offset + n.dot(t))));
  }
  std::sort(r.facets_.begin(), r.facets_.end());
  r.volume_ = volume_ * d.abs();
  return r;
}

std::array<Polytope, 2> Polytope::split(const Halfspace& h) const {
  if (h.dim() != dim_) throw Error(Errc::DimensionMismatch, "split plane dim mismatch");
  if (!has_cycles()) throw Error(Errc::DimensionUnsupported, "split needs facet cycles");

  int nv = static_cast<int>(vertices_.size());
  std::vector<Rat> ev(nv);
  std::vector<int> sg(nv);
  bool any_neg = false, any_pos = false;
  for (int i = 0; i < nv; ++i) {
    ev[i] = h.eval(vertices_[i]);
    sg[i] = ev[i].sign();
    any_neg |= sg[i] < 0;
    any_pos |= sg[i] > 0;
  }
  if (!any_neg || !any_pos)
    throw Error(Errc::Internal, "split plane does not straddle the cell");

  if (dim_ == 2) {
    auto side = [&](int want) {
      std::vector<Vec> cyc;
      for (int i = 0; i < nv; ++i) {
        int j = (i + 1) % nv;
        if (sg[i] * want >= 0) cyc.push_back(vertices_[i]);
        if (sg[i] * sg[j] < 0) {
          Rat s = ev[i] / (ev[i] - ev[j]);
          cyc.push_back(vertices_[i] + s * (vertices_[j] - vertices_[i]));
        }
      }
      return from_cycle2(std::move(cyc));
    };
    return {side(-1), side(+1)};
  }

  // dim 3: clip every facet cycle, then stitch the section facet
  FaceData fd = face_data();
  std::map<std::pair<int, int>, Vec> crossing;
  for (const auto& e : fd.edges) {
    if (sg[e[0]] * sg[e[1]] < 0) {
      Rat s = ev[e[0]] / (ev[e[0]] - ev[e[1]]);
      crossing.emplace(std::make_pair(e[0], e[1]),
                       vertices_[e[0]] + s * (vertices_[e[1]] - vertices_[e[0]]));
    }
  }

  auto side = [&](int want) {
    std::vector<Vec> pool;                       // collected points
    std::map<Vec, int> pool_id;
    auto intern = [&](const Vec& p) {
      auto it = pool_id.find(p);
      if (it != pool_id.end()) return it->second;
      int id = static_cast<int>(pool.size());
      pool.push_back(p);
      pool_id.emplace(p, id);
      return id;
    };

    std::vector<Halfspace> fct;
    std::vector<std::vector<int>> cyc;
    std::vector<Vec> section_pts;
    for (size_t f = 0; f < cycles_.size(); ++f) {
      const auto& c = cycles_[f];
      std::vector<int> out;
      int k = static_cast<int>(c.size());
      for (int i = 0; i < k; ++i) {
        int u = c[i], v = c[(i + 1) % k];
        if (sg[u] * want >= 0) out.push_back(intern(vertices_[u]));
        if (sg[u] * sg[v] < 0) {
          auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
          out.push_back(intern(crossing.at(key)));
        }
      }
      if (out.size() >= 3) {
        fct.push_back(facets_[f]);
        cyc.push_back(std::move(out));
      }
    }
    for (int i = 0; i < nv; ++i)
      if (sg[i] == 0) section_pts.push_back(vertices_[i]);
    for (const auto& [e, p] : crossing) section_pts.push_back(p);

    // the section polygon, oriented outward for this side
    Halfspace cap = canonicalize(want < 0 ? h : h.flipped());
    int drop = chart_drop_axis(cap.normal);
    std::vector<Vec> chart;
    section_pts = sorted_dedup(std::move(section_pts));
    for (const auto& p : section_pts) chart.push_back(chart_project(p, drop));
    std::vector<int> c2 = ccw_hull_indices(chart);
    if (c2.size() < 3) throw Error(Errc::Internal, "degenerate section polygon");
    std::vector<int> scyc;
    for (int i : c2) scyc.push_back(intern(section_pts[i]));
    int s = cross3(pool[scyc[1]] - pool[scyc[0]], pool[scyc[2]] - pool[scyc[0]])
                .dot(cap.normal)
                .sign();
    if (s < 0) std::reverse(scyc.begin(), scyc.end());
    fct.push_back(cap);
    cyc.push_back(std::move(scyc));

    // canonical reindex: vertices lex-sorted, facets sorted, cycles rotated
    std::vector<int> order(pool.size());
    for (size_t i = 0; i < pool.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return pool[x] < pool[y]; });
    std::vector<int> remap(pool.size());
    Polytope r;
    r.dim_ = 3;
    for (size_t i = 0; i < order.size(); ++i) {
      remap[order[i]] = static_cast<int>(i);
      r.vertices_.push_back(pool[order[i]]);
    }
    std::vector<size_t> forder(fct.size());
    for (size_t i = 0; i < fct.size(); ++i) forder[i] = i;
    std::sort(forder.begin(), forder.end(),
              [&](size_t x, size_t y) { return fct[x] < fct[y]; });
    for (size_t fi : forder) {
      std::vector<int> c;
      c.reserve(cyc[fi].size());
      for (int id : cyc[fi]) c.push_back(remap[id]);
      auto mn = std::min_element(c.begin(), c.end());
      std::rotate(c.begin(), mn, c.end());
      r.facets_.push_back(fct[fi]);
      r.cycles_.push_back(std::move(c));
    }
    r.compute_volume();
    return r;
  };
  return {side(-1), side(+1)};
}

FaceData Polytope::face_data() const {
  if (dim_ != 3) throw Error(Errc::DimensionUnsupported, "face_data needs dim 3");
  std::map<std::array<int, 2>, std::vector<int>> em;
  for (size_t f = 0; f < cycles_.size(); ++f) {
    const auto& c = cycles_[f];
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
      int u = c[i], v = c[(i + 1) % k];
      std::array<int, 2> key{std::min(u, v), std::max(u, v)};
      em[key].push_back(static_cast<int>(f));
    }
  }
  FaceData fd;
  std::map<std::array<int, 2>, int> eid;
  for (auto& [e, fs] : em) {
    if (fs.size() != 2)
      throw Error(Errc::AuditFailure, "edge not shared by exactly two facets");
    eid[e] = static_cast<int>(fd.edges.size());
    fd.edges.push_back(e);
    fd.edge_facets.push_back({fs[0], fs[1]});
  }
  fd.facet_edges.resize(cycles_.size());
  for (size_t f = 0; f < cycles_.size(); ++f) {
    const auto& c = cycles_[f];
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
      int u = c[i], v = c[(i + 1) % k];
      fd.facet_edges[f].push_back(eid.at({std::min(u, v), std::max(u, v)}));
    }
  }
  long v = static_cast<long>(vertices_.size());
  long e = static_cast<long>(fd.edges.size());
  long f = static_cast<long>(cycles_.size());
  if (v - e + f != 2) throw Error(Errc::AuditFailure, "Euler relation violated");
  return fd;
}

Polytope Polytope::from_halfspaces(const std::vector<Halfspace>& hs_in) {
  if (hs_in.empty()) throw Error(Errc::Unbounded, "no halfspaces");
  int d = hs_in[0].dim();
  for (const auto& h : hs_in)
    if (h.dim() != d) throw Error(Errc::DimensionMismatch, "mixed halfspace dimensions");
  if (d < 1 || d > 3)
    throw Error(Errc::DimensionUnsupported, "from_halfspaces supports dim 1..3");

  std::vector<Halfspace> hs;
  for (const auto& h : hs_in) hs.push_back(canonicalize(h));
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  if (!lp_feasible(hs).feasible()) throw Error(Errc::Empty, "empty intersection");
  if (!lp_feasible(hs, std::vector<bool>(hs.size(), true)).feasible())
    throw Error(Errc::DegenerateInput, "intersection not full-dimensional");
  // bounded iff the recession cone {d : n_i.d <= 0} is {0}
  std::vector<Halfspace> cone;
  for (const auto& h : hs) cone.emplace_back(h.normal, Rat(0));
  for (int j = 0; j < d; ++j)
    for (int s : {-1, 1}) {
      Vec n(d);
      n[j] = Rat(-s);
      auto sys = cone;
      sys.emplace_back(n, Rat(-1));  // s*d_j >= 1
      if (lp_feasible(sys).feasible())
        throw Error(Errc::Unbounded, "intersection is unbounded");
    }

  int m = static_cast<int>(hs.size());
  std::vector<Vec> verts;
  std::vector<int> pick(d);
  auto try_solve = [&](const std::vector<int>& sel) {
    Mat a(d);
    Vec b(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a.at(i, j) = hs[sel[i]].normal[j];
      b[i] = hs[sel[i]].offset;
    }
    Vec x;
    if (!solve_linear(a, b, x)) return;
    for (const auto& h : hs)
      if (h.eval(x).sign() > 0) return;
    verts.push_back(std::move(x));
  };
  // enumerate d-subsets
  std::vector<int> sel(d);
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == d) {
      try_solve(sel);
      return;
    }
    for (int i = start; i < m; ++i) {
      sel[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return hull(std::move(verts));
}

void Polytope::validate() const {
  auto fail = [](const std::string& m) { throw Error(Errc::AuditFailure, m); };
  if (vertices_.empty() || facets_.empty()) fail("empty representation");
  for (const auto& v : vertices_)
    if (v.dim() != dim_) fail("vertex dimension mismatch");
  for (const auto& h : facets_) {
    if (h.dim() != dim_) fail("facet dimension mismatch");
    if (!(canonicalize(h) == h)) fail("facet not canonical");
  }
  // membership and tightness census
  std::vector<std::set<int>> tight(facets_.size());
  for (size_t f = 0; f < facets_.size(); ++f)
    for (size_t i = 0; i < vertices_.size(); ++i) {
      int s = facets_[f].eval(vertices_[i]).sign();
      if (s > 0) fail("vertex violates facet");
      if (s == 0) tight[f].insert(static_cast<int>(i));
    }
  for (size_t f = 0; f < facets_.size(); ++f)
    if (static_cast<int>(tight[f].size()) < dim_) fail("facet tight at too few vertices");
  // every vertex extreme: at least dim tight facets with full-rank normals
  for (size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<Vec> ns;
    for (size_t f = 0; f < facets_.size(); ++f)
      if (tight[f].count(static_cast<int>(i))) ns.push_back(facets_[f].normal);
    if (static_cast<int>(ns.size()) < dim_) fail("vertex on too few facets");
    // rank via elimination
    int rank = 0;
    std::vector<Vec> basis;
    for (auto w : ns) {
      for (const auto& b : basis) {
        // eliminate leading entry of w against b
        int lead = -1;
        for (int j = 0; j < dim_; ++j)
          if (!b[j].is_zero()) {
            lead = j;
            break;
          }
        if (lead >= 0 && !w[lead].is_zero()) {
          Rat f2 = w[lead] / b[lead];
          w -= f2 * b;
        }
      }
      if (!w.is_zero()) {
        basis.push_back(w);
        ++rank;
      }
      if (rank == dim_) break;
    }
    if (rank < dim_) fail("vertex not extreme (rank-deficient active set)");
  }
  if (has_cycles()) {
    if (cycles_.size() != facets_.size()) fail("cycle/facet count mismatch");
    for (size_t f = 0; f < cycles_.size(); ++f) {
      std::set<int> cset(cycles_[f].begin(), cycles_[f].end());
      if (cset.size() != cycles_[f].size()) fail("facet cycle repeats a vertex");
      if (dim_ >= 2 && cset != tight[f]) fail("facet cycle differs from tight vertex set");
    }
    if (dim_ == 3) face_data();  // throws on Euler / edge-sharing violations
    if (dim_ == 2) {
      int n = static_cast<int>(vertices_.size());
      for (int i = 0; i < n; ++i)
        if (orient2(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) <= 0)
          fail("polygon cycle not strictly convex CCW");
    }
  }
  if (dim_ <= 3) {
    Polytope copy = *this;
    copy.compute_volume();
    if (!(copy.volume_ == volume_)) fail("stored volume mismatch");
  } else if (volume_.sign() <= 0) {
    fail("non-positive volume");
  }
}

}  // namespace latcover
