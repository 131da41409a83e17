// Copyright 2026 The panelcollapse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "panelcollapse/local_cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "panelcollapse/error.hpp"

namespace panelcollapse {
namespace {

Mask bit(int i) { return Mask{1} << i; }

std::string describe(const Face& f) {
  return "face(free=" + std::to_string(f.free) + ", base=" + std::to_string(f.base) + ")";
}

std::vector<Cell> sorted_cells(const std::set<Cell>& cells) { return {cells.begin(), cells.end()}; }

}  // namespace

int Face::dimension() const { return std::popcount(free); }

std::vector<Mask> Face::vertices() const {
  std::vector<Mask> out;
  // Enumerate submasks of free.
  Mask sub = 0;
  do {
    out.push_back(base | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

Face hull_of(const std::vector<Mask>& vertices) {
  Mask spread = 0;
  for (Mask v : vertices) spread |= v ^ vertices.front();
  return {spread, vertices.front() & ~spread};
}

Cell Cell::diagonal(const Face& w, Mask separators) {
  if (separators == 0) return ordinary(w);
  if (std::popcount(separators) == 1) {
    return ordinary({w.free | separators, w.base & ~separators});
  }
  return {{w.free, std::min(w.base, w.base ^ separators)}, separators};
}

std::vector<Mask> Cell::vertices() const {
  std::vector<Mask> out = face.vertices();
  if (separators != 0) {
    for (Mask v : face.vertices()) out.push_back(v ^ separators);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<Cell> restrict_cells(const std::vector<Cell>& cells, const Face& f) {
  std::vector<Cell> out;
  for (const Cell& c : cells) {
    if (f.contains(c.hull())) out.push_back(c);
  }
  return out;
}

LocalCube::LocalCube(int dimension, std::vector<LocalPanel> panels)
    : dimension_(dimension), panels_(std::move(panels)) {
  if (dimension < 0 || dimension > kMaxDimension) {
    throw PreconditionError("cube dimension " + std::to_string(dimension) + " out of range");
  }
  for (const LocalPanel& p : panels_) {
    if (p.abutting < 0 || p.abutting >= dimension || p.extremalising >= dimension ||
        p.extremalising == p.abutting || (p.side != 0 && p.side != 1)) {
      throw PreconditionError("malformed panel trace on a cube");
    }
  }
  std::sort(panels_.begin(), panels_.end());
  panels_.erase(std::unique(panels_.begin(), panels_.end()), panels_.end());
  const Mask count = Mask{1} << dimension;
  internal_edges_.assign(static_cast<std::size_t>(count) * std::max(dimension, 1), false);
  for (const LocalPanel& p : panels_) {
    for (Mask v = 0; v < count; ++v) {
      if (v & bit(p.abutting)) continue;
      if (p.extremalising >= 0 && ((v >> p.extremalising) & 1U) != static_cast<Mask>(p.side)) {
        continue;
      }
      internal_edges_[v * dimension + p.abutting] = true;
    }
  }
}

bool LocalCube::edge_internal(Mask vertex, int dir) const {
  return internal_edges_[(vertex & ~bit(dir)) * dimension_ + dir];
}

bool LocalCube::internal(const Face& f) const {
  bool by_panel = false;
  for (const LocalPanel& p : panels_) {
    if (!(f.free & bit(p.abutting))) continue;
    if (p.extremalising < 0 ||
        (!(f.free & bit(p.extremalising)) &&
         ((f.base >> p.extremalising) & 1U) == static_cast<Mask>(p.side))) {
      by_panel = true;
      break;
    }
  }
  // Some direction all of whose edges are internal; equivalent under the
  // no facing panels property.
  bool by_class = false;
  for (int k = 0; k < dimension_ && !by_class; ++k) {
    if (!(f.free & bit(k))) continue;
    Face facet{f.free & ~bit(k), f.base};
    bool all = true;
    for (Mask v : facet.vertices()) {
      if (!edge_internal(v, k)) {
        all = false;
        break;
      }
    }
    by_class = all;
  }
  if (by_panel != by_class) {
    throw InvariantError("internality rules disagree on " + describe(f));
  }
  return by_panel;
}

bool LocalCube::completely_external(const Face& f) const {
  for (int k = 0; k < dimension_; ++k) {
    if (!(f.free & bit(k))) continue;
    Face facet{f.free & ~bit(k), f.base};
    for (Mask v : facet.vertices()) {
      if (edge_internal(v, k)) return false;
    }
  }
  return true;
}

std::vector<Mask> LocalCube::persistent_corners(const Face& f) const {
  std::vector<Mask> out;
  for (Mask v : f.vertices()) {
    bool persistent = true;
    for (int k = 0; k < dimension_ && persistent; ++k) {
      if ((f.free & bit(k)) && edge_internal(v, k)) persistent = false;
    }
    if (persistent) out.push_back(v);
  }
  return out;
}

bool LocalCube::d_connected(const Face& f) const {
  auto it = connected_memo_.find(f);
  if (it != connected_memo_.end()) return it->second;
  std::vector<Mask> verts = f.vertices();
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](Mask v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::size_t components = verts.size();
  for (Mask v : verts) {
    for (int k = 0; k < dimension_; ++k) {
      if (!(f.free & bit(k)) || (v & bit(k)) || edge_internal(v, k)) continue;
      std::size_t a = find(index(v)), b = find(index(v | bit(k)));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  bool connected = components == 1;
  const_cast<LocalCube*>(this)->connected_memo_[f] = connected;
  return connected;
}

std::vector<Face> LocalCube::subfaces(const Face& f) const {
  std::vector<Face> out;
  Mask sub = 0;
  do {
    Mask fixed = f.free & ~sub;
    Mask b = 0;
    do {
      out.push_back({sub, f.base | b});
      b = (b - fixed) & fixed;
    } while (b != 0);
    sub = (sub - f.free) & f.free;
  } while (sub != 0);
  return out;
}

const LocalFundament& LocalCube::fundament(const Face& f) {
  if ((f.free | f.base) >= (Mask{1} << dimension_) || (f.free & f.base)) {
    throw PreconditionError("face outside the cube");
  }
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  LocalFundament fund = compute(f);
  verify(fund);
  return memo_.emplace(f, std::move(fund)).first->second;
}

LocalFundament LocalCube::compute(const Face& f) {
  LocalFundament fund;
  fund.face = f;
  fund.internal = internal(f);
  fund.completely_external = completely_external(f);
  fund.d_connected = d_connected(f);

  std::set<Cell> d_cells;
  for (const Face& sub : subfaces(f)) {
    if (completely_external(sub)) d_cells.insert(Cell::ordinary(sub));
  }
  if (fund.internal) {
    fund.cells = sorted_cells(d_cells);
    return fund;
  }

  std::vector<Mask> corners = persistent_corners(f);
  if (corners.empty()) throw InvariantError("external " + describe(f) + " has no persistent corner");
  Face h = hull_of(corners);

  // Intersection of the faces opposite each panel meeting f.
  Face opposite = f;
  for (const LocalPanel& p : panels_) {
    if (!(f.free & bit(p.abutting))) continue;
    const int j = p.extremalising;
    if (j < 0 || !(f.free & bit(j))) {
      if (j < 0 || ((f.base >> j) & 1U) == static_cast<Mask>(p.side)) {
        throw InvariantError("external " + describe(f) + " lies inside a panel");
      }
      continue;
    }
    const Mask away = static_cast<Mask>(1 - p.side) << j;
    if (opposite.free & bit(j)) {
      opposite.free &= ~bit(j);
      opposite.base |= away;
    } else if ((opposite.base & bit(j)) != away) {
      throw InvariantError("opposite faces of panels on " + describe(f) + " are disjoint");
    }
  }
  if (opposite != h) {
    throw InvariantError("persistent subcube of " + describe(f) +
                         " differs from the intersection of opposite faces");
  }
  if (persistent_corners(h).size() != h.vertices().size() ||
      corners.size() != h.vertices().size()) {
    throw InvariantError("persistent subcube of " + describe(f) + " has a non-persistent corner");
  }
  fund.persistent = h;

  Mask sigma = 0;
  for (int k = 0; k < dimension_; ++k) {
    if (!(f.free & bit(k)) || (h.free & bit(k))) continue;
    Face facet{f.free & ~bit(k), f.base};
    for (Mask v : facet.vertices()) {
      if (edge_internal(v, k)) {
        sigma |= bit(k);
        break;
      }
    }
  }
  fund.separators = sigma;
  fund.kappa = std::popcount(sigma);
  fund.salient = Face{h.free, h.base ^ sigma};

  if (fund.completely_external) {
    fund.cells = sorted_cells(d_cells);
    return fund;
  }

  std::set<Cell> f0;
  for (int k = 0; k < dimension_; ++k) {
    if (!(f.free & bit(k))) continue;
    for (Mask value : {Mask{0}, bit(k)}) {
      Face facet{f.free & ~bit(k), f.base | value};
      if (!facet.meets(h)) continue;
      const LocalFundament& sub = fundament(facet);
      f0.insert(sub.cells.begin(), sub.cells.end());
    }
  }
  std::set<Cell> f1 = f0;
  for (const Face& w : subfaces(*fund.salient)) {
    if (!completely_external(w)) continue;
    f1.insert(Cell::diagonal(w, sigma));
    f1.insert(Cell::ordinary(w));
    f1.insert(Cell::ordinary({w.free, w.base ^ sigma}));
  }
  fund.f0 = sorted_cells(f0);
  fund.f1 = sorted_cells(f1);
  if (fund.d_connected) {
    fund.cells = sorted_cells(d_cells);
  } else {
    std::set<Cell> all = f1;
    all.insert(d_cells.begin(), d_cells.end());
    fund.cells = sorted_cells(all);
  }
  return fund;
}

void LocalCube::verify(const LocalFundament& fund) {
  const Face& f = fund.face;
  auto fail = [&](const std::string& what) {
    throw InvariantError(what + " on " + describe(f));
  };
  for (const Cell& c : fund.cells) {
    if (!f.contains(c.hull())) fail("fundament cell outside its cube");
    if (c.is_diagonal() ? internal(c.hull()) : !completely_external(c.face)) {
      fail("fundament meets the inside of a panel");
    }
  }
  if (fund.internal || fund.completely_external) return;

  const int dim = f.dimension();
  const Face& h = *fund.persistent;
  const Face& hbar = *fund.salient;

  // External facets contain persistent corners, and inherit connectivity.
  for (int k = 0; k < dimension_; ++k) {
    if (!(f.free & bit(k))) continue;
    for (Mask value : {Mask{0}, bit(k)}) {
      Face facet{f.free & ~bit(k), f.base | value};
      if (internal(facet)) continue;
      if (!facet.meets(h)) fail("external facet without persistent corner");
      if (restrict_cells(fund.cells, facet) != fundament(facet).cells) {
        fail("fundament does not restrict to the fundament of a facet");
      }
    }
  }
  if (fund.d_connected) {
    for (const Face& sub : subfaces(f)) {
      if (!internal(sub) && !d_connected(sub)) fail("connectivity not inherited by a subcube");
    }
  }

  // Completely external cubes outside the facet pieces have codimension >= 2.
  std::set<Cell> f0(fund.f0.begin(), fund.f0.end());
  std::set<Cell> f1(fund.f1.begin(), fund.f1.end());
  std::vector<Face> complete;
  for (const Face& sub : subfaces(f)) {
    if (!completely_external(sub)) continue;
    complete.push_back(sub);
    if (!f0.contains(Cell::ordinary(sub)) && sub.dimension() > dim - 2) {
      fail("completely external cube of codimension < 2 outside F0");
    }
  }
  // At most one maximal completely external cube is missing from F1; it
  // contains the salient subcube and adds no internal-dual directions.
  int missing = 0;
  for (const Face& sub : complete) {
    bool maximal = std::none_of(complete.begin(), complete.end(), [&](const Face& other) {
      return other != sub && other.contains(sub);
    });
    if (!maximal || f1.contains(Cell::ordinary(sub))) continue;
    ++missing;
    if (!sub.contains(hbar)) fail("extra cube does not contain the salient subcube");
    for (int k = 0; k < dimension_; ++k) {
      if (!(sub.free & bit(k)) || (hbar.free & bit(k))) continue;
      Face facet{f.free & ~bit(k), f.base};
      for (Mask v : facet.vertices()) {
        if (edge_internal(v, k)) fail("extra cube crosses an internal-dual hyperplane");
      }
    }
  }
  if (missing > 1) fail("more than one extra cube outside F1");

  std::vector<Mask> both = h.vertices();
  for (Mask v : hbar.vertices()) both.push_back(v);
  const bool in_facet = hull_of(both).dimension() < dim;
  if (fund.d_connected) {
    if (!in_facet) fail("persistent and salient subcubes span the cube");
  } else if (fund.cells != fund.f1 && !(completely_external(hbar) && in_facet)) {
    fail("fundament exceeds F1 without a completely external salient subcube");
  }
}

}  // namespace panelcollapse
