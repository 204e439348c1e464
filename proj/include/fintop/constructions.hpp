#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/maps.hpp"
#include "fintop/mask.hpp"
#include "fintop/preorder.hpp"
#include "fintop/space.hpp"

namespace fintop {

// Topology generated by an arbitrary subbase: each point's minimal
// neighborhood is the intersection of the subbase sets containing it, and
// the opens are exactly the up-sets of the induced preorder.
inline FiniteSpace topology_generated_by(int n, const std::vector<Mask>& subbase) {
  std::vector<Mask> rows(n);
  for (int x = 0; x < n; ++x) {
    Mask b = full_mask(n);
    for (Mask s : subbase)
      if (mask_contains(s, x)) b &= s;
    rows[x] = b;
  }
  return alexandroff_space(Preorder::from_up_rows(n, std::move(rows)));
}

// A nonempty subset is irreducible when any two of its relatively open
// nonempty subsets meet; it is enough to test the relative minimal
// neighborhoods, which sit inside every other relative open set.
inline bool is_irreducible_subset(const FiniteSpace& space, Mask a) {
  if (a == 0) return false;
  for (Mask s = a; s != 0; s &= s - 1) {
    int x = std::countr_zero(s);
    for (Mask t = a; t != 0; t &= t - 1) {
      int y = std::countr_zero(t);
      if ((space.min_open_neighborhood(x) & space.min_open_neighborhood(y) & a) == 0) return false;
    }
  }
  return true;
}

inline std::vector<Mask> irreducible_closed_sets(const FiniteSpace& space) {
  std::vector<Mask> out;
  for (Mask c : space.closed_sets())
    if (is_irreducible_subset(space, c)) out.push_back(c);
  return out;
}

inline std::vector<int> generic_points(const FiniteSpace& space, Mask closed_set) {
  std::vector<int> out;
  for (Mask t = closed_set; t != 0; t &= t - 1) {
    int x = std::countr_zero(t);
    if (space.point_closure(x) == closed_set) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientResult {
  FiniteSpace space;
  SpaceMap projection;
  std::vector<int> class_of;  // point -> class index
};

namespace detail {

// Builds the quotient of `space` by the partition given through class_of
// (class indices must be 0..m-1, assigned ascending by least member), with
// the literal quotient topology: B open iff its preimage is open.
inline QuotientResult quotient_by_classes(const FiniteSpace& space, std::vector<int> class_of, int m) {
  std::vector<Mask> family;
  for (Mask b = 0; b <= full_mask(m); ++b) {
    Mask pre = 0;
    for (int x = 0; x < space.n(); ++x)
      if (mask_contains(b, class_of[x])) pre |= singleton_mask(x);
    if (space.is_open(pre)) family.push_back(b);
  }
  FiniteSpace q = FiniteSpace::from_opens(m, std::move(family));
  SpaceMap proj(space, q, class_of);
  return QuotientResult{std::move(q), std::move(proj), std::move(class_of)};
}

inline std::pair<std::vector<int>, int> classes_from_blocks(int n, const std::vector<Mask>& blocks) {
  std::vector<int> class_of(n, -1);
  int m = 0;
  for (Mask b : blocks) {
    for (Mask t = b; t != 0; t &= t - 1) class_of[std::countr_zero(t)] = m;
    ++m;
  }
  return {class_of, m};
}

}  // namespace detail

// Quotient by topological indistinguishability; class indices ascend with
// the least member of each class.
inline QuotientResult t0_quotient(const FiniteSpace& space) {
  std::vector<Mask> blocks;
  std::vector<bool> seen(space.n(), false);
  for (int x = 0; x < space.n(); ++x) {
    if (seen[x]) continue;
    Mask cls = space.indistinguishability_class(x);
    for (Mask t = cls; t != 0; t &= t - 1) seen[std::countr_zero(t)] = true;
    blocks.push_back(cls);
  }
  auto [class_of, m] = detail::classes_from_blocks(space.n(), blocks);
  return detail::quotient_by_classes(space, std::move(class_of), m);
}

// Quotient by connected components.
inline QuotientResult connectivity_quotient(const FiniteSpace& space) {
  auto [class_of, m] = detail::classes_from_blocks(space.n(), components(space));
  return detail::quotient_by_classes(space, std::move(class_of), m);
}

// The unique continuous g with g o q = f, for continuous f into a T0 space.
inline SpaceMap factor_through_t0(const SpaceMap& f) {
  if (!is_continuous(f)) throw NotContinuousError("map is not continuous");
  for (int x = 0; x < f.cod.n(); ++x)
    if (f.cod.indistinguishability_class(x) != singleton_mask(x))
      throw CodomainNotT0Error("codomain has indistinguishable points");
  QuotientResult q = t0_quotient(f.dom);
  std::vector<int> table(q.space.n(), -1);
  for (int x = 0; x < f.dom.n(); ++x) {
    int c = q.class_of[x];
    if (table[c] == -1) table[c] = f(x);
    else if (table[c] != f(x)) throw Error("map does not descend to the quotient");
  }
  return SpaceMap(q.space, f.cod, std::move(table));
}

// The unique continuous g with g o p = f, for continuous f into a totally
// disconnected space (p the component quotient).
inline SpaceMap factor_through_connectivity(const SpaceMap& f) {
  if (!is_continuous(f)) throw NotContinuousError("map is not continuous");
  for (Mask block : components(f.cod))
    if (mask_size(block) != 1) throw PreconditionError("codomain is not totally disconnected");
  QuotientResult q = connectivity_quotient(f.dom);
  std::vector<int> table(q.space.n(), -1);
  for (int x = 0; x < f.dom.n(); ++x) {
    int c = q.class_of[x];
    if (table[c] == -1) table[c] = f(x);
    else if (table[c] != f(x)) throw Error("map does not descend to the quotient");
  }
  return SpaceMap(q.space, f.cod, std::move(table));
}

// ---------------------------------------------------------------------------
// Skula topology

// Topology generated by the locally closed sets {U \ V : U, V open}.
inline FiniteSpace skula(const FiniteSpace& space) {
  std::vector<Mask> subbase;
  subbase.reserve(space.opens().size() * space.opens().size());
  for (Mask u : space.opens())
    for (Mask v : space.opens()) subbase.push_back(u & ~v);
  return topology_generated_by(space.n(), subbase);
}

// ---------------------------------------------------------------------------
// Sobrification

struct SobrificationResult {
  FiniteSpace sob;       // points are irreducible closed sets, ascending by mask
  SpaceMap iota;         // x -> index of cl{x}
  std::vector<Mask> set_of;  // point of sob -> the closed set it stands for
};

inline SobrificationResult sobrification(const FiniteSpace& space) {
  std::vector<Mask> irr = irreducible_closed_sets(space);
  const int m = static_cast<int>(irr.size());
  if (m < 1 || m > kMaxPoints) throw SizeCapExceededError("sobrification size out of range");
  auto index_of = [&irr](Mask c) {
    auto it = std::lower_bound(irr.begin(), irr.end(), c);
    return static_cast<int>(it - irr.begin());
  };
  std::vector<Mask> family;
  family.reserve(space.opens().size());
  for (Mask u : space.opens()) {
    Mask us = 0;
    for (int i = 0; i < m; ++i)
      if ((irr[i] & u) != 0) us |= singleton_mask(i);
    family.push_back(us);
  }
  FiniteSpace sob = FiniteSpace::from_opens(m, std::move(family));
  std::vector<int> iota_table(space.n());
  for (int x = 0; x < space.n(); ++x) iota_table[x] = index_of(space.point_closure(x));
  SpaceMap iota(space, sob, std::move(iota_table));
  return SobrificationResult{std::move(sob), std::move(iota), std::move(irr)};
}

// Image of a continuous map under sobrification: C maps to cl(f(C)).
inline SpaceMap sobrify_map(const SpaceMap& f) {
  if (!is_continuous(f)) throw NotContinuousError("map is not continuous");
  SobrificationResult sx = sobrification(f.dom);
  SobrificationResult sy = sobrification(f.cod);
  std::vector<int> table(sx.sob.n());
  for (int i = 0; i < sx.sob.n(); ++i) {
    Mask image_closure = f.cod.closure(f.image(sx.set_of[i]));
    auto it = std::lower_bound(sy.set_of.begin(), sy.set_of.end(), image_closure);
    table[i] = static_cast<int>(it - sy.set_of.begin());
  }
  return SpaceMap(sx.sob, sy.sob, std::move(table));
}

inline bool is_sober_space(const FiniteSpace& space) {
  for (Mask c : irreducible_closed_sets(space))
    if (generic_points(space, c).size() != 1) return false;
  return true;
}

// The unique continuous g on the sobrification with g o iota = f, for
// continuous f into a sober codomain.
inline SpaceMap factor_through_sobrification(const SpaceMap& f) {
  if (!is_continuous(f)) throw NotContinuousError("map is not continuous");
  if (!is_sober_space(f.cod)) throw PreconditionError("codomain is not sober");
  SobrificationResult sx = sobrification(f.dom);
  std::vector<int> table(sx.sob.n());
  for (int i = 0; i < sx.sob.n(); ++i) {
    Mask image_closure = f.cod.closure(f.image(sx.set_of[i]));
    std::vector<int> gen = generic_points(f.cod, image_closure);
    if (gen.size() != 1) throw Error("image closure has no unique generic point");
    table[i] = gen.front();
  }
  return SpaceMap(sx.sob, f.cod, std::move(table));
}

// ---------------------------------------------------------------------------
// Products, sums, weak and strong topologies

namespace detail {

inline int checked_total_product_size(const std::vector<FiniteSpace>& spaces) {
  if (spaces.empty()) throw Error("product of an empty family");
  long long total = 1;
  for (const FiniteSpace& s : spaces) {
    total *= s.n();
    if (total > kMaxPoints) throw SizeCapExceededError("product would exceed " + std::to_string(kMaxPoints) + " points");
  }
  return static_cast<int>(total);
}

inline std::vector<int> product_strides(const std::vector<FiniteSpace>& spaces) {
  std::vector<int> strides(spaces.size());
  int s = 1;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    strides[i] = s;
    s *= spaces[i].n();
  }
  return strides;
}

}  // namespace detail

// Point encoding: the tuple (c_0, .., c_k) becomes sum c_i * strides[i],
// with the first factor varying fastest.
inline int product_coordinate(const std::vector<FiniteSpace>& spaces, int point, std::size_t i) {
  std::vector<int> strides = detail::product_strides(spaces);
  return (point / strides[i]) % spaces[i].n();
}

// Weak topology of the projections.
inline FiniteSpace product(const std::vector<FiniteSpace>& spaces) {
  const int total = detail::checked_total_product_size(spaces);
  std::vector<int> strides = detail::product_strides(spaces);
  std::vector<Mask> subbase;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (Mask u : spaces[i].opens()) {
      Mask pre = 0;
      for (int p = 0; p < total; ++p)
        if (mask_contains(u, (p / strides[i]) % spaces[i].n())) pre |= singleton_mask(p);
      subbase.push_back(pre);
    }
  return topology_generated_by(total, subbase);
}

// Topology with base all boxes prod U_i, U_i open in the i-th factor.
inline FiniteSpace box_product(const std::vector<FiniteSpace>& spaces) {
  const int total = detail::checked_total_product_size(spaces);
  std::vector<int> strides = detail::product_strides(spaces);
  std::vector<Mask> base;
  std::vector<std::size_t> pick(spaces.size(), 0);
  while (true) {
    Mask box = 0;
    for (int p = 0; p < total; ++p) {
      bool inside = true;
      for (std::size_t i = 0; i < spaces.size(); ++i)
        if (!mask_contains(spaces[i].opens()[pick[i]], (p / strides[i]) % spaces[i].n())) {
          inside = false;
          break;
        }
      if (inside) box |= singleton_mask(p);
    }
    base.push_back(box);
    std::size_t i = 0;
    for (; i < spaces.size(); ++i) {
      if (++pick[i] < spaces[i].opens().size()) break;
      pick[i] = 0;
    }
    if (i == spaces.size()) break;
  }
  return topology_generated_by(total, base);
}

inline std::vector<SpaceMap> product_projections(const std::vector<FiniteSpace>& spaces) {
  FiniteSpace prod = product(spaces);
  std::vector<int> strides = detail::product_strides(spaces);
  std::vector<SpaceMap> out;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    std::vector<int> table(prod.n());
    for (int p = 0; p < prod.n(); ++p) table[p] = (p / strides[i]) % spaces[i].n();
    out.emplace_back(prod, spaces[i], std::move(table));
  }
  return out;
}

// Disjoint union; the opens are the piecewise unions of piece opens.
inline FiniteSpace sum(const std::vector<FiniteSpace>& spaces) {
  if (spaces.empty()) throw Error("sum of an empty family");
  int total = 0;
  for (const FiniteSpace& s : spaces) {
    total += s.n();
    if (total > kMaxPoints) throw SizeCapExceededError("sum would exceed " + std::to_string(kMaxPoints) + " points");
  }
  std::vector<int> offsets(spaces.size());
  int off = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    offsets[i] = off;
    off += spaces[i].n();
  }
  std::vector<Mask> family{0};
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    std::vector<Mask> next;
    next.reserve(family.size() * spaces[i].opens().size());
    for (Mask prefix : family)
      for (Mask u : spaces[i].opens()) next.push_back(prefix | (u << offsets[i]));
    family = std::move(next);
  }
  return FiniteSpace::from_opens(total, std::move(family));
}

inline std::vector<SpaceMap> sum_injections(const std::vector<FiniteSpace>& spaces) {
  FiniteSpace s = sum(spaces);
  std::vector<SpaceMap> out;
  int off = 0;
  for (const FiniteSpace& piece : spaces) {
    std::vector<int> table(piece.n());
    for (int x = 0; x < piece.n(); ++x) table[x] = off + x;
    out.emplace_back(piece, s, std::move(table));
    off += piece.n();
  }
  return out;
}

// Coarsest topology on n points making every given map continuous.
inline FiniteSpace weak_topology(int n, const std::vector<std::pair<std::vector<int>, FiniteSpace>>& maps) {
  std::vector<Mask> subbase;
  for (const auto& [table, cod] : maps) {
    if (static_cast<int>(table.size()) != n) throw Error("weak topology: table length mismatch");
    for (Mask v : cod.opens()) {
      Mask pre = 0;
      for (int x = 0; x < n; ++x)
        if (mask_contains(v, table[x])) pre |= singleton_mask(x);
      subbase.push_back(pre);
    }
  }
  return topology_generated_by(n, subbase);
}

// Finest topology on n points making every given map continuous.
inline FiniteSpace strong_topology(int n, const std::vector<std::pair<FiniteSpace, std::vector<int>>>& maps) {
  if (n < 1 || n > kMaxPoints) throw SizeCapExceededError("point count out of range");
  std::vector<Mask> family;
  for (Mask w = 0; w <= full_mask(n); ++w) {
    bool ok = true;
    for (const auto& [dom, table] : maps) {
      if (static_cast<int>(table.size()) != dom.n()) throw Error("strong topology: table length mismatch");
      Mask pre = 0;
      for (int x = 0; x < dom.n(); ++x)
        if (mask_contains(w, table[x])) pre |= singleton_mask(x);
      if (!dom.is_open(pre)) {
        ok = false;
        break;
      }
    }
    if (ok) family.push_back(w);
  }
  return FiniteSpace::from_opens(n, std::move(family));
}

// ---------------------------------------------------------------------------
// One-point compactification and simple extension

// Adds the point infinity at index n; its open neighborhoods are the
// complements of closed (hence compact) subsets of the original space.
inline FiniteSpace one_point_compactification(const FiniteSpace& space) {
  const int n = space.n();
  if (n + 1 > kMaxPoints) throw SizeCapExceededError("compactification would exceed the point cap");
  const Mask star_full = full_mask(n + 1);
  std::vector<Mask> family(space.opens());
  for (Mask c : space.closed_sets())
    if (is_compact_subset(space, c)) family.push_back(star_full & ~c);
  return FiniteSpace::from_opens(n + 1, std::move(family));
}

// Smallest topology refining the space that contains A.
inline FiniteSpace simple_extension(const FiniteSpace& space, Mask a) {
  std::vector<Mask> family;
  family.reserve(space.opens().size() * space.opens().size());
  for (Mask u : space.opens())
    for (Mask v : space.opens()) family.push_back(u | (v & a));
  return FiniteSpace::from_opens(space.n(), std::move(family));
}

// ---------------------------------------------------------------------------
// Gluing

// Pieces Y_a, open overlaps U_{a,b} in Y_a, and transition homeomorphisms
// h_{a,b}: U_{a,b} -> U_{b,a}. Transition tables are given per point of Y_a
// with kOutsideOverlap outside U_{a,b}.
inline constexpr int kOutsideOverlap = -1;

struct GluingData {
  std::vector<FiniteSpace> pieces;
  std::vector<std::vector<Mask>> overlaps;
  std::vector<std::vector<std::vector<int>>> homeos;
};

struct GlueResult {
  FiniteSpace space;
  std::vector<SpaceMap> embeddings;
};

// Identity gluing of k copies of z along an open set w.
inline GluingData duplication_data(const FiniteSpace& z, Mask w, int k) {
  if (!z.is_open(w)) throw NotOpenError("gluing set " + mask_to_string(w) + " is not open");
  if (k < 1) throw Error("need at least one copy");
  GluingData data;
  data.pieces.assign(k, z);
  data.overlaps.assign(k, std::vector<Mask>(k, w));
  std::vector<int> id_w(z.n(), kOutsideOverlap), id_full(z.n());
  for (int x = 0; x < z.n(); ++x) {
    id_full[x] = x;
    if (mask_contains(w, x)) id_w[x] = x;
  }
  data.homeos.assign(k, std::vector<std::vector<int>>(k, id_w));
  for (int a = 0; a < k; ++a) {
    data.overlaps[a][a] = z.full();
    data.homeos[a][a] = id_full;
  }
  return data;
}

namespace detail {

inline void validate_gluing(const GluingData& data) {
  using Clause = CocycleViolationError::Clause;
  const int k = static_cast<int>(data.pieces.size());
  if (k < 1) throw Error("need at least one piece");
  if (static_cast<int>(data.overlaps.size()) != k || static_cast<int>(data.homeos.size()) != k)
    throw Error("gluing data shape mismatch");
  for (int a = 0; a < k; ++a)
    if (static_cast<int>(data.overlaps[a].size()) != k || static_cast<int>(data.homeos[a].size()) != k)
      throw Error("gluing data shape mismatch");

  for (int a = 0; a < k; ++a) {
    if (data.overlaps[a][a] != data.pieces[a].full())
      throw CocycleViolationError(Clause::SelfOverlap, a, a, -1, "self overlap of piece " + std::to_string(a) + " is not the whole piece");
    for (int x = 0; x < data.pieces[a].n(); ++x)
      if (data.homeos[a][a][x] != x)
        throw CocycleViolationError(Clause::SelfMap, a, a, -1, "self map of piece " + std::to_string(a) + " is not the identity");
  }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const Mask uab = data.overlaps[a][b];
      if (!data.pieces[a].is_open(uab))
        throw NotOpenError("overlap of pieces " + std::to_string(a) + "," + std::to_string(b) + " is not open");
      const std::vector<int>& h = data.homeos[a][b];
      if (static_cast<int>(h.size()) != data.pieces[a].n()) throw Error("transition table length mismatch");
      for (int x = 0; x < data.pieces[a].n(); ++x) {
        bool in_dom = mask_contains(uab, x);
        if (in_dom != (h[x] != kOutsideOverlap))
          throw NotAHomeomorphismError(a, b, "transition map domain disagrees with the overlap");
        if (in_dom && !mask_contains(data.overlaps[b][a], h[x]))
          throw NotAHomeomorphismError(a, b, "transition map leaves the target overlap");
      }
      if (uab == 0) continue;
      Subspace sa = subspace(data.pieces[a], uab);
      Subspace sb = subspace(data.pieces[b], data.overlaps[b][a]);
      std::vector<int> table(sa.space.n());
      for (int i = 0; i < sa.space.n(); ++i) {
        int image = h[sa.points[i]];
        auto it = std::lower_bound(sb.points.begin(), sb.points.end(), image);
        if (it == sb.points.end() || *it != image)
          throw NotAHomeomorphismError(a, b, "transition map leaves the target overlap");
        table[i] = static_cast<int>(it - sb.points.begin());
      }
      SpaceMap restricted(sa.space, sb.space, std::move(table));
      if (!is_homeomorphism(restricted))
        throw NotAHomeomorphismError(a, b, "transition map between overlaps " + std::to_string(a) + "," + std::to_string(b) +
                                               " is not a homeomorphism");
      for (int x = 0; x < data.pieces[a].n(); ++x)
        if (mask_contains(uab, x) && data.homeos[b][a][h[x]] != x)
          throw CocycleViolationError(Clause::Inverse, a, b, -1, "transition maps between " + std::to_string(a) + " and " +
                                                                     std::to_string(b) + " are not mutually inverse");
    }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int g = 0; g < k; ++g) {
        const Mask dom = data.overlaps[a][b] & data.overlaps[a][g];
        Mask transported = 0;
        for (Mask t = dom; t != 0; t &= t - 1) transported |= singleton_mask(data.homeos[a][b][std::countr_zero(t)]);
        if (transported != (data.overlaps[b][a] & data.overlaps[b][g]))
          throw CocycleViolationError(Clause::OverlapTransport, a, b, g,
                                      "transition map does not carry the triple overlap of (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(g) + ") onto its counterpart");
        for (Mask t = dom; t != 0; t &= t - 1) {
          int z = std::countr_zero(t);
          if (data.homeos[b][g][data.homeos[a][b][z]] != data.homeos[a][g][z])
            throw CocycleViolationError(Clause::Composition, a, b, g,
                                        "transition maps fail to compose on the triple overlap (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(g) + ")");
        }
      }
}

}  // namespace detail

// Quotient of the sum of the pieces by the identifications the transition
// maps prescribe. The data is validated first.
inline GlueResult glue(const GluingData& data) {
  detail::validate_gluing(data);
  const int k = static_cast<int>(data.pieces.size());
  FiniteSpace total = sum(data.pieces);
  std::vector<int> offsets(k);
  {
    int off = 0;
    for (int a = 0; a < k; ++a) {
      offsets[a] = off;
      off += data.pieces[a].n();
    }
  }
  std::vector<int> parent(total.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (Mask t = data.overlaps[a][b]; t != 0; t &= t - 1) {
        int z = std::countr_zero(t);
        unite(offsets[a] + z, offsets[b] + data.homeos[a][b][z]);
      }
  std::vector<int> class_of(total.n(), -1);
  int m = 0;
  for (int x = 0; x < total.n(); ++x)
    if (find(x) == x) class_of[x] = m++;
  for (int x = 0; x < total.n(); ++x) class_of[x] = class_of[find(x)];

  QuotientResult q = detail::quotient_by_classes(total, class_of, m);
  std::vector<SpaceMap> embeddings;
  for (int a = 0; a < k; ++a) {
    std::vector<int> table(data.pieces[a].n());
    for (int x = 0; x < data.pieces[a].n(); ++x) table[x] = q.class_of[offsets[a] + x];
    embeddings.emplace_back(data.pieces[a], q.space, std::move(table));
  }
  return GlueResult{std::move(q.space), std::move(embeddings)};
}

// k copies of z glued along the open set w via identity transitions.
inline FiniteSpace duplicate_along(const FiniteSpace& z, Mask w, int k) {
  return glue(duplication_data(z, w, k)).space;
}

// ---------------------------------------------------------------------------
// Alexandroff diagonal tests

enum class DiagonalRelation { preorder, equivalence };

// Whether the diagonal of X x X is closed in the Alexandroff topology of
// the chosen componentwise relation on pairs. Closed sets of an Alexandroff
// topology are the down-sets, so this is a pure order test.
inline bool diagonal_alexandroff_closed(const FiniteSpace& space, DiagonalRelation which) {
  Preorder p = specialization_preorder(space);
  Preorder square = preorder_product(p, p);
  if (which == DiagonalRelation::equivalence) square = square.symmetric_part();
  const int n = space.n();
  for (int x = 0; x < n; ++x) {
    const int diag = x + n * x;
    for (int q = 0; q < n * n; ++q)
      if (square.leq(q, diag) && q % n != q / n) return false;
  }
  return true;
}

}  // namespace fintop
