#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/axioms.hpp"
#include "fintop/errors.hpp"
#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

// A finite bounded lattice with explicit join/meet tables. Spatial frames
// (lattices of open sets) carry their element masks; quotients are
// abstract and leave `elems` empty.
struct Frame {
  int size = 0;
  std::vector<std::uint8_t> leq;  // size*size
  std::vector<int> join;          // size*size
  std::vector<int> meet;          // size*size
  std::vector<Mask> elems;        // ascending open masks when spatial
  int bottom = 0;
  int top = 0;

  bool le(int a, int b) const { return leq[a * size + b] != 0; }
  int join_of(int a, int b) const { return join[a * size + b]; }
  int meet_of(int a, int b) const { return meet[a * size + b]; }
  bool is_spatial() const { return !elems.empty(); }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.size == b.size && a.leq == b.leq && a.join == b.join && a.meet == b.meet && a.elems == b.elems;
  }
};

// The lattice of open sets, ordered by inclusion; join is union and meet is
// intersection.
inline Frame frame_of_opens(const FiniteSpace& space) {
  Frame f;
  f.elems = space.opens();
  f.size = static_cast<int>(f.elems.size());
  f.leq.assign(f.size * f.size, 0);
  f.join.assign(f.size * f.size, -1);
  f.meet.assign(f.size * f.size, -1);
  auto index_of = [&f](Mask m) {
    auto it = std::lower_bound(f.elems.begin(), f.elems.end(), m);
    return static_cast<int>(it - f.elems.begin());
  };
  for (int a = 0; a < f.size; ++a)
    for (int b = 0; b < f.size; ++b) {
      f.leq[a * f.size + b] = mask_subset(f.elems[a], f.elems[b]) ? 1 : 0;
      f.join[a * f.size + b] = index_of(f.elems[a] | f.elems[b]);
      f.meet[a * f.size + b] = index_of(f.elems[a] & f.elems[b]);
    }
  f.bottom = 0;
  f.top = f.size - 1;
  return f;
}

struct FrameHom {
  Frame src;
  Frame dst;
  std::vector<int> table;
};

// Preservation of all joins and finite meets; in a finite lattice the
// pairwise laws together with the bounds settle every family.
inline bool is_frame_hom(const FrameHom& h) {
  if (static_cast<int>(h.table.size()) != h.src.size) return false;
  for (int v : h.table)
    if (v < 0 || v >= h.dst.size) return false;
  if (h.table[h.src.bottom] != h.dst.bottom) return false;
  if (h.table[h.src.top] != h.dst.top) return false;
  for (int a = 0; a < h.src.size; ++a)
    for (int b = 0; b < h.src.size; ++b) {
      if (h.table[h.src.join_of(a, b)] != h.dst.join_of(h.table[a], h.table[b])) return false;
      if (h.table[h.src.meet_of(a, b)] != h.dst.meet_of(h.table[a], h.table[b])) return false;
    }
  return true;
}

inline bool is_frame_iso(const FrameHom& h) {
  if (h.src.size != h.dst.size || !is_frame_hom(h)) return false;
  std::vector<int> inv(h.dst.size, -1);
  for (int a = 0; a < h.src.size; ++a) {
    if (inv[h.table[a]] != -1) return false;
    inv[h.table[a]] = a;
  }
  return is_frame_hom(FrameHom{h.dst, h.src, std::move(inv)});
}

inline FrameHom compose(const FrameHom& g, const FrameHom& f) {
  std::vector<int> t(f.src.size);
  for (int a = 0; a < f.src.size; ++a) t[a] = g.table[f.table[a]];
  return FrameHom{f.src, g.dst, std::move(t)};
}

// The contravariant hom induced by a continuous map: V maps to its
// preimage.
inline FrameHom induced_hom(const SpaceMap& f) {
  if (!is_continuous(f)) throw NotContinuousError("map is not continuous");
  Frame src = frame_of_opens(f.cod);
  Frame dst = frame_of_opens(f.dom);
  std::vector<int> table(src.size);
  for (int i = 0; i < src.size; ++i) {
    Mask pre = f.preimage(src.elems[i]);
    auto it = std::lower_bound(dst.elems.begin(), dst.elems.end(), pre);
    table[i] = static_cast<int>(it - dst.elems.begin());
  }
  return FrameHom{std::move(src), std::move(dst), std::move(table)};
}

// ---------------------------------------------------------------------------
// Congruences and quotients

struct FrameCongruence {
  Frame frame;
  std::vector<int> class_of;  // element index -> class index, ascending by least member
};

inline FrameCongruence congruence_from_classes(Frame frame, std::vector<int> raw_class_of) {
  const int size = frame.size;
  std::vector<int> remap(size, -1);
  std::vector<int> class_of(size);
  int m = 0;
  for (int a = 0; a < size; ++a) {
    int c = raw_class_of[a];
    if (remap[c] == -1) remap[c] = m++;
    class_of[a] = remap[c];
  }
  return FrameCongruence{std::move(frame), std::move(class_of)};
}

// FC1/FC2 in substitution form: joining or meeting both members of a
// related pair with any fixed element stays related.
inline bool is_frame_congruence(const FrameCongruence& theta, int* witness_u = nullptr, int* witness_v = nullptr) {
  const Frame& L = theta.frame;
  for (int a = 0; a < L.size; ++a)
    for (int b = a + 1; b < L.size; ++b) {
      if (theta.class_of[a] != theta.class_of[b]) continue;
      for (int c = 0; c < L.size; ++c) {
        if (theta.class_of[L.join_of(a, c)] != theta.class_of[L.join_of(b, c)] ||
            theta.class_of[L.meet_of(a, c)] != theta.class_of[L.meet_of(b, c)]) {
          if (witness_u) *witness_u = a;
          if (witness_v) *witness_v = b;
          return false;
        }
      }
    }
  return true;
}

inline FrameCongruence kernel(const FrameHom& h) {
  return congruence_from_classes(h.src, h.table);
}

struct QuotientFrameResult {
  Frame frame;   // abstract
  FrameHom q;
};

// The quotient lattice of classes; join and meet descend through
// representatives.
inline QuotientFrameResult quotient_frame(const Frame& lattice, const FrameCongruence& theta) {
  int wu = -1, wv = -1;
  if (!(theta.frame == lattice)) throw Error("congruence is over a different lattice");
  if (!is_frame_congruence(theta, &wu, &wv))
    throw NotACongruenceError(wu, wv, "classes are not compatible with join and meet at the pair (" +
                                          std::to_string(wu) + "," + std::to_string(wv) + ")");
  int m = 0;
  for (int c : theta.class_of) m = std::max(m, c + 1);
  std::vector<int> rep(m, -1);
  for (int a = lattice.size - 1; a >= 0; --a) rep[theta.class_of[a]] = a;

  Frame q;
  q.size = m;
  q.leq.assign(m * m, 0);
  q.join.assign(m * m, -1);
  q.meet.assign(m * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      q.join[a * m + b] = theta.class_of[lattice.join_of(rep[a], rep[b])];
      q.meet[a * m + b] = theta.class_of[lattice.meet_of(rep[a], rep[b])];
      q.leq[a * m + b] = (q.meet[a * m + b] == a) ? 1 : 0;
    }
  q.bottom = theta.class_of[lattice.bottom];
  q.top = theta.class_of[lattice.top];
  FrameHom hom{lattice, q, theta.class_of};
  return QuotientFrameResult{std::move(q), std::move(hom)};
}

// The congruence identifying opens with equal trace on A.
inline FrameCongruence subset_congruence(const FiniteSpace& space, Mask a) {
  Frame f = frame_of_opens(space);
  std::vector<Mask> traces;
  std::vector<int> raw(f.size);
  for (int i = 0; i < f.size; ++i) {
    Mask tr = f.elems[i] & a;
    auto it = std::find(traces.begin(), traces.end(), tr);
    if (it == traces.end()) {
      traces.push_back(tr);
      raw[i] = static_cast<int>(traces.size()) - 1;
    } else {
      raw[i] = static_cast<int>(it - traces.begin());
    }
  }
  return congruence_from_classes(std::move(f), std::move(raw));
}

// ---------------------------------------------------------------------------
// Filters

// Every filter of a finite lattice is the up-set of the meet of its
// members, so the principal up-sets are all of them.
inline std::vector<std::vector<int>> all_filters(const Frame& f) {
  std::vector<std::vector<int>> out;
  for (int e = 0; e < f.size; ++e) {
    std::vector<int> filter;
    for (int a = 0; a < f.size; ++a)
      if (f.le(e, a)) filter.push_back(a);
    out.push_back(std::move(filter));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_prime_filter(const Frame& f, const std::vector<int>& filter) {
  std::vector<bool> in(f.size, false);
  for (int a : filter) in[a] = true;
  for (int a = 0; a < f.size; ++a)
    for (int b = 0; b < f.size; ++b)
      if (in[f.join_of(a, b)] && !in[a] && !in[b]) return false;
  return true;
}

inline bool immediately_precedes(const Frame& f, int below, int above) {
  if (below == above || !f.le(below, above)) return false;
  for (int x = 0; x < f.size; ++x)
    if (x != below && x != above && f.le(below, x) && f.le(x, above)) return false;
  return true;
}

// Prime filters containing an immediate-predecessor pair: some member has
// an immediate predecessor outside the filter.
inline bool is_slicing_filter(const Frame& f, const std::vector<int>& filter) {
  if (!is_prime_filter(f, filter)) return false;
  std::vector<bool> in(f.size, false);
  for (int a : filter) in[a] = true;
  for (int a : filter)
    for (int b = 0; b < f.size; ++b)
      if (!in[b] && immediately_precedes(f, b, a)) return true;
  return false;
}

inline std::vector<std::vector<int>> slicing_filters(const FiniteSpace& space) {
  Frame f = frame_of_opens(space);
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& filter : all_filters(f))
    if (is_slicing_filter(f, filter)) out.push_back(filter);
  return out;
}

// The neighborhood filter U(x) as a set of open indices.
inline std::vector<int> neighborhood_filter(const FiniteSpace& space, int x) {
  std::vector<int> out;
  const std::vector<Mask>& opens = space.opens();
  for (std::size_t i = 0; i < opens.size(); ++i)
    if (mask_contains(opens[i], x)) out.push_back(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------------------
// Reconstruction of maps from frame isomorphisms

// For phi: opens(Y) -> opens(X) an isomorphism, X TD and Y T0, the induced
// point map sends x to the unique point of phi^{-1}(U) \ phi^{-1}(U\{x}),
// where U is any open neighborhood of x with U\{x} open; the choice of U
// does not matter, and that independence is asserted rather than assumed.
inline SpaceMap map_from_frame_iso(const FrameHom& phi, const FiniteSpace& x_space, const FiniteSpace& y_space) {
  if (!(phi.src.elems == y_space.opens()) || !(phi.dst.elems == x_space.opens()))
    throw PreconditionError("the hom does not connect the frames of the given spaces");
  if (!is_frame_iso(phi)) throw NotAnIsomorphismError("the hom is not a frame isomorphism");
  if (!is_td(x_space)) throw PreconditionError("domain space is not TD");
  if (!is_t0(y_space)) throw PreconditionError("codomain space is not T0");

  std::vector<int> inv(phi.dst.size);
  for (int i = 0; i < phi.src.size; ++i) inv[phi.table[i]] = i;
  auto x_index = [&x_space](Mask u) {
    auto it = std::lower_bound(x_space.opens().begin(), x_space.opens().end(), u);
    return static_cast<int>(it - x_space.opens().begin());
  };

  std::vector<int> table(x_space.n(), -1);
  for (int x = 0; x < x_space.n(); ++x) {
    for (Mask u : x_space.opens()) {
      if (!mask_contains(u, x)) continue;
      Mask punctured = u & ~singleton_mask(x);
      if (!x_space.is_open(punctured)) continue;
      Mask diff = y_space.opens()[inv[x_index(u)]] & ~y_space.opens()[inv[x_index(punctured)]];
      if (mask_size(diff) != 1)
        throw NotAnIsomorphismError("transition set for point " + std::to_string(x) + " is not a singleton");
      int y = std::countr_zero(diff);
      if (table[x] != -1 && table[x] != y)
        throw NotAnIsomorphismError("transition point for point " + std::to_string(x) +
                                    " depends on the chosen neighborhood");
      table[x] = y;
    }
    if (table[x] == -1) throw PreconditionError("no admissible neighborhood at point " + std::to_string(x));
  }
  return SpaceMap(x_space, y_space, std::move(table));
}

// ---------------------------------------------------------------------------
// Enumeration of frame isomorphisms

inline std::vector<int> join_irreducibles(const Frame& f) {
  std::vector<int> out;
  for (int u = 0; u < f.size; ++u) {
    if (u == f.bottom) continue;
    int below = f.bottom;
    for (int v = 0; v < f.size; ++v)
      if (v != u && f.le(v, u)) below = f.join_of(below, v);
    if (below != u) out.push_back(u);
  }
  return out;
}

// All isomorphisms from F to G. A lattice isomorphism restricts to an order
// isomorphism of join-irreducibles and is the join-extension of it, so the
// candidates come from bijections of the irreducible posets; each extension
// is then validated literally.
inline std::vector<FrameHom> all_frame_isos(const Frame& f, const Frame& g) {
  std::vector<FrameHom> out;
  if (f.size != g.size) return out;
  std::vector<int> ji_f = join_irreducibles(f);
  std::vector<int> ji_g = join_irreducibles(g);
  if (ji_f.size() != ji_g.size()) return out;
  const int k = static_cast<int>(ji_f.size());
  std::vector<int> assign(k, -1);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      std::vector<int> table(f.size, -1);
      for (int u = 0; u < f.size; ++u) {
        int image = g.bottom;
        for (int j = 0; j < k; ++j)
          if (f.le(ji_f[j], u)) image = g.join_of(image, ji_g[assign[j]]);
        table[u] = image;
      }
      FrameHom h{f, g, std::move(table)};
      if (is_frame_iso(h)) out.push_back(std::move(h));
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (f.le(ji_f[i], ji_f[j]) != g.le(ji_g[c], ji_g[assign[j]])) ok = false;
        if (f.le(ji_f[j], ji_f[i]) != g.le(ji_g[assign[j]], ji_g[c])) ok = false;
      }
      if (!ok) continue;
      used[c] = true;
      assign[i] = c;
      self(self, i + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace fintop
