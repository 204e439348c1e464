#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/space.hpp"

namespace fintop {

// A total function between two finite spaces.
struct SpaceMap {
  FiniteSpace dom;
  FiniteSpace cod;
  std::vector<int> table;  // table[x] in 0..cod.n()-1

  SpaceMap(FiniteSpace d, FiniteSpace c, std::vector<int> t)
      : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
    if (static_cast<int>(table.size()) != dom.n()) throw Error("map table length does not match domain");
    for (int v : table)
      if (v < 0 || v >= cod.n()) throw Error("map table value out of codomain range");
  }

  int operator()(int x) const { return table[x]; }

  Mask image(Mask a) const {
    Mask out = 0;
    for (Mask t = a; t != 0; t &= t - 1) out |= singleton_mask(table[std::countr_zero(t)]);
    return out;
  }

  Mask preimage(Mask b) const {
    Mask out = 0;
    for (int x = 0; x < dom.n(); ++x)
      if (mask_contains(b, table[x])) out |= singleton_mask(x);
    return out;
  }

  Mask range() const { return image(dom.full()); }

  bool is_injective() const { return mask_size(range()) == dom.n(); }
  bool is_surjective() const { return range() == cod.full(); }
  bool is_bijective() const { return dom.n() == cod.n() && is_injective(); }

  friend bool operator==(const SpaceMap& a, const SpaceMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(table[i]);
    }
    return s + "]";
  }
};

inline SpaceMap identity_map(const FiniteSpace& space) {
  std::vector<int> t(space.n());
  for (int x = 0; x < space.n(); ++x) t[x] = x;
  return SpaceMap(space, space, std::move(t));
}

inline SpaceMap constant_map(const FiniteSpace& dom, const FiniteSpace& cod, int value) {
  return SpaceMap(dom, cod, std::vector<int>(dom.n(), value));
}

inline SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.cod == g.dom)) throw Error("composition mismatch");
  std::vector<int> t(f.dom.n());
  for (int x = 0; x < f.dom.n(); ++x) t[x] = g.table[f.table[x]];
  return SpaceMap(f.dom, g.cod, std::move(t));
}

inline bool is_continuous(const SpaceMap& f) {
  for (Mask v : f.cod.opens())
    if (!f.dom.is_open(f.preimage(v))) return false;
  return true;
}

inline bool is_open_map(const SpaceMap& f) {
  for (Mask u : f.dom.opens())
    if (!f.cod.is_open(f.image(u))) return false;
  return true;
}

inline bool is_closed_map(const SpaceMap& f) {
  for (Mask u : f.dom.opens())
    if (!f.cod.is_closed(f.image(f.dom.full() & ~u))) return false;
  return true;
}

inline bool is_monotone(const SpaceMap& f) {
  Preorder pd = specialization_preorder(f.dom);
  Preorder pc = specialization_preorder(f.cod);
  for (int x = 0; x < f.dom.n(); ++x)
    for (int y = 0; y < f.dom.n(); ++y)
      if (pd.leq(x, y) && !pc.leq(f(x), f(y))) return false;
  return true;
}

inline SpaceMap inverse(const SpaceMap& f) {
  if (!f.is_bijective()) throw Error("inverse of a non-bijective map");
  std::vector<int> t(f.cod.n());
  for (int x = 0; x < f.dom.n(); ++x) t[f(x)] = x;
  return SpaceMap(f.cod, f.dom, std::move(t));
}

inline bool is_homeomorphism(const SpaceMap& f) {
  return f.is_bijective() && is_continuous(f) && is_continuous(inverse(f));
}

struct MapPredicates {
  bool continuous;
  bool open_map;
  bool closed_map;
  bool homeomorphism;
};

inline MapPredicates map_predicates(const SpaceMap& f) {
  return MapPredicates{is_continuous(f), is_open_map(f), is_closed_map(f), is_homeomorphism(f)};
}

}  // namespace fintop
