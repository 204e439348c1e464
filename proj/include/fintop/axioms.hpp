#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/constructions.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

// ---------------------------------------------------------------------------
// Individual predicates
//
// Throughout, B_x is the minimal open neighborhood of x. A pair of points
// has disjoint open neighborhoods exactly when the minimal ones are
// disjoint, and likewise for neighborhoods of closed sets, so the finite
// separation quantifiers reduce to tests on minimal opens.

inline bool is_t0(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y) {
      bool separated = false;
      for (Mask u : s.opens())
        if (mask_contains(u, x) != mask_contains(u, y)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

inline bool is_t1(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = 0; y < s.n(); ++y)
      if (x != y && mask_contains(s.min_open_neighborhood(x), y)) return false;
  return true;
}

inline bool is_t2(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y)
      if ((s.min_open_neighborhood(x) & s.min_open_neighborhood(y)) != 0) return false;
  return true;
}

inline bool is_td_point(const FiniteSpace& s, int x) {
  for (Mask u : s.opens())
    if (mask_contains(u, x) && s.is_open(u & ~singleton_mask(x))) return true;
  return false;
}

inline bool is_td(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (!is_td_point(s, x)) return false;
  return true;
}

inline bool is_urysohn(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y)
      if ((s.closure(s.min_open_neighborhood(x)) & s.closure(s.min_open_neighborhood(y))) != 0) return false;
  return true;
}

inline bool is_weakly_urysohn(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y) {
      if (s.topologically_indistinguishable(x, y)) continue;
      if ((s.closure(s.min_open_neighborhood(x)) & s.closure(s.min_open_neighborhood(y))) != 0) return false;
    }
  return true;
}

// Every open neighborhood of x contains cl{x}.
inline bool is_r0(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (!mask_subset(s.point_closure(x), s.min_open_neighborhood(x))) return false;
  return true;
}

inline bool is_r1(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y) {
      if (s.topologically_indistinguishable(x, y)) continue;
      if ((s.min_open_neighborhood(x) & s.min_open_neighborhood(y)) != 0) return false;
    }
  return true;
}

inline bool is_rd_point(const FiniteSpace& s, int x) {
  return s.is_locally_closed(s.indistinguishability_class(x));
}

// Every indistinguishability class is locally closed.
inline bool is_rd(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (!is_rd_point(s, x)) return false;
  return true;
}

// {x}' is closed whenever x is distinguishable from every other point.
inline bool is_big_rd(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (s.indistinguishability_class(x) == singleton_mask(x) &&
        !s.is_closed(s.derived_set(singleton_mask(x))))
      return false;
  return true;
}

inline bool is_regular(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (Mask f : s.closed_sets()) {
      if (f == 0 || mask_contains(f, x)) continue;
      if ((s.min_open_neighborhood(x) & s.min_open_superset(f)) != 0) return false;
    }
  return true;
}

inline bool is_normal(const FiniteSpace& s) {
  const std::vector<Mask> closed = s.closed_sets();
  for (Mask f : closed)
    for (Mask g : closed) {
      if (f == 0 || g == 0 || (f & g) != 0) continue;
      if ((s.min_open_superset(f) & s.min_open_superset(g)) != 0) return false;
    }
  return true;
}

// Real-valued continuous functions on a finite space are exactly the
// functions constant on connected components, so a point and a closed set
// are separated by one iff no component meets both.
inline bool is_completely_regular(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x) {
    Mask comp = component_of(s, x);
    for (Mask f : s.closed_sets())
      if (!mask_contains(f, x) && (f & comp) != 0) return false;
  }
  return true;
}

inline bool is_quasi_sober(const FiniteSpace& s) {
  for (Mask c : irreducible_closed_sets(s))
    if (generic_points(s, c).empty()) return false;
  return true;
}

inline bool is_sober(const FiniteSpace& s) { return is_sober_space(s); }

// Any two nonempty open sets meet.
inline bool is_irreducible_space(const FiniteSpace& s) {
  for (Mask u : s.opens())
    for (Mask v : s.opens())
      if (u != 0 && v != 0 && (u & v) == 0) return false;
  return s.n() >= 1;
}

inline bool is_totally_disconnected(const FiniteSpace& s) {
  for (Mask c : components(s))
    if (mask_size(c) != 1) return false;
  return true;
}

inline bool is_totally_separated(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (quasi_component_of(s, x) != singleton_mask(x)) return false;
  return true;
}

inline bool is_weakly_totally_disconnected(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (component_of(s, x) != s.point_closure(x)) return false;
  return true;
}

inline bool is_weakly_totally_separated(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (quasi_component_of(s, x) != s.point_closure(x)) return false;
  return true;
}

// Closures of open sets are open.
inline bool is_extremally_disconnected(const FiniteSpace& s) {
  for (Mask u : s.opens())
    if (!s.is_open(s.closure(u))) return false;
  return true;
}

// A base of clopen sets exists iff every minimal open neighborhood is
// clopen (any base must contain each of them).
inline bool is_zero_dimensional(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (!s.is_clopen(s.min_open_neighborhood(x))) return false;
  return true;
}

// Every open set is closed.
inline bool is_almost_discrete(const FiniteSpace& s) {
  for (Mask u : s.opens())
    if (!s.is_closed(u)) return false;
  return true;
}

// Closure under arbitrary intersections; pairwise closure settles every
// finite family.
inline bool is_alexandroff(const FiniteSpace& s) {
  for (Mask u : s.opens())
    for (Mask v : s.opens())
      if (!s.is_open(u & v)) return false;
  return true;
}

inline bool is_discrete(const FiniteSpace& s) {
  return s.opens().size() == (std::size_t{1} << s.n());
}

// Some open neighborhood of each point is Hausdorff as a subspace. The
// minimal one suffices since the property is hereditary.
inline bool is_locally_hausdorff(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (!is_t2(subspace(s, s.min_open_neighborhood(x)).space)) return false;
  return true;
}

inline bool is_locally_r1(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (!is_r1(subspace(s, s.min_open_neighborhood(x)).space)) return false;
  return true;
}

// Every compact subset is closed; every subset of a finite space is
// compact.
inline bool is_kc(const FiniteSpace& s) {
  for (Mask m = 0; m <= s.full(); ++m)
    if (is_compact_subset(s, m) && !s.is_closed(m)) return false;
  return true;
}

// Every countable compact subset is closed; subsets of a finite space are
// all countable and compact, so the sweep is the same as for KC.
inline bool is_kc_omega(const FiniteSpace& s) { return is_kc(s); }

// A sequence converges to x iff some tail lies in B_x, so the value sets of
// sequences converging to x are the sets P u T with T a nonempty subset of
// B_x and P a finite throwaway prefix; closedness of the tail part is the
// binding constraint, giving: every T u {x} with T inside B_x is closed.
inline bool is_sc(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x) {
    bool ok = true;
    for_each_subset(s.min_open_neighborhood(x), [&](Mask t) {
      if (!s.is_closed(t | singleton_mask(x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// Unique sequential limits: tails live in minimal neighborhoods, so two
// distinct limits x, y need a point in B_x and B_y at once.
inline bool is_sh(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y)
      if ((s.min_open_neighborhood(x) & s.min_open_neighborhood(y)) != 0) return false;
  return true;
}

namespace detail {

// Labeled Hausdorff topologies on k points, obtained by enumerating all
// topologies and keeping the ones passing the literal T2 test. Beyond the
// enumeration cap only the discrete candidate is offered; a Hausdorff
// domain never constrains more maps than the discrete one on the same
// points, since any table from it stays continuous over the discrete
// refinement with the same image.
inline const std::vector<FiniteSpace>& hausdorff_spaces(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<FiniteSpace>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) {
    std::vector<FiniteSpace> out;
    if (k <= kMaxEnumerationPoints) {
      enumerate_topologies(k, [&out](const FiniteSpace& s) {
        if (is_t2(s)) out.push_back(s);
      });
    } else {
      FiniteSpace d = FiniteSpace::discrete(k);
      if (is_t2(d)) out.push_back(std::move(d));
    }
    it = cache.emplace(k, std::move(out)).first;
  }
  return it->second;
}

}  // namespace detail

// The continuous image of every compact Hausdorff space is closed. Finite
// Hausdorff domains suffice because an image never has more points than its
// preimage has. For every domain all tables are run when that is feasible;
// beyond the budget one representative per image is enough, closedness of
// the image being all that is at stake.
inline bool is_wh(const FiniteSpace& s) {
  for (int k = 1; k <= s.n(); ++k) {
    for (const FiniteSpace& h : detail::hausdorff_spaces(k)) {
      double tables = 1;
      for (int i = 0; i < k; ++i) tables *= s.n();
      if (tables <= 100000.0) {
        std::vector<int> table(k, 0);
        while (true) {
          SpaceMap f(h, s, table);
          if (is_continuous(f) && !s.is_closed(f.range())) return false;
          int i = 0;
          for (; i < k; ++i) {
            if (++table[i] < s.n()) break;
            table[i] = 0;
          }
          if (i == k) break;
        }
      } else {
        for (Mask img = 1; img <= s.full(); ++img) {
          if (mask_size(img) > k) continue;
          std::vector<int> pts = mask_points(img);
          std::vector<int> table(k);
          for (int i = 0; i < k; ++i) table[i] = pts[std::min<std::size_t>(i, pts.size() - 1)];
          SpaceMap f(h, s, table);
          if (is_continuous(f) && !s.is_closed(f.range())) return false;
        }
      }
    }
  }
  return true;
}

// A strictly finer topology exists iff some non-open subset does, since the
// simple extension by such a subset is strictly finer and every topology on
// a finite set is compact. So the search for a strictly finer compact
// topology runs over simple extensions by all subsets.
inline bool is_maximal_compact(const FiniteSpace& s) {
  if (!is_compact_subset(s, s.full())) return false;
  for (Mask a = 0; a <= s.full(); ++a) {
    if (s.is_open(a)) continue;
    FiniteSpace finer = simple_extension(s, a);
    if (is_compact_subset(finer, finer.full()) && finer.opens().size() > s.opens().size()) return false;
  }
  return true;
}

inline bool is_hereditarily_sober(const FiniteSpace& s) {
  for (Mask a = 1; a <= s.full(); ++a)
    if (!is_sober(subspace(s, a).space)) return false;
  return true;
}

inline bool is_hereditarily_quasi_sober(const FiniteSpace& s) {
  for (Mask a = 1; a <= s.full(); ++a)
    if (!is_quasi_sober(subspace(s, a).space)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The axiom catalogue

enum class Axiom {
  T0,
  T1,
  T2,
  TD,
  Urysohn,
  WeaklyUrysohn,
  R0,
  R1,
  Rd,
  BigRD,
  Regular,
  CompletelyRegular,
  Normal,
  Sober,
  QuasiSober,
  Irreducible,
  TotallyDisconnected,
  TotallySeparated,
  WeaklyTotallyDisconnected,
  WeaklyTotallySeparated,
  ExtremallyDisconnected,
  ZeroDimensional,
  AlmostDiscrete,
  LocallyHausdorff,
  LocallyR1,
  KC,
  KCOmega,
  SC,
  SH,
  WH,
  MaximalCompact,
  Discrete,
  Connected,
};

inline constexpr std::array<Axiom, 33> kAllAxioms = {
    Axiom::T0,
    Axiom::T1,
    Axiom::T2,
    Axiom::TD,
    Axiom::Urysohn,
    Axiom::WeaklyUrysohn,
    Axiom::R0,
    Axiom::R1,
    Axiom::Rd,
    Axiom::BigRD,
    Axiom::Regular,
    Axiom::CompletelyRegular,
    Axiom::Normal,
    Axiom::Sober,
    Axiom::QuasiSober,
    Axiom::Irreducible,
    Axiom::TotallyDisconnected,
    Axiom::TotallySeparated,
    Axiom::WeaklyTotallyDisconnected,
    Axiom::WeaklyTotallySeparated,
    Axiom::ExtremallyDisconnected,
    Axiom::ZeroDimensional,
    Axiom::AlmostDiscrete,
    Axiom::LocallyHausdorff,
    Axiom::LocallyR1,
    Axiom::KC,
    Axiom::KCOmega,
    Axiom::SC,
    Axiom::SH,
    Axiom::WH,
    Axiom::MaximalCompact,
    Axiom::Discrete,
    Axiom::Connected,
};

inline std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::T0: return "t0";
    case Axiom::T1: return "t1";
    case Axiom::T2: return "t2";
    case Axiom::TD: return "td";
    case Axiom::Urysohn: return "urysohn";
    case Axiom::WeaklyUrysohn: return "weakly_urysohn";
    case Axiom::R0: return "r0";
    case Axiom::R1: return "r1";
    case Axiom::Rd: return "rd";
    case Axiom::BigRD: return "big_rd";
    case Axiom::Regular: return "regular";
    case Axiom::CompletelyRegular: return "completely_regular";
    case Axiom::Normal: return "normal";
    case Axiom::Sober: return "sober";
    case Axiom::QuasiSober: return "quasi_sober";
    case Axiom::Irreducible: return "irreducible";
    case Axiom::TotallyDisconnected: return "totally_disconnected";
    case Axiom::TotallySeparated: return "totally_separated";
    case Axiom::WeaklyTotallyDisconnected: return "weakly_totally_disconnected";
    case Axiom::WeaklyTotallySeparated: return "weakly_totally_separated";
    case Axiom::ExtremallyDisconnected: return "extremally_disconnected";
    case Axiom::ZeroDimensional: return "zero_dimensional";
    case Axiom::AlmostDiscrete: return "almost_discrete";
    case Axiom::LocallyHausdorff: return "locally_hausdorff";
    case Axiom::LocallyR1: return "locally_r1";
    case Axiom::KC: return "kc";
    case Axiom::KCOmega: return "kc_omega";
    case Axiom::SC: return "sc";
    case Axiom::SH: return "sh";
    case Axiom::WH: return "wh";
    case Axiom::MaximalCompact: return "maximal_compact";
    case Axiom::Discrete: return "discrete";
    case Axiom::Connected: return "connected";
  }
  throw Error("unknown axiom");
}

inline std::optional<Axiom> parse_axiom(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

inline bool check(const FiniteSpace& s, Axiom a) {
  switch (a) {
    case Axiom::T0: return is_t0(s);
    case Axiom::T1: return is_t1(s);
    case Axiom::T2: return is_t2(s);
    case Axiom::TD: return is_td(s);
    case Axiom::Urysohn: return is_urysohn(s);
    case Axiom::WeaklyUrysohn: return is_weakly_urysohn(s);
    case Axiom::R0: return is_r0(s);
    case Axiom::R1: return is_r1(s);
    case Axiom::Rd: return is_rd(s);
    case Axiom::BigRD: return is_big_rd(s);
    case Axiom::Regular: return is_regular(s);
    case Axiom::CompletelyRegular: return is_completely_regular(s);
    case Axiom::Normal: return is_normal(s);
    case Axiom::Sober: return is_sober(s);
    case Axiom::QuasiSober: return is_quasi_sober(s);
    case Axiom::Irreducible: return is_irreducible_space(s);
    case Axiom::TotallyDisconnected: return is_totally_disconnected(s);
    case Axiom::TotallySeparated: return is_totally_separated(s);
    case Axiom::WeaklyTotallyDisconnected: return is_weakly_totally_disconnected(s);
    case Axiom::WeaklyTotallySeparated: return is_weakly_totally_separated(s);
    case Axiom::ExtremallyDisconnected: return is_extremally_disconnected(s);
    case Axiom::ZeroDimensional: return is_zero_dimensional(s);
    case Axiom::AlmostDiscrete: return is_almost_discrete(s);
    case Axiom::LocallyHausdorff: return is_locally_hausdorff(s);
    case Axiom::LocallyR1: return is_locally_r1(s);
    case Axiom::KC: return is_kc(s);
    case Axiom::KCOmega: return is_kc_omega(s);
    case Axiom::SC: return is_sc(s);
    case Axiom::SH: return is_sh(s);
    case Axiom::WH: return is_wh(s);
    case Axiom::MaximalCompact: return is_maximal_compact(s);
    case Axiom::Discrete: return is_discrete(s);
    case Axiom::Connected: return is_connected_space(s);
  }
  throw Error("unknown axiom");
}

// ---------------------------------------------------------------------------
// Characterization suites

struct ClauseResult {
  std::string name;
  bool applicable;
  bool value;
};

struct CharacterizationReport {
  Axiom axiom;
  std::vector<ClauseResult> clauses;
  bool agree = true;
  int first = -1;   // indices of the first disagreeing clause pair
  int second = -1;
};

namespace detail {

inline CharacterizationReport finish_report(Axiom a, std::vector<ClauseResult> clauses) {
  CharacterizationReport r{a, std::move(clauses)};
  int base = -1;
  for (std::size_t i = 0; i < r.clauses.size(); ++i) {
    if (!r.clauses[i].applicable) continue;
    if (base == -1) {
      base = static_cast<int>(i);
      continue;
    }
    if (r.clauses[i].value != r.clauses[base].value) {
      r.agree = false;
      r.first = base;
      r.second = static_cast<int>(i);
      break;
    }
  }
  return r;
}

// tau = the saturated sets of some equivalence relation; searched over all
// partitions of the points via restricted growth strings.
inline bool opens_are_saturated_sets_of_some_equivalence(const FiniteSpace& s) {
  std::vector<int> assign(s.n(), 0);
  auto rec = [&](auto&& self, int x, int used) -> bool {
    if (x == s.n()) {
      std::vector<Mask> rows(s.n(), 0);
      for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j)
          if (assign[i] == assign[j]) rows[i] |= singleton_mask(j);
      Preorder eq = Preorder::from_up_rows(s.n(), std::move(rows));
      std::vector<Mask> family;
      for (Mask m = 0; m <= s.full(); ++m)
        if (is_up_set(eq, m)) family.push_back(m);
      return family == s.opens();
    }
    for (int c = 0; c <= used; ++c) {
      assign[x] = c;
      if (self(self, x + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// Completeness of the Boolean algebra of clopen sets: every family of
// clopens has a least upper bound among the clopens. A family and its
// union-closure have the same bounds, so the candidate joins are the masks
// that are unions of clopens.
inline bool clopen_algebra_complete(const FiniteSpace& s) {
  std::vector<Mask> clopens;
  for (Mask u : s.opens())
    if (s.is_clopen(u)) clopens.push_back(u);
  for (Mask m = 0; m <= s.full(); ++m) {
    Mask covered = 0;
    for (Mask c : clopens)
      if (mask_subset(c, m)) covered |= c;
    if (covered != m) continue;
    Mask least = s.full();
    for (Mask c : clopens)
      if (mask_subset(m, c)) least &= c;
    if (!s.is_clopen(least)) return false;
  }
  return true;
}

}  // namespace detail

// Evaluates every registered equivalent formulation of the axiom
// independently and reports agreement or the first disagreeing pair.
inline CharacterizationReport characterization_suite(const FiniteSpace& s, Axiom axiom) {
  std::vector<ClauseResult> cs;
  auto add = [&cs](std::string name, bool value) { cs.push_back({std::move(name), true, value}); };
  auto add_if = [&cs](std::string name, bool applicable, bool value) {
    cs.push_back({std::move(name), applicable, value});
  };
  Preorder order = specialization_preorder(s);

  switch (axiom) {
    case Axiom::T0: {
      add("some open set contains exactly one of any two points", is_t0(s));
      add("specialization preorder is antisymmetric", order.is_antisymmetric());
      {
        bool v = true;
        for (int x = 0; x < s.n() && v; ++x)
          for (int y = x + 1; y < s.n(); ++y)
            if (s.min_open_neighborhood(x) == s.min_open_neighborhood(y)) {
              v = false;
              break;
            }
        add("equal neighborhood filters force equal points", v);
      }
      add("diagonal closed in the Alexandroff topology of the pair equivalence",
          diagonal_alexandroff_closed(s, DiagonalRelation::equivalence));
      break;
    }
    case Axiom::T1: {
      add("each of any two points has an open set avoiding the other", is_t1(s));
      {
        bool v = true;
        for (int x = 0; x < s.n() && v; ++x)
          for (int y = 0; y < s.n(); ++y)
            if (x != y && order.leq(x, y)) {
              v = false;
              break;
            }
        add("specialization preorder is equality", v);
      }
      {
        bool v = true;
        for (int x = 0; x < s.n(); ++x)
          if (!s.is_closed(singleton_mask(x))) {
            v = false;
            break;
          }
        add("all singletons are closed", v);
      }
      {
        bool v = true;
        for (int x = 0; x < s.n(); ++x)
          if (s.min_open_neighborhood(x) != singleton_mask(x)) {
            v = false;
            break;
          }
        add("each neighborhood filter intersects to the point alone", v);
      }
      {
        bool v = true;
        for (int x = 0; x < s.n(); ++x)
          if (s.derived_set(singleton_mask(x)) != 0) {
            v = false;
            break;
          }
        add("singleton derived sets are empty", v);
      }
      {
        bool v = true;
        for (Mask a = 0; a <= s.full() && v; ++a)
          if (s.min_open_superset(a) != a) v = false;
        add("every set is the intersection of its neighborhoods", v);
      }
      add("diagonal closed in the Alexandroff topology of the pair preorder",
          diagonal_alexandroff_closed(s, DiagonalRelation::preorder));
      break;
    }
    case Axiom::R0: {
      add("specialization preorder is symmetric", order.is_symmetric());
      add("every open neighborhood of a point contains its closure", is_r0(s));
      {
        bool v = true;
        for (int x = 0; x < s.n() && v; ++x)
          for (int y = 0; y < s.n(); ++y) {
            Mask cx = s.point_closure(x), cy = s.point_closure(y);
            if (cx != cy && (cx & cy) != 0) {
              v = false;
              break;
            }
          }
        add("distinct point closures are disjoint", v);
      }
      {
        bool v = true;
        for (int x = 0; x < s.n() && v; ++x)
          for (int y = 0; y < s.n(); ++y)
            if (!s.topologically_indistinguishable(x, y) && mask_contains(s.min_open_neighborhood(x), y)) {
              v = false;
              break;
            }
        add("distinguishable points admit one-sided open separation", v);
      }
      {
        bool v = true;
        for (Mask a = 0; a <= s.full() && v; ++a)
          if (s.saturate_indistinguishable(a) != s.min_open_superset(a)) v = false;
        add("the class saturation of a set is the intersection of its neighborhoods", v);
      }
      {
        bool v = true;
        for (int x = 0; x < s.n(); ++x)
          if (s.essential_derived(singleton_mask(x)) != 0) {
            v = false;
            break;
          }
        add("essential derived sets of singletons are empty", v);
      }
      add("quotient by indistinguishability is T1", is_t1(t0_quotient(s).space));
      break;
    }
    case Axiom::R1: {
      add("distinguishable points have disjoint open neighborhoods", is_r1(s));
      add("quotient by indistinguishability is Hausdorff", is_t2(t0_quotient(s).space));
      break;
    }
    case Axiom::TD: {
      add("all singletons are locally closed", [&s] {
        for (int x = 0; x < s.n(); ++x)
          if (!s.is_locally_closed(singleton_mask(x))) return false;
        return true;
      }());
      add("each point has an open neighborhood staying open without it", is_td(s));
      add("singleton derived sets are closed", [&s] {
        for (int x = 0; x < s.n(); ++x)
          if (!s.is_closed(s.derived_set(singleton_mask(x)))) return false;
        return true;
      }());
      add("all derived sets are closed", [&s] {
        for (Mask a = 0; a <= s.full(); ++a)
          if (!s.is_closed(s.derived_set(a))) return false;
        return true;
      }());
      add("weakly isolated points of any set are isolated in it", [&s] {
        for (Mask set = 0; set <= s.full(); ++set)
          for (Mask t = set; t != 0; t &= t - 1) {
            int x = std::countr_zero(t);
            bool weakly_isolated = false;
            for (Mask u : s.opens())
              if (mask_contains(u, x) && mask_subset(u & set, s.point_closure(x))) {
                weakly_isolated = true;
                break;
              }
            bool isolated = false;
            for (Mask u : s.opens())
              if (mask_contains(u, x) && (u & set) == singleton_mask(x)) {
                isolated = true;
                break;
              }
            if (weakly_isolated && !isolated) return false;
          }
        return true;
      }());
      add("the locally closed sets generate the discrete topology", is_discrete(skula(s)));
      break;
    }
    case Axiom::Rd: {
      add("all indistinguishability classes are locally closed", is_rd(s));
      add("each point has an open neighborhood staying open without its class", [&s] {
        for (int x = 0; x < s.n(); ++x) {
          bool found = false;
          for (Mask u : s.opens())
            if (mask_contains(u, x) && s.is_open(u & ~s.indistinguishability_class(x))) {
              found = true;
              break;
            }
          if (!found) return false;
        }
        return true;
      }());
      add("singleton strong derived sets are closed", [&s] {
        for (int x = 0; x < s.n(); ++x)
          if (!s.is_closed(s.strong_derived(singleton_mask(x)))) return false;
        return true;
      }());
      add("all strong derived sets are closed", [&s] {
        for (Mask a = 0; a <= s.full(); ++a)
          if (!s.is_closed(s.strong_derived(a))) return false;
        return true;
      }());
      add("the locally closed sets generate the saturated sets of indistinguishability",
          skula(s) == alexandroff_space(specialization_preorder(s).symmetric_part()));
      add("all essential derived sets are closed", [&s] {
        for (Mask a = 0; a <= s.full(); ++a)
          if (!s.is_closed(s.essential_derived(a))) return false;
        return true;
      }());
      break;
    }
    case Axiom::AlmostDiscrete: {
      add("quotient by indistinguishability is discrete", is_discrete(t0_quotient(s).space));
      add("opens are the saturated sets of some equivalence relation",
          detail::opens_are_saturated_sets_of_some_equivalence(s));
      add("every open set is closed", is_almost_discrete(s));
      add("every point closure is open", [&s] {
        for (int x = 0; x < s.n(); ++x)
          if (!s.is_open(s.point_closure(x))) return false;
        return true;
      }());
      add("intersection-closed and zero-dimensional", is_alexandroff(s) && is_zero_dimensional(s));
      add("intersection-closed and R0", is_alexandroff(s) && is_r0(s));
      add("all strong derived sets are empty", [&s] {
        for (Mask a = 0; a <= s.full(); ++a)
          if (s.strong_derived(a) != 0) return false;
        return true;
      }());
      break;
    }
    case Axiom::Irreducible: {
      add("not a union of two proper closed subsets", [&s] {
        for (Mask e1 : s.closed_sets())
          for (Mask e2 : s.closed_sets())
            if (e1 != s.full() && e2 != s.full() && (e1 | e2) == s.full()) return false;
        return true;
      }());
      add("a closed cover by two sets has a full member", [&s] {
        for (Mask e1 : s.closed_sets())
          for (Mask e2 : s.closed_sets())
            if (mask_subset(s.full(), e1 | e2) && e1 != s.full() && e2 != s.full()) return false;
        return true;
      }());
      add("nonempty open sets pairwise meet", is_irreducible_space(s));
      add("every nonempty open set is dense", [&s] {
        for (Mask u : s.opens())
          if (u != 0 && s.closure(u) != s.full()) return false;
        return true;
      }());
      add("the closure of the whole space is irreducible", is_irreducible_subset(s, s.closure(s.full())));
      add("connected and extremally disconnected", is_connected_space(s) && is_extremally_disconnected(s));
      break;
    }
    case Axiom::Sober: {
      add("every irreducible closed set has exactly one generic point", is_sober(s));
      add("the embedding into the sobrification is bijective", sobrification(s).iota.is_bijective());
      break;
    }
    case Axiom::WeaklyUrysohn: {
      add("distinguishable points have open neighborhoods with disjoint closures", is_weakly_urysohn(s));
      add("quotient by indistinguishability is Urysohn", is_urysohn(t0_quotient(s).space));
      break;
    }
    case Axiom::ExtremallyDisconnected: {
      add("closures of open sets are open", is_extremally_disconnected(s));
      add("disjoint open sets have disjoint closures", [&s] {
        for (Mask u : s.opens())
          for (Mask v : s.opens())
            if ((u & v) == 0 && (s.closure(u) & s.closure(v)) != 0) return false;
        return true;
      }());
      add_if("the clopen algebra is complete (zero-dimensional spaces)", is_zero_dimensional(s),
             detail::clopen_algebra_complete(s));
      break;
    }
    case Axiom::MaximalCompact: {
      add("no strictly finer compact topology exists", is_maximal_compact(s));
      add("compact and KC", is_compact_subset(s, s.full()) && is_kc(s));
      break;
    }
    default: {
      add("primary definition", check(s, axiom));
      break;
    }
  }
  return detail::finish_report(axiom, std::move(cs));
}

// ---------------------------------------------------------------------------
// Urysohn-type separating functions

struct Rational {
  int num = 0;
  int den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// A continuous [0,1]-valued function with f = 1 on a and f = 0 on b, when
// one exists. Continuous real functions on a finite space are constant on
// connected components, so a separating one exists iff no component meets
// both sets, and an indicator then works.
inline std::vector<Rational> urysohn_function(const FiniteSpace& s, Mask a, Mask b) {
  if ((a & b) != 0) throw Error("the two sets must be disjoint");
  std::vector<Rational> values(s.n(), Rational{0, 1});
  for (Mask comp : components(s)) {
    bool meets_a = (comp & a) != 0;
    bool meets_b = (comp & b) != 0;
    if (meets_a && meets_b)
      throw NoSeparationError("component " + mask_to_string(comp) + " meets both sets");
    if (meets_a)
      for (Mask t = comp; t != 0; t &= t - 1) values[std::countr_zero(t)] = Rational{1, 1};
  }
  return values;
}

}  // namespace fintop
