#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Carrier-level bit machinery shared by the enumeration and axiom-checking
// code. An ESet is a subset of the carrier of a finite Boolean algebra with
// one bit per element mask, so it is usable while the carrier fits in 64
// bits (n_atoms <= 6). Families, stacks, ultracontact witnesses and grills
// all reduce to ESets on that scale.

namespace uclab::detail {

using ESet = std::uint64_t;

constexpr int kMaxESetAtoms = 6;

constexpr ESet full_eset(int n_atoms) {
  const int carrier = 1 << n_atoms;
  return carrier == 64 ? ~ESet{0} : (ESet{1} << carrier) - 1;
}

inline bool eset_contains(ESet s, std::uint32_t e) { return (s >> e) & 1u; }

inline int eset_size(ESet s) { return std::popcount(s); }

// AND of all member masks; the empty meet is the top element.
inline std::uint32_t meet_of(ESet s, int n_atoms) {
  std::uint32_t m = (1u << n_atoms) - 1;
  while (s) {
    m &= static_cast<std::uint32_t>(std::countr_zero(s));
    s &= s - 1;
  }
  return m;
}

// OR of all member masks; the empty join is 0.
inline std::uint32_t join_of(ESet s) {
  std::uint32_t j = 0;
  while (s) {
    j |= static_cast<std::uint32_t>(std::countr_zero(s));
    s &= s - 1;
  }
  return j;
}

// The up-set of one element, as an ESet.
inline ESet upset_of(std::uint32_t x, int n_atoms) {
  const std::uint32_t full = (1u << n_atoms) - 1;
  ESet s = 0;
  std::uint32_t m = x;
  for (;;) {
    s |= ESet{1} << m;
    if (m == full) break;
    m = (m + 1) | x;
  }
  return s;
}

// The down-set of one element.
inline ESet downset_of(std::uint32_t x) {
  ESet s = 0;
  std::uint32_t m = x;
  for (;;) {
    s |= ESet{1} << m;
    if (m == 0) break;
    m = (m - 1) & x;
  }
  return s;
}

// Elements that meet the atom set H, i.e. the up-closure of the family of
// singleton atoms drawn from H.
inline ESet meets_atom_set(std::uint32_t atom_set, int n_atoms) {
  const std::uint32_t carrier = 1u << n_atoms;
  ESet s = 0;
  for (std::uint32_t e = 1; e < carrier; ++e) {
    if (e & atom_set) s |= ESet{1} << e;
  }
  return s;
}

// Up-closure of an arbitrary family. One pass per atom suffices: adding
// atoms one at a time reaches every superset.
inline ESet up_closure(ESet s, int n_atoms) {
  for (int a = 0; a < n_atoms; ++a) {
    ESet grown = s;
    ESet rest = s;
    while (rest) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      grown |= ESet{1} << (static_cast<std::uint32_t>(e) | (1u << a));
    }
    s = grown;
  }
  return s;
}

inline bool is_up_closed(ESet s, int n_atoms) {
  return up_closure(s, n_atoms) == s;
}

// Minimal members of s. For an up-closed s this is its generator antichain.
inline std::vector<std::uint32_t> min_elements(ESet s, int n_atoms) {
  (void)n_atoms;
  std::vector<std::uint32_t> out;
  ESet rest = s;
  while (rest) {
    const std::uint32_t e = static_cast<std::uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    bool minimal = true;
    ESet others = s;
    while (others && minimal) {
      const std::uint32_t f =
          static_cast<std::uint32_t>(std::countr_zero(others));
      others &= others - 1;
      if (f != e && (f & e) == f) minimal = false;
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

// Element-wise joins of two families.
inline ESet minkowski(ESet f, ESet g) {
  ESet out = 0;
  ESet rest_f = f;
  while (rest_f) {
    const std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(rest_f));
    rest_f &= rest_f - 1;
    ESet rest_g = g;
    while (rest_g) {
      const std::uint32_t y =
          static_cast<std::uint32_t>(std::countr_zero(rest_g));
      rest_g &= rest_g - 1;
      out |= ESet{1} << (x | y);
    }
  }
  return out;
}

// Every g in G lies above some f in F. The empty G is supported by
// anything; the empty F supports only the empty G.
inline bool supports(ESet f, ESet g, int n_atoms) {
  return (g & ~up_closure(f, n_atoms)) == 0;
}

// All up-closed subsets of the carrier, ascending by ESet value, the empty
// stack and the whole carrier included. Enumerated through generator
// antichains, so the cost is proportional to the output.
std::vector<ESet> all_stack_esets(int n_atoms);

// Per-carrier lookup tables for the explicit-family checkers (carrier <= 16).
struct CarrierTables {
  int n_atoms = 0;
  std::uint32_t carrier = 0;
  std::vector<ESet> upset;       // upset[e] = up-set of element e
  std::vector<ESet> up_closure;  // up_closure[family mask] over 2^carrier
};

CarrierTables make_carrier_tables(int n_atoms);

}  // namespace uclab::detail
