#include "uclab/topology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "internal.hpp"

namespace uclab {

namespace {

std::string point_set_name(const std::vector<std::string>& points,
                           std::uint32_t set) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if ((set >> i) & 1u) {
      if (!out.empty()) out += ",";
      out += points[i];
    }
  }
  return out;
}

}  // namespace

FiniteTopSpace::FiniteTopSpace(std::vector<std::string> points,
                               std::vector<std::uint32_t> open_masks)
    : points_(std::move(points)), opens_(std::move(open_masks)) {
  if (points_.empty() || static_cast<int>(points_.size()) > kMaxPoints) {
    throw InvalidInput("FiniteTopSpace: needs 1 to 6 points");
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (p.empty() || !seen.insert(p).second) {
      throw InvalidInput("FiniteTopSpace: point names must be distinct and nonempty");
    }
  }
  for (std::uint32_t o : opens_) {
    if (o > space_mask()) {
      throw InvalidInput("FiniteTopSpace: open set out of range");
    }
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (!is_open(0)) throw InvalidInput("FiniteTopSpace: the empty set must be open");
  if (!is_open(space_mask())) {
    throw InvalidInput("FiniteTopSpace: the whole space must be open");
  }
  for (std::uint32_t a : opens_) {
    for (std::uint32_t b : opens_) {
      if (!is_open(a | b)) {
        throw InvalidInput("FiniteTopSpace: opens are not closed under union (" +
                           point_set_name(points_, a) + " with " +
                           point_set_name(points_, b) + ")");
      }
      if (!is_open(a & b)) {
        throw InvalidInput(
            "FiniteTopSpace: opens are not closed under intersection (" +
            point_set_name(points_, a) + " with " + point_set_name(points_, b) +
            ")");
      }
    }
  }
}

bool FiniteTopSpace::is_open(std::uint32_t set) const {
  return std::binary_search(opens_.begin(), opens_.end(), set);
}

std::uint32_t FiniteTopSpace::interior(std::uint32_t set) const {
  std::uint32_t interior = 0;
  for (std::uint32_t o : opens_) {
    if ((o & ~set) == 0) interior |= o;
  }
  return interior;
}

std::uint32_t FiniteTopSpace::closure(std::uint32_t set) const {
  return space_mask() & ~interior(space_mask() & ~set);
}

bool FiniteTopSpace::is_regular_closed(std::uint32_t set) const {
  return closure(interior(set)) == set;
}

FiniteTopSpace make_space(std::vector<std::string> points,
                          std::vector<std::uint32_t> open_masks) {
  return FiniteTopSpace(std::move(points), std::move(open_masks));
}

RcAlgebra::RcAlgebra(const FiniteTopSpace& space)
    : space_(space), algebra_({"placeholder"}) {
  std::vector<std::uint32_t> rc_sets;
  for (std::uint32_t s = 0; s <= space_.space_mask(); ++s) {
    if (space_.is_regular_closed(s)) rc_sets.push_back(s);
  }

  // Atoms are the minimal nonzero regular closed sets.
  for (std::uint32_t a : rc_sets) {
    if (a == 0) continue;
    bool minimal = true;
    for (std::uint32_t b : rc_sets) {
      if (b != 0 && b != a && (b & ~a) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) atom_extents_.push_back(a);
  }

  std::vector<std::string> atom_names;
  for (std::uint32_t a : atom_extents_) {
    atom_names.push_back(point_set_name(space_.points(), a));
  }
  algebra_ = BooleanAlgebra(atom_names);

  // The finite regular closed algebra is complete and atomic, and the
  // operations below must coincide with the atom-mask Boolean structure.
  // Anything failing here is an internal inconsistency, not bad input.
  if (rc_sets.size() != (std::size_t{1} << atom_extents_.size())) {
    throw Error("RcAlgebra: regular closed set count is not a power of two");
  }
  std::unordered_set<std::uint32_t> rc_lookup(rc_sets.begin(), rc_sets.end());
  for (std::uint32_t x = 0; x < algebra_.carrier_size(); ++x) {
    if (!rc_lookup.count(extent_of_mask(x))) {
      throw Error("RcAlgebra: an atom union is not regular closed");
    }
    for (std::uint32_t y = 0; y < algebra_.carrier_size(); ++y) {
      const std::uint32_t ex = extent_of_mask(x);
      const std::uint32_t ey = extent_of_mask(y);
      if ((ex | ey) != extent_of_mask(x | y)) {
        throw Error("RcAlgebra: join does not match set union");
      }
      if (space_.closure(space_.interior(ex & ey)) != extent_of_mask(x & y)) {
        throw Error("RcAlgebra: meet does not match Cl Int of the intersection");
      }
    }
    const std::uint32_t full = algebra_.carrier_size() - 1;
    if (space_.closure(space_.space_mask() & ~extent_of_mask(x)) !=
        extent_of_mask(full & ~x)) {
      throw Error("RcAlgebra: complement does not match Cl of the set complement");
    }
  }
}

std::uint32_t RcAlgebra::extent(const Element& x) const {
  detail::require_same_algebra(algebra_, x.algebra(), "RcAlgebra::extent");
  return extent_of_mask(x.mask());
}

std::uint32_t RcAlgebra::extent_of_mask(std::uint32_t atom_mask) const {
  std::uint32_t e = 0;
  for (std::size_t i = 0; i < atom_extents_.size(); ++i) {
    if ((atom_mask >> i) & 1u) e |= atom_extents_[i];
  }
  return e;
}

Element RcAlgebra::element_for_extent(std::uint32_t point_set) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < atom_extents_.size(); ++i) {
    if ((atom_extents_[i] & ~point_set) == 0) mask |= 1u << i;
  }
  if (extent_of_mask(mask) != point_set) {
    throw InvalidInput("RcAlgebra: the point set is not regular closed");
  }
  return algebra_.element(mask);
}

RcAlgebra rc_algebra(const FiniteTopSpace& space) { return RcAlgebra(space); }

Ultracontact intersection_uc(const RcAlgebra& rc) {
  const BooleanAlgebra& algebra = rc.algebra();
  internal::require_carrier_at_most(algebra, 4, "intersection_uc");
  const std::uint64_t n_families = std::uint64_t{1} << algebra.carrier_size();
  std::vector<bool> bits(n_families, false);
  for (std::uint64_t m = 1; m < n_families; ++m) {
    std::uint32_t common = rc.space().space_mask();
    std::uint64_t rest = m;
    while (rest) {
      const std::uint32_t e =
          static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      common &= rc.extent_of_mask(e);
    }
    bits[m] = common != 0;
  }
  return uc_from_explicit(ExplicitUc::from_family_masks(algebra, std::move(bits)));
}

Ultracontact intersection_uc(const FiniteTopSpace& space) {
  return intersection_uc(RcAlgebra(space));
}

}  // namespace uclab
