#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uclab/uc.hpp"

namespace uclab {

// A topology on a small named point set, stored as the set of open
// point-subsets. Validated on construction: opens contain the empty set and
// the whole space and are closed under union and intersection.
class FiniteTopSpace {
 public:
  static constexpr int kMaxPoints = 6;

  FiniteTopSpace(std::vector<std::string> points,
                 std::vector<std::uint32_t> open_masks);

  const std::vector<std::string>& points() const { return points_; }
  int n_points() const { return static_cast<int>(points_.size()); }
  std::uint32_t space_mask() const { return (1u << n_points()) - 1; }
  const std::vector<std::uint32_t>& open_masks() const { return opens_; }
  bool is_open(std::uint32_t set) const;

  std::uint32_t interior(std::uint32_t set) const;
  std::uint32_t closure(std::uint32_t set) const;
  bool is_regular_closed(std::uint32_t set) const;

 private:
  std::vector<std::string> points_;
  std::vector<std::uint32_t> opens_;  // sorted point-set masks
};

FiniteTopSpace make_space(std::vector<std::string> points,
                          std::vector<std::uint32_t> open_masks);

// The Boolean algebra of regular closed sets of a finite space, with the
// point-set extent of every element. Join is set union, meet is the closure
// of the interior of the intersection, complement is the closure of the
// set complement; the construction verifies that these agree with the
// atom-mask operations of the built algebra.
class RcAlgebra {
 public:
  explicit RcAlgebra(const FiniteTopSpace& space);

  const FiniteTopSpace& space() const { return space_; }
  const BooleanAlgebra& algebra() const { return algebra_; }
  // Point-set extent of an algebra element.
  std::uint32_t extent(const Element& x) const;
  std::uint32_t extent_of_mask(std::uint32_t atom_mask) const;
  // The element whose extent is the given regular closed set.
  Element element_for_extent(std::uint32_t point_set) const;
  const std::vector<std::uint32_t>& atom_extents() const {
    return atom_extents_;
  }

 private:
  FiniteTopSpace space_;
  BooleanAlgebra algebra_;
  std::vector<std::uint32_t> atom_extents_;  // per atom index
};

RcAlgebra rc_algebra(const FiniteTopSpace& space);

// The intersection ultracontact of the space: the nonempty families of
// regular closed sets with a common point. The common point is taken in the
// powerset of the space, not in the algebra, so the result can exceed the
// smallest ultracontact. Validated against the membership axioms.
Ultracontact intersection_uc(const RcAlgebra& rc);
Ultracontact intersection_uc(const FiniteTopSpace& space);

}  // namespace uclab
