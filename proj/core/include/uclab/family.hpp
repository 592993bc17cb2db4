#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uclab/algebra.hpp"

namespace uclab {

// A finite subset of a Boolean algebra, stored as the sorted set of member
// masks. The sorted order is the canonical serialization order.
class Family {
 public:
  explicit Family(BooleanAlgebra algebra) : algebra_(std::move(algebra)) {}
  Family(BooleanAlgebra algebra, std::vector<Element> members);
  static Family from_masks(BooleanAlgebra algebra,
                           std::vector<std::uint32_t> masks);

  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  std::vector<Element> members() const;

  bool empty() const { return masks_.empty(); }
  std::size_t size() const { return masks_.size(); }
  bool contains_mask(std::uint32_t mask) const;
  bool contains(const Element& x) const;
  bool contains_zero() const { return !masks_.empty() && masks_.front() == 0; }

  // Meet of all members (top for the empty family).
  Element lower_bound() const;

  friend bool operator==(const Family& f, const Family& g) {
    return f.masks_ == g.masks_ && f.algebra_.same_as(g.algebra_);
  }
  friend bool operator!=(const Family& f, const Family& g) { return !(f == g); }
  friend bool operator<(const Family& f, const Family& g) {
    return f.masks_ < g.masks_;
  }

 private:
  BooleanAlgebra algebra_;
  std::vector<std::uint32_t> masks_;  // sorted, unique
};

// An upward closed family, stored as its antichain of minimal elements.
// The expansion ↑(antichain) reproduces the member set exactly; for the
// empty stack the antichain is empty.
class Stack {
 public:
  // Builds the stack generated by the given family (its up-closure).
  static Stack generated_by(const Family& family);

  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<std::uint32_t>& antichain() const { return antichain_; }
  std::vector<Element> antichain_elements() const;

  bool empty() const { return antichain_.empty(); }
  bool is_whole_algebra() const {
    return !antichain_.empty() && antichain_.front() == 0;
  }
  bool contains_mask(std::uint32_t mask) const;

  // Full member set; the carrier is enumerated, so this is linear in 2^n.
  Family expand() const;

  friend bool operator==(const Stack& u, const Stack& v) {
    return u.antichain_ == v.antichain_ && u.algebra_.same_as(v.algebra_);
  }
  friend bool operator!=(const Stack& u, const Stack& v) { return !(u == v); }
  friend bool operator<(const Stack& u, const Stack& v) {
    return u.antichain_ < v.antichain_;
  }

 private:
  Stack(BooleanAlgebra algebra, std::vector<std::uint32_t> antichain)
      : algebra_(std::move(algebra)), antichain_(std::move(antichain)) {}
  BooleanAlgebra algebra_;
  std::vector<std::uint32_t> antichain_;  // sorted, pairwise incomparable
};

// The canonical representative of a similarity class is the stack ↑F.
using ClassRep = Stack;

// ↑F.
Stack up_closure(const Family& family);

// F supports G: every member of G lies above some member of F. The empty
// family is supported by everything and supports only the empty family.
bool supports(const Family& f, const Family& g);

// Mutual support; equivalent to equality of up-closures.
bool similar(const Family& f, const Family& g);

// Element-wise joins across the given families, one member picked from
// each. Empty input list is an error; any empty operand gives the empty
// family. Requires carrier <= 16.
Family minkowski_sum(const std::vector<Family>& families);

struct FamilyClass {
  bool is_stack = false;
  bool is_filter = false;
  bool is_proper_filter = false;
  bool is_ultrafilter = false;
  bool is_ideal = false;
  bool is_proper_ideal = false;
  bool is_grill = false;
};

// Axiom-by-axiom classification. Requires carrier <= 16.
FamilyClass classify(const Family& family);

// Smallest ideal containing the family; {0} for the empty family.
// Requires carrier <= 16.
Family generate_ideal(const Family& m);

// The principal ultrafilters ↑a, one per atom; in a finite algebra these
// are all the ultrafilters.
std::vector<Family> ultrafilters(const BooleanAlgebra& algebra);

// All up-closed subsets, the empty stack and the whole carrier included,
// in canonical order. Requires n_atoms <= 4.
std::vector<Stack> enumerate_stacks(const BooleanAlgebra& algebra);

// All grills, i.e. the unions of principal ultrafilters over nonempty atom
// sets, in ascending atom-set order. Requires n_atoms <= 4.
std::vector<Family> enumerate_grills(const BooleanAlgebra& algebra);

// 2^n - 1, valid for every constructible algebra.
std::uint64_t count_grills(const BooleanAlgebra& algebra);

// Greatest grill below all the given grills: the union of the ultrafilters
// contained in their intersection, or nullopt when no ultrafilter fits
// (the meet is then undefined). Inputs must pass classify().is_grill.
std::optional<Family> grill_partial_meet(const std::vector<Family>& grills);

// Lattice of similarity classes: join is [F+G], meet is [F ∪ G]; both are
// returned through their canonical stack representatives.
ClassRep class_join(const Family& f, const Family& g);
ClassRep class_meet(const Family& f, const Family& g);

}  // namespace uclab
