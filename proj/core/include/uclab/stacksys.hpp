#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uclab/uc.hpp"

namespace uclab {

// A set of stacks satisfying (SS0)-(SS4): no empty stack, not the whole
// carrier, every principal up-set of a nonzero element present, closed under
// nonempty stack subsets, and splitting over intersections. Same canonical
// storage as the witness set of an ultracontact.
class StackSystem {
 public:
  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<std::uint64_t>& member_esets() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::vector<Stack> members() const;
  bool contains(const Stack& u) const;
  bool contains_eset(std::uint64_t stack_eset) const;
  bool subset_of(const StackSystem& other) const;

  friend bool operator==(const StackSystem& a, const StackSystem& b) {
    return a.members_ == b.members_ && a.algebra_.same_as(b.algebra_);
  }
  friend bool operator!=(const StackSystem& a, const StackSystem& b) {
    return !(a == b);
  }

  // Validating constructor; see check_ss.
  static StackSystem from_esets(BooleanAlgebra algebra,
                                std::vector<std::uint64_t> members);

 private:
  StackSystem(BooleanAlgebra algebra, std::vector<std::uint64_t> members)
      : algebra_(std::move(algebra)), members_(std::move(members)) {}
  BooleanAlgebra algebra_;
  std::vector<std::uint64_t> members_;  // sorted stack esets
};

// First violated axiom among (SS0)-(SS4), with witnesses, or nullopt.
// Quantifies over all stacks of the algebra; requires n_atoms <= 4.
std::optional<AxiomReport> check_ss_axioms(const BooleanAlgebra& algebra,
                                           const std::vector<Stack>& members);

// Validates and canonicalizes; throws AxiomError on violation.
StackSystem check_ss(const BooleanAlgebra& algebra,
                     const std::vector<Stack>& members);

// S_K: the up-closures of the members of an ultracontact.
StackSystem sk_of(const ExplicitUc& k);
StackSystem sk_of(const Ultracontact& k);

// K_S: all families whose up-closure belongs to the system. Requires
// carrier <= 16.
ExplicitUc ks_of(const StackSystem& s);

// The same conversion kept in canonical witness form.
Ultracontact uc_of(const StackSystem& s);
StackSystem ss_of(const Ultracontact& k);

// Zero and unity of the lattice of stack systems: the nonempty stacks lying
// inside some principal up-set of a nonzero element, and all nonempty stacks
// other than the whole carrier.
StackSystem smin(const BooleanAlgebra& algebra);
StackSystem smax(const BooleanAlgebra& algebra);

}  // namespace uclab
