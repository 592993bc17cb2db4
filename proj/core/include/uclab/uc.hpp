#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uclab/family.hpp"

namespace uclab {

// One failed axiom together with concrete witnesses.
struct AxiomReport {
  std::string axiom;    // "K3", "SS1", "C4", "H5", "SC2", ...
  std::string message;  // human-readable account of the violation
  std::vector<Family> witnesses;
};

struct AxiomError : Error {
  explicit AxiomError(AxiomReport r)
      : Error(r.axiom + " violated: " + r.message), report(std::move(r)) {}
  AxiomReport report;
};

// Member-set form of an ultracontact candidate: an explicit set of families
// over a carrier of at most 16 elements, indexed by family bit mask. This is
// the validation and debugging form; the canonical form is Ultracontact.
class ExplicitUc {
 public:
  ExplicitUc(BooleanAlgebra algebra, const std::vector<Family>& members);
  static ExplicitUc from_family_masks(BooleanAlgebra algebra,
                                      std::vector<bool> member_by_mask);

  const BooleanAlgebra& algebra() const { return algebra_; }
  bool contains_family_mask(std::uint64_t family_mask) const {
    return member_by_mask_[family_mask];
  }
  bool contains(const Family& f) const;
  const std::vector<bool>& member_bits() const { return member_by_mask_; }
  std::size_t size() const;
  std::vector<Family> members() const;

  friend bool operator==(const ExplicitUc& a, const ExplicitUc& b) {
    return a.member_by_mask_ == b.member_by_mask_ &&
           a.algebra_.same_as(b.algebra_);
  }

 private:
  BooleanAlgebra algebra_;
  std::vector<bool> member_by_mask_;  // size 2^carrier
};

// Canonical representation of an ultracontact: the set of up-closures of its
// members, kept as sorted element-set bit masks. A family F belongs to the
// ultracontact iff ↑F is among the witnesses, so the witness set is exactly
// the associated stack system. Valid witnesses never include the empty stack
// or the whole carrier, contain every principal up-set of a nonzero element,
// are closed under nonempty stack subsets, and split over intersections.
class Ultracontact {
 public:
  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<std::uint64_t>& witness_esets() const { return witnesses_; }
  std::size_t witness_count() const { return witnesses_.size(); }
  std::vector<Stack> witnesses() const;

  bool contains(const Family& f) const;
  bool contains_witness_eset(std::uint64_t stack_eset) const;

  // Explicit member-set expansion; requires carrier <= 16.
  ExplicitUc explicit_members() const;

  bool subset_of(const Ultracontact& other) const;

  friend bool operator==(const Ultracontact& a, const Ultracontact& b) {
    return a.witnesses_ == b.witnesses_ && a.algebra_.same_as(b.algebra_);
  }
  friend bool operator!=(const Ultracontact& a, const Ultracontact& b) {
    return !(a == b);
  }

  // Adopts a witness set that is already known to satisfy the stack-system
  // axioms; validates when the carrier allows it (n_atoms <= 4).
  static Ultracontact from_witness_esets(BooleanAlgebra algebra,
                                         std::vector<std::uint64_t> witnesses);

 private:
  Ultracontact(BooleanAlgebra algebra, std::vector<std::uint64_t> witnesses)
      : algebra_(std::move(algebra)), witnesses_(std::move(witnesses)) {}
  BooleanAlgebra algebra_;
  std::vector<std::uint64_t> witnesses_;  // sorted stack esets
};

// Full axiom check of the member-set form: reports the first violated axiom
// (in the order K0, K1, K2, K3, K4) with concrete witness families, or
// nullopt when all five hold. The splitting axiom is checked over pairs of
// stacks whose intersection is a member, which is equivalent to the
// family-level statement once the support axiom holds.
std::optional<AxiomReport> check_uc_axioms(const ExplicitUc& candidate);

// Validates and canonicalizes; throws AxiomError on the first violation.
Ultracontact uc_from_explicit(const ExplicitUc& candidate);
Ultracontact uc_from_explicit(const BooleanAlgebra& algebra,
                              const std::vector<Family>& members);

bool uc_membership(const Ultracontact& k, const Family& f);

// Smallest and largest ultracontacts, materialized as witness sets
// (n_atoms <= 5). The membership predicates below avoid materialization and
// work for every constructible algebra.
Ultracontact kmin(const BooleanAlgebra& algebra);
Ultracontact kmax(const BooleanAlgebra& algebra);
bool kmin_contains(const Family& f);  // some nonzero lower bound
bool kmax_contains(const Family& f);  // nonempty and zero-free

// Join: set union of memberships (witness union).
Ultracontact uc_join(const std::vector<Ultracontact>& ks);

// Meet: greatest ultracontact below all inputs, computed through the finite
// correspondence with simplicial complexes (face-set intersection).
Ultracontact uc_meet(const std::vector<Ultracontact>& ks);

// Independent oracle for the meet, evaluating the defining condition: F is
// kept iff no tuple of nonempty families, each outside the common member
// set, has a sum supported by F. Tuples reduce to sets of nonempty stacks
// (sums of stacks are intersections and membership is similarity-invariant),
// so the oracle quantifies over the closure of the non-witness stacks under
// intersection. Full materialization requires carrier <= 8; the targeted
// membership query works to carrier <= 16.
Ultracontact meet_oracle(const std::vector<Ultracontact>& ks);
bool meet_oracle_contains(const std::vector<Ultracontact>& ks,
                          const Family& f);

// Smallest ultracontact extending k that contains every listed grill.
Ultracontact extend_by_grills(const Ultracontact& k,
                              const std::vector<Family>& grills);

// K extended by all nonempty subsets of one family, in member-set form,
// together with the axiom-check outcome. The extension is an ultracontact
// exactly when m is a grill or already a member. Requires carrier <= 16.
struct SetExtension {
  ExplicitUc candidate;
  bool is_uc = false;
  std::optional<AxiomReport> violation;         // set when !is_uc
  std::optional<Ultracontact> as_uc;            // set when is_uc
};
SetExtension extend_by_set(const Ultracontact& k, const Family& m);

// Smallest ultracontact extending k that contains a set of atoms; equal to
// the grill extension by the union of the corresponding principal
// ultrafilters. Non-atom members are rejected: the analogous enlargement by
// a family with a non-atom member need not satisfy the splitting axiom.
Ultracontact extend_by_atoms(const Ultracontact& k, const Family& atom_set);

// For a nonempty zero-free stack m with zero meet that is not a grill,
// produces two ultracontacts that both contain m while their meet does not.
// Uses the first pair (x, y), in ascending mask order, with x+y a member and
// neither x nor y one; the returned ultracontacts extend the smallest one by
// the grills of elements not below x (resp. y).
std::pair<Ultracontact, Ultracontact> witness_meet_failure(const Family& m);

// Meet of a chain: plain intersection of witness sets. Inputs must be
// pairwise comparable.
Ultracontact chain_meet(const std::vector<Ultracontact>& chain);

}  // namespace uclab
