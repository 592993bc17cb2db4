#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "uclab/uc.hpp"

namespace uclab {

// Binary contact relation, stored densely as one adjacency row per element.
// Requires carrier <= 16.
class ContactRelation {
 public:
  explicit ContactRelation(BooleanAlgebra algebra);
  // Builds the symmetric closure of the given pairs.
  static ContactRelation from_pairs(
      BooleanAlgebra algebra,
      const std::vector<std::pair<Element, Element>>& pairs);

  const BooleanAlgebra& algebra() const { return algebra_; }
  bool related_masks(std::uint32_t x, std::uint32_t y) const {
    return (rows_[x] >> y) & 1u;
  }
  bool related(const Element& x, const Element& y) const;
  void set_related_masks(std::uint32_t x, std::uint32_t y);
  // One orientation per related pair, (x, y) with x <= y by mask.
  std::vector<std::pair<Element, Element>> pairs() const;

  friend bool operator==(const ContactRelation& a, const ContactRelation& b) {
    return a.rows_ == b.rows_ && a.algebra_.same_as(b.algebra_);
  }
  friend bool operator!=(const ContactRelation& a, const ContactRelation& b) {
    return !(a == b);
  }

 private:
  BooleanAlgebra algebra_;
  std::vector<std::uint32_t> rows_;
};

// x C_K y iff the pair family {x, y} is a member of K.
ContactRelation derive_contact(const Ultracontact& k);

// The two distinguished contacts: overlap (meet nonzero) and the full
// contact (all nonzero pairs).
ContactRelation overlap_contact(const BooleanAlgebra& algebra);
ContactRelation full_contact(const BooleanAlgebra& algebra);

// First violated axiom among (C0)-(C4), with element witnesses, or nullopt.
std::optional<AxiomReport> check_contact_axioms(const ContactRelation& c);

// Throws AxiomError on violation, otherwise hands the relation back.
ContactRelation check_contact(const ContactRelation& c);

// Smallest / largest ultracontact inducing the given contact: the face set
// is, respectively, the atom pairs in contact and the atom cliques of the
// contact.
Ultracontact smallest_uc_for(const ContactRelation& c);
Ultracontact largest_uc_for(const ContactRelation& c);

// Witness that cliques of a contact relation do not split over family sums:
// pairwise distinct p, q, r, s with p C r, p C s, q C r, q C s while p /C q
// and r /C s make {p,q} + {r,s} a clique with neither summand one. The
// first such quadruple in ascending (p, q, r, s) mask order is returned.
struct CliqueK4Witness {
  Element p, q, r, s;
  Family left;   // {p, q}
  Family right;  // {r, s}
  Family sum;    // {p,q} + {r,s}, verified to be a clique
};
std::optional<CliqueK4Witness> k4_violation_witness(const ContactRelation& c);

bool is_clique(const ContactRelation& c, const Family& f);

// Hypercontact: a collection of finite families containing the empty one,
// downward closed, extending along the order, carrying all nonzero
// singletons, and splitting joins inside members. Requires carrier <= 16.
class Hypercontact {
 public:
  Hypercontact(BooleanAlgebra algebra, const std::vector<Family>& members);
  static Hypercontact from_family_masks(BooleanAlgebra algebra,
                                        std::vector<bool> member_by_mask);

  const BooleanAlgebra& algebra() const { return algebra_; }
  bool contains_family_mask(std::uint64_t family_mask) const {
    return member_by_mask_[family_mask];
  }
  bool contains(const Family& f) const;
  const std::vector<bool>& member_bits() const { return member_by_mask_; }
  std::size_t size() const;
  std::vector<Family> members() const;

  friend bool operator==(const Hypercontact& a, const Hypercontact& b) {
    return a.member_by_mask_ == b.member_by_mask_ &&
           a.algebra_.same_as(b.algebra_);
  }

 private:
  BooleanAlgebra algebra_;
  std::vector<bool> member_by_mask_;
};

// Delta_K: the members of K (all finite here) together with the empty family.
Hypercontact derive_hypercontact(const Ultracontact& k);

// First violated axiom among (H1)-(H5), or nullopt. Membership of the empty
// family is forced by (H3) and is checked under that axiom.
std::optional<AxiomReport> check_hypercontact_axioms(const Hypercontact& d);

Hypercontact check_hypercontact(const Hypercontact& d);

}  // namespace uclab
