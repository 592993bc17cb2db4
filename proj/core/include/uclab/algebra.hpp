#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace uclab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad construction arguments: duplicate atom names, a trivial algebra, ...
struct InvalidInput : Error {
  using Error::Error;
};

// Operands living in different algebras.
struct CrossAlgebra : Error {
  using Error::Error;
};

// An enumeration or explicit expansion was requested beyond its size cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A structure failed when asked to satisfy a named axiom; see AxiomError in
// uc.hpp for the carrier of the violation report.
struct PreconditionFailed : Error {
  using Error::Error;
};

class Element;

// A finite Boolean algebra presented as the powerset of a named atom set.
// The carrier has 2^n members, each the set of atoms below it, encoded as a
// bit mask over atom indices. Carrier order is ascending mask value; that
// order is the canonical one used by every serializer and enumerator.
//
// Instances are immutable and cheap to copy (shared internals). Two handles
// denote the same algebra iff their atom name lists are equal.
class BooleanAlgebra {
 public:
  static constexpr int kMaxAtoms = 20;

  explicit BooleanAlgebra(std::vector<std::string> atom_names);

  int n_atoms() const { return static_cast<int>(data_->atom_names.size()); }
  std::uint32_t carrier_size() const { return 1u << n_atoms(); }
  const std::vector<std::string>& atom_names() const {
    return data_->atom_names;
  }

  Element zero() const;
  Element one() const;
  // Element with the given atom mask (mask < carrier_size()).
  Element element(std::uint32_t atom_mask) const;
  Element atom(int index) const;
  std::vector<Element> atoms() const;
  // The whole carrier in canonical (ascending mask) order.
  std::vector<Element> elements() const;

  bool same_as(const BooleanAlgebra& other) const {
    return data_ == other.data_ || data_->atom_names == other.data_->atom_names;
  }

 private:
  struct Data {
    std::vector<std::string> atom_names;
  };
  std::shared_ptr<const Data> data_;
};

BooleanAlgebra make_algebra(std::vector<std::string> atom_names);

// One element of a finite Boolean algebra: the set of atoms below it.
class Element {
 public:
  Element(BooleanAlgebra algebra, std::uint32_t atom_mask);

  std::uint32_t mask() const { return mask_; }
  const BooleanAlgebra& algebra() const { return algebra_; }

  bool is_zero() const { return mask_ == 0; }
  bool is_one() const { return mask_ + 1 == algebra_.carrier_size(); }
  bool is_atom() const { return (mask_ != 0) && (mask_ & (mask_ - 1)) == 0; }

  // Atom names below this element, in algebra order ("a+b" style rendering).
  std::string name() const;

  friend bool operator==(const Element& x, const Element& y) {
    return x.mask_ == y.mask_ && x.algebra_.same_as(y.algebra_);
  }
  friend bool operator!=(const Element& x, const Element& y) {
    return !(x == y);
  }
  // Canonical order within one algebra: ascending mask.
  friend bool operator<(const Element& x, const Element& y) {
    return x.mask_ < y.mask_;
  }

 private:
  BooleanAlgebra algebra_;
  std::uint32_t mask_;
};

Element join(const Element& x, const Element& y);
Element meet(const Element& x, const Element& y);
Element complement(const Element& x);
bool leq(const Element& x, const Element& y);

std::vector<Element> atoms(const BooleanAlgebra& algebra);
std::vector<Element> atoms_below(const Element& x);

namespace detail {
// Throws CrossAlgebra unless both handles denote the same algebra.
void require_same_algebra(const BooleanAlgebra& a, const BooleanAlgebra& b,
                          const char* op);
}  // namespace detail

}  // namespace uclab
