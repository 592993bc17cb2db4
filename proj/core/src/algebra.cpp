#include "uclab/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace uclab {

BooleanAlgebra::BooleanAlgebra(std::vector<std::string> atom_names) {
  if (atom_names.empty()) {
    throw InvalidInput("trivial algebra: at least one atom is required");
  }
  if (static_cast<int>(atom_names.size()) > kMaxAtoms) {
    throw CapExceeded("atom count " + std::to_string(atom_names.size()) +
                      " exceeds the cap of " + std::to_string(kMaxAtoms));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : atom_names) {
    if (name.empty()) throw InvalidInput("atom names must be nonempty");
    if (!seen.insert(name).second) {
      throw InvalidInput("duplicate atom name '" + name + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(atom_names)});
}

BooleanAlgebra make_algebra(std::vector<std::string> atom_names) {
  return BooleanAlgebra(std::move(atom_names));
}

Element BooleanAlgebra::zero() const { return Element(*this, 0); }

Element BooleanAlgebra::one() const {
  return Element(*this, carrier_size() - 1);
}

Element BooleanAlgebra::element(std::uint32_t atom_mask) const {
  return Element(*this, atom_mask);
}

Element BooleanAlgebra::atom(int index) const {
  if (index < 0 || index >= n_atoms()) {
    throw InvalidInput("atom index out of range");
  }
  return Element(*this, 1u << index);
}

std::vector<Element> BooleanAlgebra::atoms() const {
  std::vector<Element> out;
  out.reserve(n_atoms());
  for (int i = 0; i < n_atoms(); ++i) out.push_back(atom(i));
  return out;
}

std::vector<Element> BooleanAlgebra::elements() const {
  std::vector<Element> out;
  out.reserve(carrier_size());
  for (std::uint32_t m = 0; m < carrier_size(); ++m) out.push_back(element(m));
  return out;
}

Element::Element(BooleanAlgebra algebra, std::uint32_t atom_mask)
    : algebra_(std::move(algebra)), mask_(atom_mask) {
  if (mask_ >= algebra_.carrier_size()) {
    throw InvalidInput("element mask out of range for this algebra");
  }
}

std::string Element::name() const {
  if (mask_ == 0) return "0";
  std::string out;
  for (int i = 0; i < algebra_.n_atoms(); ++i) {
    if ((mask_ >> i) & 1u) {
      if (!out.empty()) out += '+';
      out += algebra_.atom_names()[i];
    }
  }
  return out;
}

namespace detail {
void require_same_algebra(const BooleanAlgebra& a, const BooleanAlgebra& b,
                          const char* op) {
  if (!a.same_as(b)) {
    throw CrossAlgebra(std::string(op) + ": operands from different algebras");
  }
}
}  // namespace detail

Element join(const Element& x, const Element& y) {
  detail::require_same_algebra(x.algebra(), y.algebra(), "join");
  return Element(x.algebra(), x.mask() | y.mask());
}

Element meet(const Element& x, const Element& y) {
  detail::require_same_algebra(x.algebra(), y.algebra(), "meet");
  return Element(x.algebra(), x.mask() & y.mask());
}

Element complement(const Element& x) {
  const std::uint32_t full = x.algebra().carrier_size() - 1;
  return Element(x.algebra(), full & ~x.mask());
}

bool leq(const Element& x, const Element& y) {
  detail::require_same_algebra(x.algebra(), y.algebra(), "leq");
  return (x.mask() & y.mask()) == x.mask();
}

std::vector<Element> atoms(const BooleanAlgebra& algebra) {
  return algebra.atoms();
}

std::vector<Element> atoms_below(const Element& x) {
  std::vector<Element> out;
  for (int i = 0; i < x.algebra().n_atoms(); ++i) {
    if ((x.mask() >> i) & 1u) out.push_back(x.algebra().atom(i));
  }
  return out;
}

}  // namespace uclab
