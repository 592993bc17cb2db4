#include "uclab/family.hpp"

#include <algorithm>

#include "uclab/detail/bits.hpp"

namespace uclab {

namespace {

void require_carrier_at_most(const BooleanAlgebra& algebra, int max_atoms,
                             const char* op) {
  if (algebra.n_atoms() > max_atoms) {
    throw CapExceeded(std::string(op) + ": needs n_atoms <= " +
                      std::to_string(max_atoms) + ", got " +
                      std::to_string(algebra.n_atoms()));
  }
}

detail::ESet to_eset(const Family& f) {
  detail::ESet s = 0;
  for (std::uint32_t m : f.masks()) s |= detail::ESet{1} << m;
  return s;
}

Family from_eset(const BooleanAlgebra& algebra, detail::ESet s) {
  std::vector<std::uint32_t> masks;
  while (s) {
    masks.push_back(static_cast<std::uint32_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return Family::from_masks(algebra, std::move(masks));
}

}  // namespace

Family::Family(BooleanAlgebra algebra, std::vector<Element> members)
    : algebra_(std::move(algebra)) {
  masks_.reserve(members.size());
  for (const auto& e : members) {
    detail::require_same_algebra(algebra_, e.algebra(), "Family");
    masks_.push_back(e.mask());
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

Family Family::from_masks(BooleanAlgebra algebra,
                          std::vector<std::uint32_t> masks) {
  Family f(std::move(algebra));
  for (std::uint32_t m : masks) {
    if (m >= f.algebra_.carrier_size()) {
      throw InvalidInput("family member mask out of range");
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  f.masks_ = std::move(masks);
  return f;
}

std::vector<Element> Family::members() const {
  std::vector<Element> out;
  out.reserve(masks_.size());
  for (std::uint32_t m : masks_) out.push_back(algebra_.element(m));
  return out;
}

bool Family::contains_mask(std::uint32_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

bool Family::contains(const Element& x) const {
  detail::require_same_algebra(algebra_, x.algebra(), "Family::contains");
  return contains_mask(x.mask());
}

Element Family::lower_bound() const {
  std::uint32_t m = algebra_.carrier_size() - 1;
  for (std::uint32_t e : masks_) m &= e;
  return algebra_.element(m);
}

Stack Stack::generated_by(const Family& family) {
  // Minimal members of F generate the same up-set as F itself.
  std::vector<std::uint32_t> antichain;
  for (std::uint32_t e : family.masks()) {
    bool minimal = true;
    for (std::uint32_t f : family.masks()) {
      if (f != e && (f & e) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) antichain.push_back(e);
  }
  return Stack(family.algebra(), std::move(antichain));
}

std::vector<Element> Stack::antichain_elements() const {
  std::vector<Element> out;
  out.reserve(antichain_.size());
  for (std::uint32_t m : antichain_) out.push_back(algebra_.element(m));
  return out;
}

bool Stack::contains_mask(std::uint32_t mask) const {
  for (std::uint32_t g : antichain_) {
    if ((g & mask) == g) return true;
  }
  return false;
}

Family Stack::expand() const {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t e = 0; e < algebra_.carrier_size(); ++e) {
    if (contains_mask(e)) masks.push_back(e);
  }
  return Family::from_masks(algebra_, std::move(masks));
}

Stack up_closure(const Family& family) { return Stack::generated_by(family); }

bool supports(const Family& f, const Family& g) {
  detail::require_same_algebra(f.algebra(), g.algebra(), "supports");
  for (std::uint32_t y : g.masks()) {
    bool found = false;
    for (std::uint32_t x : f.masks()) {
      if ((x & y) == x) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool similar(const Family& f, const Family& g) {
  return supports(f, g) && supports(g, f);
}

Family minkowski_sum(const std::vector<Family>& families) {
  if (families.empty()) {
    throw InvalidInput("minkowski_sum: at least one family is required");
  }
  const BooleanAlgebra& algebra = families.front().algebra();
  require_carrier_at_most(algebra, 4, "minkowski_sum");
  for (const auto& f : families) {
    detail::require_same_algebra(algebra, f.algebra(), "minkowski_sum");
  }
  detail::ESet acc = to_eset(families.front());
  for (std::size_t i = 1; i < families.size(); ++i) {
    acc = detail::minkowski(acc, to_eset(families[i]));
  }
  return from_eset(algebra, acc);
}

FamilyClass classify(const Family& family) {
  require_carrier_at_most(family.algebra(), 4, "classify");
  const int n = family.algebra().n_atoms();
  const std::uint32_t carrier = family.algebra().carrier_size();
  const std::uint32_t top = carrier - 1;
  const detail::ESet s = to_eset(family);

  FamilyClass c;
  c.is_stack = detail::is_up_closed(s, n);

  const bool has_zero = detail::eset_contains(s, 0);
  const bool has_one = detail::eset_contains(s, top);

  bool meet_closed = true;
  bool join_closed = true;
  bool join_splits = true;
  for (std::uint32_t a = 0; a < carrier && (meet_closed || join_closed); ++a) {
    if (!detail::eset_contains(s, a)) continue;
    for (std::uint32_t b = 0; b < carrier; ++b) {
      if (!detail::eset_contains(s, b)) continue;
      if (!detail::eset_contains(s, a & b)) meet_closed = false;
      if (!detail::eset_contains(s, a | b)) join_closed = false;
    }
  }
  for (std::uint32_t a = 0; a < carrier && join_splits; ++a) {
    for (std::uint32_t b = 0; b < carrier; ++b) {
      if (detail::eset_contains(s, a | b) && !detail::eset_contains(s, a) &&
          !detail::eset_contains(s, b)) {
        join_splits = false;
        break;
      }
    }
  }
  bool down_closed = true;
  for (std::uint32_t a = 0; a < carrier && down_closed; ++a) {
    if (!detail::eset_contains(s, a)) continue;
    for (std::uint32_t b = 0; b < carrier; ++b) {
      if ((b & a) == b && !detail::eset_contains(s, b)) {
        down_closed = false;
        break;
      }
    }
  }

  c.is_filter = has_one && c.is_stack && meet_closed;
  c.is_proper_filter = c.is_filter && !has_zero;
  c.is_ultrafilter = c.is_proper_filter && join_splits;
  c.is_ideal = has_zero && down_closed && join_closed;
  c.is_proper_ideal = c.is_ideal && !has_one;
  c.is_grill = !family.empty() && !has_zero && c.is_stack && join_splits;
  return c;
}

Family generate_ideal(const Family& m) {
  require_carrier_at_most(m.algebra(), 4, "generate_ideal");
  std::uint32_t top = 0;
  for (std::uint32_t e : m.masks()) top |= e;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t e = 0; e < m.algebra().carrier_size(); ++e) {
    if ((e & top) == e) masks.push_back(e);
  }
  return Family::from_masks(m.algebra(), std::move(masks));
}

std::vector<Family> ultrafilters(const BooleanAlgebra& algebra) {
  std::vector<Family> out;
  out.reserve(algebra.n_atoms());
  for (int i = 0; i < algebra.n_atoms(); ++i) {
    const std::uint32_t a = 1u << i;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t e = a; true; e = (e + 1) | a) {
      masks.push_back(e);
      if (e == algebra.carrier_size() - 1) break;
    }
    out.push_back(Family::from_masks(algebra, std::move(masks)));
  }
  return out;
}

std::vector<Stack> enumerate_stacks(const BooleanAlgebra& algebra) {
  require_carrier_at_most(algebra, 4, "enumerate_stacks");
  std::vector<Stack> out;
  for (detail::ESet s : detail::all_stack_esets(algebra.n_atoms())) {
    out.push_back(Stack::generated_by(from_eset(algebra, s)));
  }
  return out;
}

std::vector<Family> enumerate_grills(const BooleanAlgebra& algebra) {
  require_carrier_at_most(algebra, 4, "enumerate_grills");
  const int n = algebra.n_atoms();
  std::vector<Family> out;
  for (std::uint32_t atom_set = 1; atom_set < (1u << n); ++atom_set) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t e = 1; e < algebra.carrier_size(); ++e) {
      if (e & atom_set) masks.push_back(e);
    }
    out.push_back(Family::from_masks(algebra, std::move(masks)));
  }
  return out;
}

std::uint64_t count_grills(const BooleanAlgebra& algebra) {
  return (std::uint64_t{1} << algebra.n_atoms()) - 1;
}

std::optional<Family> grill_partial_meet(const std::vector<Family>& grills) {
  if (grills.empty()) {
    throw InvalidInput("grill_partial_meet: at least one grill is required");
  }
  const BooleanAlgebra& algebra = grills.front().algebra();
  require_carrier_at_most(algebra, 4, "grill_partial_meet");
  for (const auto& g : grills) {
    detail::require_same_algebra(algebra, g.algebra(), "grill_partial_meet");
    if (!classify(g).is_grill) {
      throw PreconditionFailed("grill_partial_meet: input is not a grill");
    }
  }
  detail::ESet common = ~detail::ESet{0};
  for (const auto& g : grills) common &= to_eset(g);

  detail::ESet result = 0;
  bool any = false;
  for (int i = 0; i < algebra.n_atoms(); ++i) {
    const detail::ESet uf = detail::upset_of(1u << i, algebra.n_atoms());
    if ((uf & ~common) == 0) {
      result |= uf;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return from_eset(algebra, result);
}

ClassRep class_join(const Family& f, const Family& g) {
  return up_closure(minkowski_sum({f, g}));
}

ClassRep class_meet(const Family& f, const Family& g) {
  detail::require_same_algebra(f.algebra(), g.algebra(), "class_meet");
  std::vector<std::uint32_t> masks = f.masks();
  masks.insert(masks.end(), g.masks().begin(), g.masks().end());
  return up_closure(Family::from_masks(f.algebra(), std::move(masks)));
}

}  // namespace uclab
