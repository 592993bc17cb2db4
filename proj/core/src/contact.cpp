#include "uclab/contact.hpp"

#include <algorithm>

#include "internal.hpp"

namespace uclab {

using detail::ESet;

namespace {

std::vector<Family> elem_witnesses(const BooleanAlgebra& algebra,
                                   std::initializer_list<std::uint32_t> es) {
  std::vector<Family> out;
  for (std::uint32_t e : es) {
    out.push_back(Family::from_masks(algebra, {e}));
  }
  return out;
}

}  // namespace

ContactRelation::ContactRelation(BooleanAlgebra algebra)
    : algebra_(std::move(algebra)) {
  internal::require_carrier_at_most(algebra_, 4, "ContactRelation");
  rows_.assign(algebra_.carrier_size(), 0);
}

ContactRelation ContactRelation::from_pairs(
    BooleanAlgebra algebra,
    const std::vector<std::pair<Element, Element>>& pairs) {
  ContactRelation c(std::move(algebra));
  for (const auto& [x, y] : pairs) {
    detail::require_same_algebra(c.algebra_, x.algebra(),
                                 "ContactRelation::from_pairs");
    detail::require_same_algebra(c.algebra_, y.algebra(),
                                 "ContactRelation::from_pairs");
    c.set_related_masks(x.mask(), y.mask());
  }
  return c;
}

bool ContactRelation::related(const Element& x, const Element& y) const {
  detail::require_same_algebra(algebra_, x.algebra(), "ContactRelation");
  detail::require_same_algebra(algebra_, y.algebra(), "ContactRelation");
  return related_masks(x.mask(), y.mask());
}

void ContactRelation::set_related_masks(std::uint32_t x, std::uint32_t y) {
  rows_[x] |= 1u << y;
  rows_[y] |= 1u << x;
}

std::vector<std::pair<Element, Element>> ContactRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::uint32_t x = 0; x < algebra_.carrier_size(); ++x) {
    for (std::uint32_t y = x; y < algebra_.carrier_size(); ++y) {
      if (related_masks(x, y)) {
        out.emplace_back(algebra_.element(x), algebra_.element(y));
      }
    }
  }
  return out;
}

ContactRelation derive_contact(const Ultracontact& k) {
  ContactRelation c(k.algebra());
  const int n = k.algebra().n_atoms();
  for (std::uint32_t x = 0; x < k.algebra().carrier_size(); ++x) {
    for (std::uint32_t y = x; y < k.algebra().carrier_size(); ++y) {
      const ESet pair = (ESet{1} << x) | (ESet{1} << y);
      if (k.contains_witness_eset(detail::up_closure(pair, n))) {
        c.set_related_masks(x, y);
      }
    }
  }
  return c;
}

ContactRelation overlap_contact(const BooleanAlgebra& algebra) {
  ContactRelation c(algebra);
  for (std::uint32_t x = 1; x < algebra.carrier_size(); ++x) {
    for (std::uint32_t y = x; y < algebra.carrier_size(); ++y) {
      if (x & y) c.set_related_masks(x, y);
    }
  }
  return c;
}

ContactRelation full_contact(const BooleanAlgebra& algebra) {
  ContactRelation c(algebra);
  for (std::uint32_t x = 1; x < algebra.carrier_size(); ++x) {
    for (std::uint32_t y = x; y < algebra.carrier_size(); ++y) {
      c.set_related_masks(x, y);
    }
  }
  return c;
}

std::optional<AxiomReport> check_contact_axioms(const ContactRelation& c) {
  const BooleanAlgebra& algebra = c.algebra();
  const std::uint32_t carrier = algebra.carrier_size();
  for (std::uint32_t x = 0; x < carrier; ++x) {
    if (c.related_masks(0, x) || c.related_masks(x, 0)) {
      return AxiomReport{"C0", "zero is in contact with " +
                                   algebra.element(x).name(),
                         elem_witnesses(algebra, {0, x})};
    }
  }
  for (std::uint32_t x = 1; x < carrier; ++x) {
    if (!c.related_masks(x, x)) {
      return AxiomReport{"C1", algebra.element(x).name() +
                                   " is not in contact with itself",
                         elem_witnesses(algebra, {x})};
    }
  }
  for (std::uint32_t x = 0; x < carrier; ++x) {
    for (std::uint32_t y = 0; y < carrier; ++y) {
      if (c.related_masks(x, y) != c.related_masks(y, x)) {
        return AxiomReport{"C2", "the relation is not symmetric",
                           elem_witnesses(algebra, {x, y})};
      }
    }
  }
  for (std::uint32_t x = 0; x < carrier; ++x) {
    for (std::uint32_t y = 0; y < carrier; ++y) {
      if (!c.related_masks(x, y)) continue;
      for (std::uint32_t z = 0; z < carrier; ++z) {
        if ((y & z) == y && !c.related_masks(x, z)) {
          return AxiomReport{"C3", "contact does not extend upward",
                             elem_witnesses(algebra, {x, y, z})};
        }
      }
    }
  }
  for (std::uint32_t x = 0; x < carrier; ++x) {
    for (std::uint32_t y = 0; y < carrier; ++y) {
      for (std::uint32_t z = 0; z < carrier; ++z) {
        if (c.related_masks(x, y | z) && !c.related_masks(x, y) &&
            !c.related_masks(x, z)) {
          return AxiomReport{"C4", "contact with a join does not split",
                             elem_witnesses(algebra, {x, y, z})};
        }
      }
    }
  }
  return std::nullopt;
}

ContactRelation check_contact(const ContactRelation& c) {
  if (auto violation = check_contact_axioms(c)) {
    throw AxiomError(*violation);
  }
  return c;
}

Ultracontact smallest_uc_for(const ContactRelation& c) {
  check_contact(c);
  const BooleanAlgebra& algebra = c.algebra();
  const int n = algebra.n_atoms();
  std::vector<std::uint32_t> faces;
  for (std::uint32_t h = 1; h < (1u << n); ++h) {
    if (std::popcount(h) > 2) continue;
    const int a = std::countr_zero(h);
    const int b = 31 - std::countl_zero(h);
    if (c.related_masks(1u << a, 1u << b)) faces.push_back(h);
  }
  return Ultracontact::from_witness_esets(
      algebra, internal::witnesses_for_faces(n, faces));
}

Ultracontact largest_uc_for(const ContactRelation& c) {
  check_contact(c);
  const BooleanAlgebra& algebra = c.algebra();
  const int n = algebra.n_atoms();
  std::vector<std::uint32_t> faces;
  for (std::uint32_t h = 1; h < (1u << n); ++h) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      if (!((h >> a) & 1u)) continue;
      for (int b = a; b < n; ++b) {
        if (((h >> b) & 1u) && !c.related_masks(1u << a, 1u << b)) {
          clique = false;
          break;
        }
      }
    }
    if (clique) faces.push_back(h);
  }
  return Ultracontact::from_witness_esets(
      algebra, internal::witnesses_for_faces(n, faces));
}

bool is_clique(const ContactRelation& c, const Family& f) {
  detail::require_same_algebra(c.algebra(), f.algebra(), "is_clique");
  if (f.empty()) return false;
  for (std::uint32_t x : f.masks()) {
    for (std::uint32_t y : f.masks()) {
      if (!c.related_masks(x, y)) return false;
    }
  }
  return true;
}

std::optional<CliqueK4Witness> k4_violation_witness(const ContactRelation& c) {
  const BooleanAlgebra& algebra = c.algebra();
  const std::uint32_t carrier = algebra.carrier_size();
  for (std::uint32_t p = 0; p < carrier; ++p) {
    for (std::uint32_t q = 0; q < carrier; ++q) {
      if (q == p || c.related_masks(p, q)) continue;
      for (std::uint32_t r = 0; r < carrier; ++r) {
        if (r == p || r == q || !c.related_masks(p, r) ||
            !c.related_masks(q, r)) {
          continue;
        }
        for (std::uint32_t s = 0; s < carrier; ++s) {
          if (s == p || s == q || s == r) continue;
          if (!c.related_masks(p, s) || !c.related_masks(q, s) ||
              c.related_masks(r, s)) {
            continue;
          }
          CliqueK4Witness w{algebra.element(p), algebra.element(q),
                            algebra.element(r), algebra.element(s),
                            Family::from_masks(algebra, {p, q}),
                            Family::from_masks(algebra, {r, s}),
                            minkowski_sum({Family::from_masks(algebra, {p, q}),
                                           Family::from_masks(algebra, {r, s})})};
          if (!is_clique(c, w.sum) || is_clique(c, w.left) ||
              is_clique(c, w.right)) {
            throw Error("k4_violation_witness: verification failed");
          }
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

Hypercontact::Hypercontact(BooleanAlgebra algebra,
                           const std::vector<Family>& members)
    : algebra_(std::move(algebra)) {
  internal::require_carrier_at_most(algebra_, 4, "Hypercontact");
  member_by_mask_.assign(std::size_t{1} << algebra_.carrier_size(), false);
  for (const auto& f : members) {
    detail::require_same_algebra(algebra_, f.algebra(), "Hypercontact");
    member_by_mask_[internal::to_eset(f)] = true;
  }
}

Hypercontact Hypercontact::from_family_masks(BooleanAlgebra algebra,
                                             std::vector<bool> member_by_mask) {
  internal::require_carrier_at_most(algebra, 4, "Hypercontact");
  if (member_by_mask.size() != (std::size_t{1} << algebra.carrier_size())) {
    throw InvalidInput("Hypercontact: member table has the wrong size");
  }
  Hypercontact d(std::move(algebra), {});
  d.member_by_mask_ = std::move(member_by_mask);
  return d;
}

bool Hypercontact::contains(const Family& f) const {
  detail::require_same_algebra(algebra_, f.algebra(), "Hypercontact::contains");
  return member_by_mask_[internal::to_eset(f)];
}

std::size_t Hypercontact::size() const {
  return static_cast<std::size_t>(
      std::count(member_by_mask_.begin(), member_by_mask_.end(), true));
}

std::vector<Family> Hypercontact::members() const {
  std::vector<Family> out;
  for (std::uint64_t m = 0; m < member_by_mask_.size(); ++m) {
    if (member_by_mask_[m]) out.push_back(internal::from_eset(algebra_, m));
  }
  return out;
}

Hypercontact derive_hypercontact(const Ultracontact& k) {
  internal::require_carrier_at_most(k.algebra(), 4, "derive_hypercontact");
  const auto tables = detail::make_carrier_tables(k.algebra().n_atoms());
  std::vector<bool> bits(std::size_t{1} << k.algebra().carrier_size(), false);
  bits[0] = true;
  for (std::uint64_t m = 1; m < bits.size(); ++m) {
    bits[m] = k.contains_witness_eset(tables.up_closure[m]);
  }
  return Hypercontact::from_family_masks(k.algebra(), std::move(bits));
}

std::optional<AxiomReport> check_hypercontact_axioms(const Hypercontact& d) {
  const BooleanAlgebra& algebra = d.algebra();
  const std::uint32_t carrier = algebra.carrier_size();
  const auto& mem = d.member_bits();
  const std::uint64_t n_families = std::uint64_t{1} << carrier;
  auto fam = [&](std::uint64_t m) { return internal::from_eset(algebra, m); };

  for (std::uint64_t m = 1; m < n_families; ++m) {
    if (mem[m] && (m & 1)) {
      return AxiomReport{"H1", "a member contains zero", {fam(m)}};
    }
  }
  for (std::uint32_t e = 1; e < carrier; ++e) {
    if (!mem[std::uint64_t{1} << e]) {
      return AxiomReport{"H2",
                         "singleton of " + algebra.element(e).name() +
                             " is missing",
                         {fam(std::uint64_t{1} << e)}};
    }
  }
  // H3: downward closure, the empty family included.
  for (std::uint64_t m = 0; m < n_families; ++m) {
    if (!mem[m]) continue;
    for (std::uint64_t g = m;; g = (g - 1) & m) {
      if (!mem[g]) {
        return AxiomReport{"H3",
                           "a subfamily of a member is not a member",
                           {fam(m), fam(g)}};
      }
      if (g == 0) break;
    }
  }
  // H4: a member may be enlarged by anything above one of its elements.
  for (std::uint64_t m = 1; m < n_families; ++m) {
    if (!mem[m]) continue;
    for (std::uint32_t y = 0; y < carrier; ++y) {
      bool above_some = false;
      std::uint64_t rest = m;
      while (rest && !above_some) {
        const std::uint32_t x =
            static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        above_some = (x & y) == x;
      }
      const std::uint64_t grown = m | (std::uint64_t{1} << y);
      if (above_some && !mem[grown]) {
        return AxiomReport{"H4",
                           "enlarging a member along the order leaves it",
                           {fam(m), fam(grown)}};
      }
    }
  }
  // H5: joins inside members split. Every premise F ∪ {x+y} ∈ Δ with
  // x+y = z arises from a member M with z ∈ M and F equal to M or M \ {z}.
  for (std::uint64_t m = 1; m < n_families; ++m) {
    if (!mem[m]) continue;
    std::uint64_t rest = m;
    while (rest) {
      const std::uint32_t z =
          static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      for (std::uint32_t x = z;; x = (x - 1) & z) {
        const std::uint32_t missing = z & ~x;
        for (std::uint32_t w = x;; w = (w - 1) & x) {
          const std::uint32_t y = missing | w;
          for (const std::uint64_t f :
               {m, m & ~(std::uint64_t{1} << z)}) {
            const std::uint64_t with_x = f | (std::uint64_t{1} << x);
            const std::uint64_t with_y = f | (std::uint64_t{1} << y);
            if (!mem[with_x] && !mem[with_y]) {
              return AxiomReport{
                  "H5",
                  "a join inside a member splits into two non-members",
                  {fam(f), fam(with_x), fam(with_y)}};
            }
          }
          if (w == 0) break;
        }
        if (x == 0) break;
      }
    }
  }
  return std::nullopt;
}

Hypercontact check_hypercontact(const Hypercontact& d) {
  if (auto violation = check_hypercontact_axioms(d)) {
    throw AxiomError(*violation);
  }
  return d;
}

}  // namespace uclab
