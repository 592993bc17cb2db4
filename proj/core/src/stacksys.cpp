#include "uclab/stacksys.hpp"

#include <algorithm>

#include "internal.hpp"

namespace uclab {

using detail::ESet;

namespace internal {

std::optional<AxiomReport> check_stack_system_esets(
    const BooleanAlgebra& algebra, const std::vector<ESet>& members) {
  const int n = algebra.n_atoms();
  auto fam = [&](ESet s) { return from_eset(algebra, s); };
  auto in = [&](ESet s) {
    return std::binary_search(members.begin(), members.end(), s);
  };

  if (in(0)) {
    return AxiomReport{"SS0", "the empty stack is a member", {}};
  }
  const ESet full = detail::full_eset(n);
  if (in(full)) {
    return AxiomReport{"SS1", "the whole carrier is a member", {fam(full)}};
  }
  for (std::uint32_t x = 1; x < algebra.carrier_size(); ++x) {
    const ESet up = detail::upset_of(x, n);
    if (!in(up)) {
      return AxiomReport{
          "SS2",
          "the up-set of " + algebra.element(x).name() + " is missing",
          {fam(up)}};
    }
  }
  const auto stacks = detail::all_stack_esets(n);
  for (ESet v : members) {
    for (ESet u : stacks) {
      if (u != 0 && (u & ~v) == 0 && !in(u)) {
        return AxiomReport{"SS3",
                           "member stack has a nonempty substack that is "
                           "not a member",
                           {fam(v), fam(u)}};
      }
    }
  }
  for (ESet u : stacks) {
    if (u == 0) continue;
    for (ESet v : stacks) {
      if (v == 0) continue;
      if (in(u & v) && !in(u) && !in(v)) {
        return AxiomReport{"SS4",
                           "an intersection of two non-member stacks is a "
                           "member",
                           {fam(u), fam(v), fam(u & v)}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace internal

std::vector<Stack> StackSystem::members() const {
  std::vector<Stack> out;
  out.reserve(members_.size());
  for (ESet s : members_) out.push_back(internal::stack_from_eset(algebra_, s));
  return out;
}

bool StackSystem::contains(const Stack& u) const {
  detail::require_same_algebra(algebra_, u.algebra(), "StackSystem::contains");
  return contains_eset(internal::to_eset(u.expand()));
}

bool StackSystem::contains_eset(ESet stack_eset) const {
  return std::binary_search(members_.begin(), members_.end(), stack_eset);
}

bool StackSystem::subset_of(const StackSystem& other) const {
  detail::require_same_algebra(algebra_, other.algebra_,
                               "StackSystem::subset_of");
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

StackSystem StackSystem::from_esets(BooleanAlgebra algebra,
                                    std::vector<ESet> members) {
  internal::require_carrier_at_most(algebra, 4, "StackSystem");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto violation = internal::check_stack_system_esets(algebra, members)) {
    throw AxiomError(*violation);
  }
  return StackSystem(std::move(algebra), std::move(members));
}

std::optional<AxiomReport> check_ss_axioms(const BooleanAlgebra& algebra,
                                           const std::vector<Stack>& members) {
  internal::require_carrier_at_most(algebra, 4, "check_ss_axioms");
  std::vector<ESet> esets;
  esets.reserve(members.size());
  for (const auto& u : members) {
    detail::require_same_algebra(algebra, u.algebra(), "check_ss_axioms");
    esets.push_back(internal::to_eset(u.expand()));
  }
  std::sort(esets.begin(), esets.end());
  esets.erase(std::unique(esets.begin(), esets.end()), esets.end());
  return internal::check_stack_system_esets(algebra, esets);
}

StackSystem check_ss(const BooleanAlgebra& algebra,
                     const std::vector<Stack>& members) {
  std::vector<ESet> esets;
  esets.reserve(members.size());
  for (const auto& u : members) {
    detail::require_same_algebra(algebra, u.algebra(), "check_ss");
    esets.push_back(internal::to_eset(u.expand()));
  }
  return StackSystem::from_esets(algebra, std::move(esets));
}

StackSystem sk_of(const ExplicitUc& k) {
  const auto tables = detail::make_carrier_tables(k.algebra().n_atoms());
  std::vector<ESet> esets;
  const auto& mem = k.member_bits();
  for (std::uint64_t m = 1; m < mem.size(); ++m) {
    if (mem[m]) esets.push_back(tables.up_closure[m]);
  }
  return StackSystem::from_esets(k.algebra(), std::move(esets));
}

StackSystem sk_of(const Ultracontact& k) {
  return StackSystem::from_esets(k.algebra(), k.witness_esets());
}

ExplicitUc ks_of(const StackSystem& s) {
  internal::require_carrier_at_most(s.algebra(), 4, "ks_of");
  const auto tables = detail::make_carrier_tables(s.algebra().n_atoms());
  std::vector<bool> bits(std::size_t{1} << s.algebra().carrier_size(), false);
  for (std::uint64_t m = 1; m < bits.size(); ++m) {
    bits[m] = s.contains_eset(tables.up_closure[m]);
  }
  return ExplicitUc::from_family_masks(s.algebra(), std::move(bits));
}

Ultracontact uc_of(const StackSystem& s) {
  return Ultracontact::from_witness_esets(s.algebra(), s.member_esets());
}

StackSystem ss_of(const Ultracontact& k) { return sk_of(k); }

StackSystem smin(const BooleanAlgebra& algebra) {
  internal::require_carrier_at_most(algebra, 4, "smin");
  std::vector<ESet> members;
  for (ESet s : detail::all_stack_esets(algebra.n_atoms())) {
    if (s != 0 && detail::meet_of(s, algebra.n_atoms()) != 0) {
      members.push_back(s);
    }
  }
  return StackSystem::from_esets(algebra, std::move(members));
}

StackSystem smax(const BooleanAlgebra& algebra) {
  internal::require_carrier_at_most(algebra, 4, "smax");
  const ESet full = detail::full_eset(algebra.n_atoms());
  std::vector<ESet> members;
  for (ESet s : detail::all_stack_esets(algebra.n_atoms())) {
    if (s != 0 && s != full) members.push_back(s);
  }
  return StackSystem::from_esets(algebra, std::move(members));
}

}  // namespace uclab
