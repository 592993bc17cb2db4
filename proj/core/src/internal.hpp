#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uclab/detail/bits.hpp"
#include "uclab/family.hpp"
#include "uclab/uc.hpp"

// Helpers shared across the implementation files; not installed.

namespace uclab::internal {

void require_carrier_at_most(const BooleanAlgebra& algebra, int max_atoms,
                             const char* op);

detail::ESet to_eset(const Family& f);
Family from_eset(const BooleanAlgebra& algebra, detail::ESet s);
Stack stack_from_eset(const BooleanAlgebra& algebra, detail::ESet s);

// Grill test on the element-set form: nonempty, zero-free, up-closed,
// splitting over joins. Valid while the carrier fits an ESet.
bool is_grill_eset(detail::ESet s, int n_atoms);

// Stack-system axioms (SS0)-(SS4) over a sorted witness list; returns the
// first violation. Quantifies over all stacks of the algebra.
std::optional<AxiomReport> check_stack_system_esets(
    const BooleanAlgebra& algebra, const std::vector<detail::ESet>& members);

// Face set of an ultracontact: the nonempty atom sets whose singleton
// families are members, ascending.
std::vector<std::uint32_t> uc_faces(const Ultracontact& k);

// Witness stacks of the ultracontact determined by a face set: the nonempty
// stacks every member of which meets some face.
std::vector<detail::ESet> witnesses_for_faces(
    int n_atoms, const std::vector<std::uint32_t>& faces);

}  // namespace uclab::internal
