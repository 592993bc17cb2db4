#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uclab/contact.hpp"
#include "uclab/simplicial.hpp"
#include "uclab/stacksys.hpp"
#include "uclab/topology.hpp"
#include "uclab/uc.hpp"

// JSON encodings. Algebras are {"atoms": [...]}; elements are sorted
// atom-name arrays (zero is [], one lists every atom); families carry their
// algebra and their canonically sorted member list. Ultracontacts and stack
// systems share the witness encoding: a list of stacks, each given by its
// min-antichain. Output key order is alphabetical and arrays follow the
// canonical mask orders, so dumps are stable.

namespace uclab::io {

using json = nlohmann::json;

json algebra_to_json(const BooleanAlgebra& algebra);
BooleanAlgebra algebra_from_json(const json& j);

json element_to_json(const Element& x);
Element element_from_json(const BooleanAlgebra& algebra, const json& j);

json family_to_json(const Family& f);
Family family_from_json(const json& j);

json stack_to_json(const Stack& u);
Stack stack_from_json(const json& j);

json uc_to_json(const Ultracontact& k, bool include_explicit = false);
Ultracontact uc_from_json(const json& j);  // validates; throws AxiomError

json ss_to_json(const StackSystem& s);
StackSystem ss_from_json(const json& j);  // validates; throws AxiomError

// Unvalidated pieces of a witness-encoded structure, for checkers that must
// report violations rather than refuse to load.
struct WitnessParts {
  BooleanAlgebra algebra;
  std::vector<Stack> witnesses;
  std::optional<std::vector<Family>> explicit_members;
};
WitnessParts witness_parts_from_json(const json& j);

json contact_to_json(const ContactRelation& c);
ContactRelation contact_from_json(const json& j);

json hypercontact_to_json(const Hypercontact& d);
Hypercontact hypercontact_from_json(const json& j);

json complex_to_json(const SimplicialComplex& s);
SimplicialComplex complex_from_json(const json& j);

json space_to_json(const FiniteTopSpace& x);
FiniteTopSpace space_from_json(const json& j);

// The "kind" field when present, otherwise inferred from the key shape.
std::string detect_kind(const json& j);

std::string canonical_dump(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace uclab::io
