#include "uclab/json_io.hpp"

#include <fstream>

#include "internal.hpp"

namespace uclab::io {

namespace {

std::uint32_t element_mask_from_json(const BooleanAlgebra& algebra,
                                     const json& j) {
  if (!j.is_array()) throw InvalidInput("element: expected an atom-name array");
  std::uint32_t mask = 0;
  for (const auto& name : j) {
    const auto& names = algebra.atom_names();
    const auto it = std::find(names.begin(), names.end(),
                              name.get<std::string>());
    if (it == names.end()) {
      throw InvalidInput("element: unknown atom '" + name.get<std::string>() +
                         "'");
    }
    mask |= 1u << (it - names.begin());
  }
  return mask;
}

json element_mask_to_json(const BooleanAlgebra& algebra, std::uint32_t mask) {
  json out = json::array();
  for (int i = 0; i < algebra.n_atoms(); ++i) {
    if ((mask >> i) & 1u) out.push_back(algebra.atom_names()[i]);
  }
  return out;
}

json family_masks_to_json(const BooleanAlgebra& algebra,
                          const std::vector<std::uint32_t>& masks) {
  json out = json::array();
  for (std::uint32_t m : masks) out.push_back(element_mask_to_json(algebra, m));
  return out;
}

std::vector<std::uint32_t> family_masks_from_json(const BooleanAlgebra& algebra,
                                                  const json& j) {
  if (!j.is_array()) throw InvalidInput("family: expected an array of elements");
  std::vector<std::uint32_t> masks;
  for (const auto& e : j) masks.push_back(element_mask_from_json(algebra, e));
  return masks;
}

const json& require_field(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw InvalidInput(std::string(what) + ": missing \"" + key + "\"");
  }
  return *it;
}

}  // namespace

json algebra_to_json(const BooleanAlgebra& algebra) {
  return json{{"atoms", algebra.atom_names()}};
}

BooleanAlgebra algebra_from_json(const json& j) {
  const json& atoms = require_field(j, "atoms", "algebra");
  if (!atoms.is_array()) throw InvalidInput("algebra: \"atoms\" must be an array");
  return BooleanAlgebra(atoms.get<std::vector<std::string>>());
}

json element_to_json(const Element& x) {
  return element_mask_to_json(x.algebra(), x.mask());
}

Element element_from_json(const BooleanAlgebra& algebra, const json& j) {
  return algebra.element(element_mask_from_json(algebra, j));
}

json family_to_json(const Family& f) {
  return json{{"kind", "family"},
              {"algebra", algebra_to_json(f.algebra())},
              {"members", family_masks_to_json(f.algebra(), f.masks())}};
}

Family family_from_json(const json& j) {
  BooleanAlgebra algebra = algebra_from_json(require_field(j, "algebra", "family"));
  return Family::from_masks(
      algebra, family_masks_from_json(algebra, require_field(j, "members", "family")));
}

json stack_to_json(const Stack& u) {
  return json{{"kind", "stack"},
              {"algebra", algebra_to_json(u.algebra())},
              {"members", family_masks_to_json(u.algebra(), u.antichain())}};
}

Stack stack_from_json(const json& j) {
  BooleanAlgebra algebra = algebra_from_json(require_field(j, "algebra", "stack"));
  return up_closure(Family::from_masks(
      algebra, family_masks_from_json(algebra, require_field(j, "members", "stack"))));
}

namespace {

json witnesses_to_json(const BooleanAlgebra& algebra,
                       const std::vector<std::uint64_t>& esets) {
  json out = json::array();
  for (std::uint64_t w : esets) {
    out.push_back(family_masks_to_json(
        algebra, detail::min_elements(w, algebra.n_atoms())));
  }
  return out;
}

std::vector<std::uint64_t> witness_esets_from_json(const BooleanAlgebra& algebra,
                                                   const json& j) {
  if (!j.is_array()) {
    throw InvalidInput("witnesses: expected an array of stacks");
  }
  if (algebra.n_atoms() > detail::kMaxESetAtoms) {
    throw CapExceeded("witnesses: carrier too large for the witness form");
  }
  std::vector<std::uint64_t> out;
  for (const auto& w : j) {
    detail::ESet members = 0;
    for (std::uint32_t m : family_masks_from_json(algebra, w)) {
      members |= detail::ESet{1} << m;
    }
    out.push_back(detail::up_closure(members, algebra.n_atoms()));
  }
  return out;
}

}  // namespace

json uc_to_json(const Ultracontact& k, bool include_explicit) {
  json out{{"kind", "uc"},
           {"algebra", algebra_to_json(k.algebra())},
           {"witnesses", witnesses_to_json(k.algebra(), k.witness_esets())}};
  if (include_explicit) {
    json members = json::array();
    for (const auto& f : k.explicit_members().members()) {
      members.push_back(family_masks_to_json(k.algebra(), f.masks()));
    }
    out["explicit"] = std::move(members);
  }
  return out;
}

Ultracontact uc_from_json(const json& j) {
  BooleanAlgebra algebra = algebra_from_json(require_field(j, "algebra", "uc"));
  return Ultracontact::from_witness_esets(
      algebra,
      witness_esets_from_json(algebra, require_field(j, "witnesses", "uc")));
}

json ss_to_json(const StackSystem& s) {
  return json{{"kind", "stack-system"},
              {"algebra", algebra_to_json(s.algebra())},
              {"witnesses", witnesses_to_json(s.algebra(), s.member_esets())}};
}

StackSystem ss_from_json(const json& j) {
  BooleanAlgebra algebra =
      algebra_from_json(require_field(j, "algebra", "stack-system"));
  return StackSystem::from_esets(
      algebra, witness_esets_from_json(
                   algebra, require_field(j, "witnesses", "stack-system")));
}

WitnessParts witness_parts_from_json(const json& j) {
  BooleanAlgebra algebra =
      algebra_from_json(require_field(j, "algebra", "witness structure"));
  std::vector<Stack> witnesses;
  for (std::uint64_t w : witness_esets_from_json(
           algebra, require_field(j, "witnesses", "witness structure"))) {
    witnesses.push_back(up_closure(Family::from_masks(
        algebra, detail::min_elements(w, algebra.n_atoms()))));
  }
  WitnessParts parts{algebra, std::move(witnesses), std::nullopt};
  if (j.contains("explicit")) {
    std::vector<Family> members;
    for (const auto& f : j["explicit"]) {
      members.push_back(
          Family::from_masks(algebra, family_masks_from_json(algebra, f)));
    }
    parts.explicit_members = std::move(members);
  }
  return parts;
}

json contact_to_json(const ContactRelation& c) {
  json pairs = json::array();
  for (const auto& [x, y] : c.pairs()) {
    pairs.push_back(json::array({element_to_json(x), element_to_json(y)}));
  }
  return json{{"kind", "contact"},
              {"algebra", algebra_to_json(c.algebra())},
              {"pairs", std::move(pairs)}};
}

ContactRelation contact_from_json(const json& j) {
  BooleanAlgebra algebra =
      algebra_from_json(require_field(j, "algebra", "contact"));
  const json& pairs = require_field(j, "pairs", "contact");
  std::vector<std::pair<Element, Element>> out;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) {
      throw InvalidInput("contact: each pair must hold two elements");
    }
    out.emplace_back(element_from_json(algebra, p[0]),
                     element_from_json(algebra, p[1]));
  }
  return ContactRelation::from_pairs(algebra, out);
}

json hypercontact_to_json(const Hypercontact& d) {
  json members = json::array();
  for (const auto& f : d.members()) {
    members.push_back(family_masks_to_json(d.algebra(), f.masks()));
  }
  return json{{"kind", "hypercontact"},
              {"algebra", algebra_to_json(d.algebra())},
              {"members", std::move(members)}};
}

Hypercontact hypercontact_from_json(const json& j) {
  BooleanAlgebra algebra =
      algebra_from_json(require_field(j, "algebra", "hypercontact"));
  std::vector<Family> members;
  for (const auto& f : require_field(j, "members", "hypercontact")) {
    members.push_back(
        Family::from_masks(algebra, family_masks_from_json(algebra, f)));
  }
  return Hypercontact(algebra, members);
}

json complex_to_json(const SimplicialComplex& s) {
  json faces = json::array();
  for (std::uint32_t f : s.face_masks()) {
    json face = json::array();
    for (int v = 0; v < s.n_vertices(); ++v) {
      if ((f >> v) & 1u) face.push_back(s.vertices()[v]);
    }
    faces.push_back(std::move(face));
  }
  return json{{"kind", "complex"},
              {"vertices", s.vertices()},
              {"faces", std::move(faces)}};
}

SimplicialComplex complex_from_json(const json& j) {
  const auto vertices =
      require_field(j, "vertices", "complex").get<std::vector<std::string>>();
  std::vector<std::uint32_t> faces;
  for (const auto& face : require_field(j, "faces", "complex")) {
    std::uint32_t mask = 0;
    for (const auto& name : face) {
      const auto it = std::find(vertices.begin(), vertices.end(),
                                name.get<std::string>());
      if (it == vertices.end()) {
        throw InvalidInput("complex: unknown vertex '" +
                           name.get<std::string>() + "'");
      }
      mask |= 1u << (it - vertices.begin());
    }
    faces.push_back(mask);
  }
  return SimplicialComplex(vertices, std::move(faces));
}

json space_to_json(const FiniteTopSpace& x) {
  json opens = json::array();
  for (std::uint32_t o : x.open_masks()) {
    json open = json::array();
    for (int p = 0; p < x.n_points(); ++p) {
      if ((o >> p) & 1u) open.push_back(x.points()[p]);
    }
    opens.push_back(std::move(open));
  }
  return json{
      {"kind", "space"}, {"points", x.points()}, {"opens", std::move(opens)}};
}

FiniteTopSpace space_from_json(const json& j) {
  const auto points =
      require_field(j, "points", "space").get<std::vector<std::string>>();
  std::vector<std::uint32_t> opens;
  for (const auto& open : require_field(j, "opens", "space")) {
    std::uint32_t mask = 0;
    for (const auto& name : open) {
      const auto it =
          std::find(points.begin(), points.end(), name.get<std::string>());
      if (it == points.end()) {
        throw InvalidInput("space: unknown point '" + name.get<std::string>() +
                           "'");
      }
      mask |= 1u << (it - points.begin());
    }
    opens.push_back(mask);
  }
  return FiniteTopSpace(points, std::move(opens));
}

std::string detect_kind(const json& j) {
  if (j.contains("kind")) return j["kind"].get<std::string>();
  if (j.contains("witnesses")) return "uc";
  if (j.contains("pairs")) return "contact";
  if (j.contains("faces")) return "complex";
  if (j.contains("opens")) return "space";
  if (j.contains("members")) return "family";
  if (j.contains("atoms")) return "algebra";
  throw InvalidInput("cannot infer the structure kind");
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << canonical_dump(j);
}

}  // namespace uclab::io
