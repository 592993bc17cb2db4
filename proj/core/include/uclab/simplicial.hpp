#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uclab/uc.hpp"

namespace uclab {

// Abstract simplicial complex on a named vertex set: a family of nonempty
// vertex subsets containing every singleton and closed under nonempty
// subsets. Faces are stored as sorted vertex-set bit masks.
class SimplicialComplex {
 public:
  SimplicialComplex(std::vector<std::string> vertices,
                    std::vector<std::uint32_t> face_masks);

  const std::vector<std::string>& vertices() const { return vertices_; }
  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::uint32_t>& face_masks() const { return faces_; }
  std::size_t n_faces() const { return faces_.size(); }
  bool has_face(std::uint32_t mask) const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.faces_ == b.faces_;
  }
  friend bool operator!=(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::uint32_t> faces_;  // sorted, unique, nonempty masks
};

// First violated axiom among (SC1)-(SC2), or nullopt.
std::optional<AxiomReport> check_complex_axioms(const SimplicialComplex& s);

// Throws AxiomError on violation, otherwise hands the complex back.
SimplicialComplex check_complex(const SimplicialComplex& s);

// σ: the nonempty atom sets that are members of the ultracontact, read as
// faces over the atom vertices.
SimplicialComplex sigma(const Ultracontact& k);

// σ⁻¹: membership is support by some face. The complex's vertices must be
// the algebra's atoms.
Ultracontact sigma_inverse(const SimplicialComplex& s,
                           const BooleanAlgebra& algebra);
Ultracontact sigma_inverse(const SimplicialComplex& s);

// All complexes on the given vertices, ascending in face count per the
// canonical face-mask order. Requires n <= 5.
std::vector<SimplicialComplex> enumerate_complexes(
    std::vector<std::string> vertices);
std::vector<SimplicialComplex> enumerate_complexes(int n_vertices);

// All ultracontacts on the algebra, through the face-set correspondence.
// Requires n_atoms <= 5; the callback form streams without retaining.
std::vector<Ultracontact> enumerate_ucs(const BooleanAlgebra& algebra);
void for_each_uc(const BooleanAlgebra& algebra,
                 const std::function<void(const Ultracontact&)>& fn);

}  // namespace uclab
