#include "uclab/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "internal.hpp"

namespace uclab {

namespace {

void require_vertex_cap(int n, const char* op) {
  if (n < 1 || n > 5) {
    throw CapExceeded(std::string(op) + ": needs 1 <= vertices <= 5, got " +
                      std::to_string(n));
  }
}

std::string face_text(const SimplicialComplex& s, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < s.n_vertices(); ++v) {
    if ((mask >> v) & 1u) {
      if (!first) out += ",";
      out += s.vertices()[v];
      first = false;
    }
  }
  return out + "}";
}

// Candidate faces of size >= 2 in canonical order: ascending size, then
// ascending mask. Processing in this order makes the down-closure constraint
// checkable against already-decided faces.
std::vector<std::uint32_t> big_faces_in_order(int n) {
  std::vector<std::uint32_t> faces;
  for (std::uint32_t h = 1; h < (1u << n); ++h) {
    if (std::popcount(h) >= 2) faces.push_back(h);
  }
  std::stable_sort(faces.begin(), faces.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  return faces;
}

void complexes_rec(const std::vector<std::uint32_t>& candidates,
                   std::size_t index, std::uint32_t chosen_bits,
                   const std::vector<std::string>& vertices,
                   std::vector<std::uint32_t>& chosen,
                   std::vector<SimplicialComplex>& out) {
  if (index == candidates.size()) {
    std::vector<std::uint32_t> faces;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
      faces.push_back(1u << v);
    }
    faces.insert(faces.end(), chosen.begin(), chosen.end());
    std::sort(faces.begin(), faces.end());
    out.emplace_back(vertices, std::move(faces));
    return;
  }
  complexes_rec(candidates, index + 1, chosen_bits, vertices, chosen, out);
  const std::uint32_t h = candidates[index];
  bool closed = true;
  for (int v = 0; v < 32 && closed; ++v) {
    if (!((h >> v) & 1u)) continue;
    const std::uint32_t sub = h & ~(1u << v);
    if (std::popcount(sub) < 2) continue;
    const auto it =
        std::find(candidates.begin(), candidates.begin() + index, sub);
    closed = (chosen_bits >> (it - candidates.begin())) & 1u;
  }
  if (closed) {
    chosen.push_back(h);
    complexes_rec(candidates, index + 1,
                  chosen_bits | (1u << index), vertices, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<std::uint32_t> face_masks)
    : vertices_(std::move(vertices)), faces_(std::move(face_masks)) {
  if (vertices_.empty() || vertices_.size() > 20) {
    throw InvalidInput("SimplicialComplex: vertex count out of range");
  }
  for (std::uint32_t f : faces_) {
    if (f == 0 || f >= (1u << vertices_.size())) {
      throw InvalidInput("SimplicialComplex: face out of range or empty");
    }
  }
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

bool SimplicialComplex::has_face(std::uint32_t mask) const {
  return std::binary_search(faces_.begin(), faces_.end(), mask);
}

std::optional<AxiomReport> check_complex_axioms(const SimplicialComplex& s) {
  for (int v = 0; v < s.n_vertices(); ++v) {
    if (!s.has_face(1u << v)) {
      return AxiomReport{
          "SC1", "singleton {" + s.vertices()[v] + "} is not a face", {}};
    }
  }
  for (std::uint32_t f : s.face_masks()) {
    for (int v = 0; v < s.n_vertices(); ++v) {
      if (!((f >> v) & 1u)) continue;
      const std::uint32_t sub = f & ~(1u << v);
      if (sub != 0 && !s.has_face(sub)) {
        return AxiomReport{"SC2",
                           "face " + face_text(s, f) + " has non-face subset " +
                               face_text(s, sub),
                           {}};
      }
    }
  }
  return std::nullopt;
}

SimplicialComplex check_complex(const SimplicialComplex& s) {
  if (auto violation = check_complex_axioms(s)) {
    throw AxiomError(*violation);
  }
  return s;
}

SimplicialComplex sigma(const Ultracontact& k) {
  return SimplicialComplex(k.algebra().atom_names(), internal::uc_faces(k));
}

Ultracontact sigma_inverse(const SimplicialComplex& s,
                           const BooleanAlgebra& algebra) {
  if (s.vertices() != algebra.atom_names()) {
    throw InvalidInput("sigma_inverse: complex vertices differ from the atoms");
  }
  check_complex(s);
  return Ultracontact::from_witness_esets(
      algebra,
      internal::witnesses_for_faces(algebra.n_atoms(), s.face_masks()));
}

Ultracontact sigma_inverse(const SimplicialComplex& s) {
  return sigma_inverse(s, BooleanAlgebra(s.vertices()));
}

std::vector<SimplicialComplex> enumerate_complexes(
    std::vector<std::string> vertices) {
  require_vertex_cap(static_cast<int>(vertices.size()), "enumerate_complexes");
  const auto candidates = big_faces_in_order(static_cast<int>(vertices.size()));
  std::vector<SimplicialComplex> out;
  std::vector<std::uint32_t> chosen;
  complexes_rec(candidates, 0, 0, vertices, chosen, out);
  std::sort(out.begin(), out.end(),
            [](const SimplicialComplex& a, const SimplicialComplex& b) {
              return a.face_masks() < b.face_masks();
            });
  return out;
}

std::vector<SimplicialComplex> enumerate_complexes(int n_vertices) {
  require_vertex_cap(n_vertices, "enumerate_complexes");
  std::vector<std::string> vertices;
  for (int v = 0; v < n_vertices; ++v) {
    vertices.push_back(std::string(1, static_cast<char>('a' + v)));
  }
  return enumerate_complexes(std::move(vertices));
}

std::vector<Ultracontact> enumerate_ucs(const BooleanAlgebra& algebra) {
  std::vector<Ultracontact> out;
  for_each_uc(algebra, [&](const Ultracontact& k) { out.push_back(k); });
  return out;
}

void for_each_uc(const BooleanAlgebra& algebra,
                 const std::function<void(const Ultracontact&)>& fn) {
  require_vertex_cap(algebra.n_atoms(), "enumerate_ucs");
  for (const auto& s : enumerate_complexes(algebra.atom_names())) {
    fn(sigma_inverse(s, algebra));
  }
}

}  // namespace uclab
