#pragma once

// Monomial ideals whose Scarf complex is a prescribed simplicial complex:
// the face-variable ideal J, its radical-trimmed variant J', and the ideals
// in between.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scarftree/complex.hpp"
#include "scarftree/monomial.hpp"
#include "scarftree/resolution.hpp"

namespace scarftree {

// One variable x_sigma per nonempty face sigma. Names are "x_" followed by
// the sorted vertex names, concatenated when every name is a single
// character and joined by "_" otherwise.
class FaceVariableRing {
 public:
  // Throws InvalidVertexName if the naming would not be injective or would
  // not produce valid variable names.
  explicit FaceVariableRing(SimplicialComplex complex);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  // Nonempty faces in canonical order; variables() is aligned with it.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const std::vector<std::string>& variables() const noexcept { return names_; }
  const std::string& variable(const Face& face) const;
  Monomial x(const Face& face) const { return Monomial::variable(variable(face)); }

 private:
  SimplicialComplex complex_;
  std::vector<Face> faces_;
  std::vector<std::string> names_;
  std::map<Face, std::size_t> index_;
};

struct VertexFacetSplit {
  // Per vertex, in vertex order: facets avoiding it / facets containing it.
  std::vector<std::vector<Face>> avoiding;
  std::vector<std::vector<Face>> containing;
};

// True iff the facets are exactly the (r-1)-subsets of an r-element vertex set.
bool is_boundary_of_simplex(const SimplicialComplex& complex);

VertexFacetSplit vertex_facet_split(const SimplicialComplex& complex);

// m_v = product of x_sigma over nonempty faces sigma not containing v, one
// generator per vertex in vertex order. Throws BoundaryOfSimplex.
MonomialIdeal build_J(const SimplicialComplex& complex);

// m'_v = radical of the product of x_{G \ v} over facets G containing v and
// of x_F and x_sigma (sigma a maximal proper face of F) over facets F
// avoiding v. Throws BoundaryOfSimplex or DegenerateVertexFacet (a facet that
// is a single vertex has no variable for G \ v).
MonomialIdeal build_Jprime(const SimplicialComplex& complex);

// m_v / m'_v; throws DivisibilityViolation if m'_v does not divide m_v.
Monomial m_double_prime(const SimplicialComplex& complex, const Vertex& v);

// Generators h_v * m'_v; vertices missing from h use 1. Throws BadH (naming
// the vertex) unless h_v | m''_v, and UnknownVertex for keys outside the
// vertex set.
MonomialIdeal build_intermediate(const SimplicialComplex& complex, const std::map<Vertex, Monomial>& h);

// Random h with h_v | m''_v. Each vertex gets, with equal odds, either a
// low-degree choice (1 or a single variable) or a uniformly random divisor.
std::map<Vertex, Monomial> sample_h(const SimplicialComplex& complex, std::uint64_t seed);

enum class ScarfRelation { Equal, Contains, Neither };

std::string_view to_string(ScarfRelation relation);

struct ScarfVerification {
  ScarfRelation relation = ScarfRelation::Neither;
  LabeledComplex scarf;
};

// Generator i of `ideal` labels the i-th vertex of `complex` (vertex order).
// Throws IndexMismatch if the counts differ.
ScarfVerification verify_scarf(const SimplicialComplex& complex, const MonomialIdeal& ideal);

}  // namespace scarftree
