#include "scarftree/scarf_ideals.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "scarftree/error.hpp"

namespace scarftree {
namespace {

Face minus(const Face& face, const Vertex& v) {
  std::vector<Vertex> rest;
  for (const Vertex& w : face.vertices()) {
    if (w != v) rest.push_back(w);
  }
  return Face(std::move(rest));
}

void require_not_boundary(const SimplicialComplex& complex) {
  if (is_boundary_of_simplex(complex)) {
    throw Error(ErrorCode::BoundaryOfSimplex, complex.to_string() + " is the boundary of a simplex");
  }
}

Monomial product(const FaceVariableRing& ring, const std::vector<Face>& faces) {
  Monomial out;
  for (const Face& f : faces) out = out * ring.x(f);
  return out;
}

std::vector<Monomial> j_generators(const FaceVariableRing& ring) {
  std::vector<Monomial> gens;
  for (const Vertex& v : ring.complex().vertices()) {
    std::vector<Face> avoiding;
    for (const Face& f : ring.faces()) {
      if (!f.contains(v)) avoiding.push_back(f);
    }
    gens.push_back(product(ring, avoiding));
  }
  return gens;
}

std::vector<Monomial> jprime_generators(const FaceVariableRing& ring) {
  const SimplicialComplex& complex = ring.complex();
  for (const Face& facet : complex.facets()) {
    if (facet.size() == 1) {
      throw Error(ErrorCode::DegenerateVertexFacet,
                  "facet " + facet.to_string() + " is a single vertex, so G \\ {v} has no face variable");
    }
  }
  const VertexFacetSplit split = vertex_facet_split(complex);
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    std::vector<Face> factors;
    for (const Face& g : split.containing[v]) factors.push_back(minus(g, complex.vertices()[v]));
    for (const Face& f : split.avoiding[v]) {
      factors.push_back(f);
      for (const Vertex& w : f.vertices()) factors.push_back(minus(f, w));
    }
    gens.push_back(radical(product(ring, factors)));
  }
  return gens;
}

}  // namespace

FaceVariableRing::FaceVariableRing(SimplicialComplex complex)
    : complex_(std::move(complex)), faces_(scarftree::faces(complex_)) {
  const bool short_names = std::all_of(complex_.vertices().begin(), complex_.vertices().end(),
                                       [](const Vertex& v) { return v.size() == 1; });
  std::set<std::string> seen;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    std::string name = "x_";
    for (std::size_t k = 0; k < faces_[i].size(); ++k) {
      if (k && !short_names) name += '_';
      name += faces_[i].vertices()[k];
    }
    if (!is_valid_variable_name(name) || !seen.insert(name).second) {
      throw Error(ErrorCode::InvalidVertexName, "vertex names do not give distinct variable names ('" + name + "')");
    }
    names_.push_back(std::move(name));
    index_.emplace(faces_[i], i);
  }
}

const std::string& FaceVariableRing::variable(const Face& face) const {
  auto it = index_.find(face);
  if (it == index_.end()) throw Error(ErrorCode::NotAFace, face.to_string() + " has no face variable");
  return names_[it->second];
}

bool is_boundary_of_simplex(const SimplicialComplex& complex) {
  const std::size_t r = complex.vertex_count();
  if (r < 2 || complex.facet_count() != r) return false;
  return std::all_of(complex.facet_masks().begin(), complex.facet_masks().end(),
                     [r](VertexMask f) { return static_cast<std::size_t>(popcount(f)) == r - 1; });
}

VertexFacetSplit vertex_facet_split(const SimplicialComplex& complex) {
  VertexFacetSplit split;
  split.avoiding.resize(complex.vertex_count());
  split.containing.resize(complex.vertex_count());
  const std::vector<Face> facets = complex.facets();
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    for (const Face& f : facets) {
      (f.contains(complex.vertices()[v]) ? split.containing : split.avoiding)[v].push_back(f);
    }
  }
  return split;
}

MonomialIdeal build_J(const SimplicialComplex& complex) {
  require_not_boundary(complex);
  const FaceVariableRing ring(complex);
  return MonomialIdeal(ring.variables(), j_generators(ring));
}

MonomialIdeal build_Jprime(const SimplicialComplex& complex) {
  require_not_boundary(complex);
  const FaceVariableRing ring(complex);
  std::vector<Monomial> primes = jprime_generators(ring);
  const std::vector<Monomial> full = j_generators(ring);
  for (std::size_t v = 0; v < primes.size(); ++v) {
    if (!divides(primes[v], full[v])) {
      throw Error(ErrorCode::DivisibilityViolation,
                  "m'_" + complex.vertices()[v] + " does not divide m_" + complex.vertices()[v]);
    }
  }
  return MonomialIdeal(ring.variables(), std::move(primes));
}

Monomial m_double_prime(const SimplicialComplex& complex, const Vertex& v) {
  auto idx = complex.index_of(v);
  if (!idx) throw Error(ErrorCode::UnknownVertex, "vertex '" + v + "' is not in the complex");
  require_not_boundary(complex);
  const FaceVariableRing ring(complex);
  return exact_quotient(j_generators(ring)[*idx], jprime_generators(ring)[*idx]);
}

MonomialIdeal build_intermediate(const SimplicialComplex& complex, const std::map<Vertex, Monomial>& h) {
  require_not_boundary(complex);
  for (const auto& [v, m] : h) {
    if (!complex.index_of(v)) throw Error(ErrorCode::UnknownVertex, "vertex '" + v + "' is not in the complex");
  }
  const FaceVariableRing ring(complex);
  const std::vector<Monomial> primes = jprime_generators(ring);
  const std::vector<Monomial> full = j_generators(ring);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Vertex& v = complex.vertices()[i];
    const Monomial quotient = exact_quotient(full[i], primes[i]);
    auto it = h.find(v);
    const Monomial hv = it == h.end() ? Monomial() : it->second;
    if (!divides(hv, quotient)) {
      throw Error(ErrorCode::BadH, "h_" + v + " = " + format_monomial(hv, ring.variables()) + " does not divide m''_" +
                                       v + " = " + format_monomial(quotient, ring.variables()));
    }
    gens.push_back(hv * primes[i]);
  }
  return MonomialIdeal(ring.variables(), std::move(gens));
}

std::map<Vertex, Monomial> sample_h(const SimplicialComplex& complex, std::uint64_t seed) {
  require_not_boundary(complex);
  const FaceVariableRing ring(complex);
  const std::vector<Monomial> primes = jprime_generators(ring);
  const std::vector<Monomial> full = j_generators(ring);
  // Raw engine output only, so samples do not depend on the standard
  // library's distribution implementations.
  std::mt19937_64 rng(seed);
  std::map<Vertex, Monomial> h;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Monomial quotient = exact_quotient(full[i], primes[i]);
    std::map<std::string, Exponent> chosen;
    if (rng() % 2 == 0) {
      const std::size_t pick = rng() % (quotient.exponents().size() + 1);
      if (pick > 0) {
        auto it = std::next(quotient.exponents().begin(), static_cast<std::ptrdiff_t>(pick - 1));
        chosen.emplace(it->first, Exponent(1));
      }
    } else {
      for (const auto& [name, e] : quotient.exponents()) {
        const std::uint64_t top = e.fits_ulong_p() ? std::min<std::uint64_t>(e.get_ui(), 1U << 30) : 1U << 30;
        chosen.emplace(name, Exponent(static_cast<unsigned long>(rng() % (top + 1))));
      }
    }
    h.emplace(complex.vertices()[i], Monomial(std::move(chosen)));
  }
  return h;
}

std::string_view to_string(ScarfRelation relation) {
  switch (relation) {
    case ScarfRelation::Equal: return "EQUAL";
    case ScarfRelation::Contains: return "CONTAINS";
    case ScarfRelation::Neither: return "NEITHER";
  }
  return "NEITHER";
}

ScarfVerification verify_scarf(const SimplicialComplex& complex, const MonomialIdeal& ideal) {
  if (ideal.size() != complex.vertex_count()) {
    throw Error(ErrorCode::IndexMismatch, std::to_string(ideal.size()) + " generators for " +
                                              std::to_string(complex.vertex_count()) + " vertices");
  }
  ScarfVerification out;
  out.scarf = scarf_complex(ideal, complex.vertices());
  const SimplicialComplex& scarf = out.scarf.complex;
  if (scarf == complex) {
    out.relation = ScarfRelation::Equal;
  } else {
    const auto facets = complex.facet_masks();
    const bool contained = std::all_of(facets.begin(), facets.end(), [&](VertexMask f) {
      return scarf.has_face(complex.face_of(f));
    });
    out.relation = contained ? ScarfRelation::Contains : ScarfRelation::Neither;
  }
  return out;
}

}  // namespace scarftree
