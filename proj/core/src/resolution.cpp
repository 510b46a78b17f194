#include "scarftree/resolution.hpp"

#include <algorithm>
#include <bit>

#include "scarftree/error.hpp"
#include "taylor.hpp"

namespace scarftree {
namespace {

using detail::TaylorLattice;

LcmCode::Code mask_label(const LcmCode& code, VertexMask mask) {
  LcmCode::Code out(code.width(), 0);
  for (VertexMask rest = mask; rest; rest &= rest - 1) {
    code_lcm_into(out, code.generator(static_cast<std::size_t>(std::countr_zero(rest))));
  }
  return out;
}

template <typename Accept>
SupportCheck check_lattice(const LabeledComplex& labeled, Accept accept) {
  const TaylorLattice taylor(labeled.ideal);
  SupportCheck out;
  // The lattice is sorted lexicographically, so the first failure is the
  // smallest one.
  for (std::uint32_t id : taylor.lattice) {
    const SimplicialComplex sub = induced_mask(labeled.complex, taylor.divisor_mask(id));
    if (sub.empty() || accept(sub)) continue;
    out.supports = false;
    out.failing_degree = taylor.code.decode(taylor.labels[id]);
    break;
  }
  return out;
}

}  // namespace

std::vector<Vertex> default_vertex_names(std::size_t count) {
  std::vector<Vertex> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::to_string(i));
  return names;
}

LabeledComplex make_labeled(SimplicialComplex complex, MonomialIdeal ideal) {
  if (complex.vertex_count() != ideal.size()) {
    throw Error(ErrorCode::ArityMismatch, std::to_string(ideal.size()) + " generators for " +
                                              std::to_string(complex.vertex_count()) + " vertices");
  }
  return LabeledComplex{std::move(complex), std::move(ideal)};
}

LabeledComplex make_labeled(SimplicialComplex complex, const MonomialIdeal& ideal,
                            const std::vector<Vertex>& vertex_order) {
  if (vertex_order.size() != ideal.size() || complex.vertex_count() != ideal.size()) {
    throw Error(ErrorCode::ArityMismatch, std::to_string(ideal.size()) + " generators for " +
                                              std::to_string(complex.vertex_count()) + " vertices");
  }
  std::vector<std::optional<Monomial>> aligned(ideal.size());
  for (std::size_t i = 0; i < vertex_order.size(); ++i) {
    auto idx = complex.index_of(vertex_order[i]);
    if (!idx) throw Error(ErrorCode::UnknownVertex, "vertex '" + vertex_order[i] + "' is not in the complex");
    if (aligned[*idx]) throw Error(ErrorCode::ArityMismatch, "vertex '" + vertex_order[i] + "' labeled twice");
    aligned[*idx] = ideal.generators()[i];
  }
  std::vector<Monomial> gens;
  for (auto& g : aligned) gens.push_back(std::move(*g));
  return LabeledComplex{std::move(complex), MonomialIdeal(ideal.variables(), std::move(gens))};
}

LabeledComplex taylor_complex(const MonomialIdeal& ideal) {
  const auto names = default_vertex_names(ideal.size());
  const VertexMask all = ideal.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << ideal.size()) - 1;
  return make_labeled(SimplicialComplex::from_masks(names, {all}), ideal, names);
}

Monomial face_label(const LabeledComplex& labeled, const Face& face) {
  if (face.empty() || !labeled.complex.has_face(face)) {
    throw Error(ErrorCode::NotAFace, face.to_string() + " is not a nonempty face of " + labeled.complex.to_string());
  }
  std::vector<Monomial> labels;
  for (const Vertex& v : face.vertices()) labels.push_back(labeled.ideal.generators()[*labeled.complex.index_of(v)]);
  return lcm(labels);
}

SimplicialComplex divisor_subcomplex(const LabeledComplex& labeled, const Monomial& m) {
  VertexMask mask = 0;
  const auto& gens = labeled.ideal.generators();
  for (std::size_t v = 0; v < gens.size(); ++v) {
    if (divides(gens[v], m)) mask |= VertexMask{1} << v;
  }
  return induced_mask(labeled.complex, mask);
}

SupportCheck supports_resolution(const LabeledComplex& labeled, FieldSpec field) {
  return check_lattice(labeled, [&](const SimplicialComplex& sub) { return is_acyclic(sub, field); });
}

SupportCheck supports_resolution_tree(const LabeledComplex& labeled) {
  const ForestCheck forest = is_forest(labeled.complex);
  if (!forest.is_forest) {
    throw Error(ErrorCode::NotAForest, labeled.complex.to_string() + " is not a simplicial forest");
  }
  return check_lattice(labeled, [](const SimplicialComplex& sub) { return is_connected(sub); });
}

MinimalityCheck is_minimal(const LabeledComplex& labeled) {
  const LcmCode code(labeled.ideal.variables(), labeled.ideal.generators());
  const SimplicialComplex& complex = labeled.complex;
  for (VertexMask face : face_masks(complex)) {
    if (popcount(face) < 2) continue;
    const LcmCode::Code label = mask_label(code, face);
    for (VertexMask rest = face; rest; rest &= rest - 1) {
      const VertexMask sub = face & ~(rest & (~rest + 1));
      if (mask_label(code, sub) == label) {
        return {false, std::make_pair(complex.face_of(face), complex.face_of(sub))};
      }
    }
  }
  return {};
}

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field) {
  BettiTable out;
  if (ideal.size() == 0) return out;
  const TaylorLattice taylor(ideal);
  std::vector<VertexMask> below;
  for (std::uint32_t id : taylor.lattice) {
    // Faces of the full simplex on the divisors of m whose label is not m.
    // The empty face always stays, so the unit ideal gets beta_0 = 1.
    const std::uint64_t divisors = taylor.divisor_mask(id);
    below.clear();
    for (std::uint64_t sub = divisors;; sub = (sub - 1) & divisors) {
      if (sub == 0 || taylor.label_id[sub] != id) below.push_back(sub);
      if (sub == 0) break;
    }
    const HomologyRanks h = reduced_homology_ranks(below, field);
    if (h.all_zero()) continue;
    BettiEntry entry{taylor.code.decode(taylor.labels[id]), h.ranks};
    for (std::size_t i = 0; i < entry.ranks.size(); ++i) {
      if (out.vector.size() <= i) out.vector.resize(i + 1, 0);
      out.vector[i] += entry.ranks[i];
    }
    out.by_degree.push_back(std::move(entry));
  }
  if (out.vector.empty() || out.vector[0] != ideal.size()) {
    throw Error(ErrorCode::InternalClosureViolation, "beta_0 disagrees with the number of minimal generators");
  }
  return out;
}

LabeledComplex scarf_complex(const MonomialIdeal& ideal) {
  return scarf_complex(ideal, default_vertex_names(ideal.size()));
}

LabeledComplex scarf_complex(const MonomialIdeal& ideal, const std::vector<Vertex>& vertex_names) {
  if (vertex_names.size() != ideal.size()) {
    throw Error(ErrorCode::ArityMismatch, std::to_string(vertex_names.size()) + " names for " +
                                              std::to_string(ideal.size()) + " generators");
  }
  if (ideal.size() == 0) throw Error(ErrorCode::EmptyInput, "the zero ideal has no Scarf complex");
  const TaylorLattice taylor(ideal);
  std::vector<VertexMask> kept;
  for (std::size_t s = 1; s < taylor.label_id.size(); ++s) {
    if (taylor.multiplicity[taylor.label_id[s]] == 1) kept.push_back(s);
  }
  const std::vector<VertexMask> kept_sorted = [&] {
    auto k = kept;
    std::sort(k.begin(), k.end());
    return k;
  }();
  for (VertexMask f : kept) {
    for (VertexMask rest = f; rest; rest &= rest - 1) {
      const VertexMask sub = f & ~(rest & (~rest + 1));
      if (sub != 0 && !std::binary_search(kept_sorted.begin(), kept_sorted.end(), sub)) {
        throw Error(ErrorCode::InternalClosureViolation, "Scarf faces are not closed under taking subfaces");
      }
    }
  }
  SimplicialComplex complex = SimplicialComplex::from_masks(vertex_names, kept);
  if (complex.vertex_count() != ideal.size()) {
    throw Error(ErrorCode::InternalClosureViolation, "a generator is missing from the Scarf complex");
  }
  return make_labeled(std::move(complex), ideal, vertex_names);
}

BettiComparison compare_betti_f(const LabeledComplex& labeled, FieldSpec field) {
  const SupportCheck support = supports_resolution(labeled, field);
  if (!support.supports) {
    throw Error(ErrorCode::NotAResolution, "the labeled complex fails at degree " +
                                               format_monomial(*support.failing_degree, labeled.ideal.variables()));
  }
  BettiComparison out;
  out.betti = betti_table(labeled.ideal, field).vector;
  out.f = f_vector(labeled.complex);
  const std::size_t len = std::max(out.betti.size(), out.f.size());
  out.betti.resize(len, 0);
  out.f.resize(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const bool ok = out.betti[i] <= out.f[i];
    out.bounded.push_back(ok);
    out.all_bounded = out.all_bounded && ok;
    out.equal = out.equal && out.betti[i] == out.f[i];
  }
  return out;
}

}  // namespace scarftree
