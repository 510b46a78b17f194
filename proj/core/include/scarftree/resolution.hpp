#pragma once

// Monomially labeled complexes: the acyclicity and connectivity support
// criteria, minimality, multigraded Betti numbers and Scarf complexes.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "scarftree/complex.hpp"
#include "scarftree/homology.hpp"
#include "scarftree/monomial.hpp"

namespace scarftree {

// ideal.generators()[i] labels complex.vertices()[i].
struct LabeledComplex {
  SimplicialComplex complex;
  MonomialIdeal ideal;
};

// Throws ArityMismatch unless there is one generator per vertex.
LabeledComplex make_labeled(SimplicialComplex complex, MonomialIdeal ideal);

// Pairs generators with `vertex_order` positionally, whatever the natural
// order of the names. Throws ArityMismatch or UnknownVertex.
LabeledComplex make_labeled(SimplicialComplex complex, const MonomialIdeal& ideal,
                            const std::vector<Vertex>& vertex_order);

// The full simplex on the generators, vertices named "1".."n".
LabeledComplex taylor_complex(const MonomialIdeal& ideal);

std::vector<Vertex> default_vertex_names(std::size_t count);

// lcm of the vertex labels; throws NotAFace for the empty face or a non-face.
Monomial face_label(const LabeledComplex& labeled, const Face& face);

// Induced on the vertices whose labels divide m.
SimplicialComplex divisor_subcomplex(const LabeledComplex& labeled, const Monomial& m);

struct SupportCheck {
  bool supports = true;
  // Lex-smallest degree (under the ideal's variable order) whose divisor
  // subcomplex fails the criterion.
  std::optional<Monomial> failing_degree;
};

// Every divisor subcomplex over the lcm lattice is empty or acyclic.
SupportCheck supports_resolution(const LabeledComplex& labeled, FieldSpec field = {});

// Forest inputs only: every divisor subcomplex over the lcm lattice is
// connected. Throws NotAForest.
SupportCheck supports_resolution_tree(const LabeledComplex& labeled);

struct MinimalityCheck {
  bool minimal = true;
  // A face and a maximal proper subface with the same label.
  std::optional<std::pair<Face, Face>> violation;
};

MinimalityCheck is_minimal(const LabeledComplex& labeled);

struct BettiEntry {
  Monomial degree;
  // ranks[i] = beta_{i, degree}
  std::vector<std::size_t> ranks;
};

struct BettiTable {
  // Degrees with a nonzero rank, in lex order under the variable order.
  std::vector<BettiEntry> by_degree;
  // beta_0 counts the generators, beta_i pairs with f_i.
  std::vector<std::size_t> vector;
};

// beta_{i,m} = rank of reduced H_{i-1} of the Taylor faces whose label
// strictly divides m, for m over the lcm lattice.
BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field = {});

// Faces of the Taylor simplex whose label no other face shares. Vertex i is
// named vertex_names[i] (default "1".."n"). Throws InternalClosureViolation
// if the kept faces are not downward closed.
LabeledComplex scarf_complex(const MonomialIdeal& ideal);
LabeledComplex scarf_complex(const MonomialIdeal& ideal, const std::vector<Vertex>& vertex_names);

struct BettiComparison {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> f;
  // Per index (after zero padding): betti[i] <= f[i].
  std::vector<bool> bounded;
  bool all_bounded = true;
  bool equal = true;
};

// Throws NotAResolution unless the labeled complex supports a resolution.
BettiComparison compare_betti_f(const LabeledComplex& labeled, FieldSpec field = {});

}  // namespace scarftree
