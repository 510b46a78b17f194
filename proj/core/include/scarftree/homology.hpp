#pragma once

// Reduced simplicial homology ranks over Q or F_p, computed exactly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scarftree/complex.hpp"

namespace scarftree {

struct FieldSpec {
  // 0 for the rationals, otherwise a prime.
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  // Throws InvalidField unless p is a prime below 2^62.
  static FieldSpec prime(std::uint64_t p);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// Integer matrix stored by rows; entries are reduced into the field on use.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  // Entries must be added in increasing column order per row.
  void push(std::size_t row, std::size_t col, std::int64_t value);
  const Row& row(std::size_t r) const { return data_[r]; }
  std::int64_t at(std::size_t r, std::size_t c) const;

  // this * other
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

std::size_t rank(const SparseMatrix& matrix, FieldSpec field = {});

struct ChainComplex {
  // bases[k] lists the faces of dimension k - 1, so bases[0] holds the empty
  // face when the augmentation is included.
  std::vector<std::vector<VertexMask>> bases;
  // boundaries[k] maps span(bases[k]) -> span(bases[k-1]); rows index
  // bases[k-1]. boundaries[0] is the 0 x |bases[0]| matrix.
  std::vector<SparseMatrix> boundaries;
};

// Chain complex of an explicit downward-closed face family (masks over some
// vertex order; 0 is the empty face). Verifies closure and that consecutive
// boundaries compose to zero; throws InternalClosureViolation otherwise.
ChainComplex chain_complex(std::span<const VertexMask> faces);
ChainComplex chain_complex(const SimplicialComplex& complex, bool include_empty);

struct HomologyRanks {
  // ranks[k] is the rank in dimension k - 1.
  std::vector<std::size_t> ranks;

  std::size_t at(int dimension) const;
  bool all_zero() const;
};

HomologyRanks reduced_homology_ranks(const ChainComplex& chains, FieldSpec field = {});
// The void complex gives all zeros.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field = {});
// Augmented homology of a face family; a family holding only the empty face
// has rank 1 in dimension -1.
HomologyRanks reduced_homology_ranks(std::span<const VertexMask> faces, FieldSpec field = {});

bool is_acyclic(const SimplicialComplex& complex, FieldSpec field = {});

}  // namespace scarftree
