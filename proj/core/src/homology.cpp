#include "scarftree/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_map>

#include "scarftree/error.hpp"

namespace scarftree {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a supported prime characteristic");
  }
  return FieldSpec{p};
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
  for (std::size_t r = 0; r < dense.size(); ++r) {
    for (std::size_t c = 0; c < dense[r].size(); ++c) {
      if (dense[r][c] != 0) m.push(r, c, dense[r][c]);
    }
  }
  return m;
}

void SparseMatrix::push(std::size_t row, std::size_t col, std::int64_t value) {
  if (value != 0) data_[row].emplace_back(static_cast<std::uint32_t>(col), value);
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& [col, v] : data_[r]) {
    if (col == c) return v;
  }
  return 0;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::vector<std::int64_t> acc(other.cols_, 0);
    for (const auto& [k, a] : data_[r]) {
      for (const auto& [c, b] : other.data_[k]) acc[c] += a * b;
    }
    for (std::size_t c = 0; c < acc.size(); ++c) out.push(r, c, acc[c]);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

namespace {

struct RationalField {
  using Value = mpq_class;
  Value from(std::int64_t v) const { return Value(static_cast<long>(v)); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  Value inverse(const Value& v) const { return 1 / v; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
};

struct PrimeField {
  using Value = std::uint64_t;
  __extension__ using U128 = unsigned __int128;
  std::uint64_t p;
  Value from(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
    return static_cast<Value>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }
  static bool is_zero(Value v) { return v == 0; }
  Value mul(Value a, Value b) const {
    return static_cast<Value>(static_cast<U128>(a) * b % p);
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + p - b; }
  Value inverse(Value v) const {
    // Fermat: v^(p-2).
    Value result = 1, base = v;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
};

template <typename Field>
std::size_t eliminate_rank(const SparseMatrix& matrix, const Field& field) {
  using Value = typename Field::Value;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  std::vector<Row> rows;
  rows.reserve(matrix.rows());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    Row row;
    for (const auto& [c, v] : matrix.row(r)) {
      Value x = field.from(v);
      if (!Field::is_zero(x)) row.emplace_back(c, std::move(x));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty()) rows.push_back(std::move(row));
  }
  // Short rows first keeps fill-in low on boundary matrices.
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });

  // pivots[c]: a row whose leading column is c, normalised to leading 1.
  std::vector<std::optional<Row>> pivots(matrix.cols());
  std::size_t found = 0;
  Row scratch;
  for (Row& row : rows) {
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      if (!pivots[lead]) {
        const Value inv = field.inverse(row.front().second);
        for (auto& [c, v] : row) v = field.mul(v, inv);
        pivots[lead] = std::move(row);
        ++found;
        break;
      }
      // row -= row[lead] * pivot
      const Row& pivot = *pivots[lead];
      const Value factor = row.front().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          scratch.push_back(std::move(row[i++]));
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          Value v = field.sub(Value(0), field.mul(factor, pivot[j].second));
          if (!Field::is_zero(v)) scratch.emplace_back(pivot[j].first, std::move(v));
          ++j;
        } else {
          Value v = field.sub(row[i].second, field.mul(factor, pivot[j].second));
          if (!Field::is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
    }
  }
  return found;
}

}  // namespace

std::size_t rank(const SparseMatrix& matrix, FieldSpec field) {
  if (field.characteristic == 0) return eliminate_rank(matrix, RationalField{});
  return eliminate_rank(matrix, PrimeField{field.characteristic});
}

ChainComplex chain_complex(std::span<const VertexMask> faces) {
  ChainComplex out;
  int top = -1;
  for (VertexMask f : faces) top = std::max(top, popcount(f));
  if (top < 0) return out;
  out.bases.resize(static_cast<std::size_t>(top) + 1);
  for (VertexMask f : faces) out.bases[static_cast<std::size_t>(popcount(f))].push_back(f);
  std::unordered_map<VertexMask, std::size_t> position;
  for (auto& level : out.bases) {
    std::sort(level.begin(), level.end(), mask_less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (std::size_t i = 0; i < level.size(); ++i) position.emplace(level[i], i);
  }

  out.boundaries.emplace_back(0, out.bases[0].size());
  for (std::size_t k = 1; k < out.bases.size(); ++k) {
    // Build column-wise then transpose into rows of bases[k-1].
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(out.bases[k - 1].size());
    for (std::size_t col = 0; col < out.bases[k].size(); ++col) {
      const VertexMask face = out.bases[k][col];
      std::int64_t sign = 1;
      for (VertexMask rest = face; rest; rest &= rest - 1) {
        const VertexMask sub = face & ~(rest & (~rest + 1));
        const std::int64_t entry = sign;
        sign = -sign;
        if (sub == 0 && out.bases[0].empty()) continue;  // not augmented
        auto it = position.find(sub);
        if (it == position.end()) {
          throw Error(ErrorCode::InternalClosureViolation, "face family is not closed under taking subfaces");
        }
        rows[it->second].emplace_back(static_cast<std::uint32_t>(col), entry);
      }
    }
    SparseMatrix m(out.bases[k - 1].size(), out.bases[k].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [c, v] : rows[r]) m.push(r, c, v);
    }
    out.boundaries.push_back(std::move(m));
  }
  for (std::size_t k = 2; k < out.boundaries.size(); ++k) {
    if (!out.boundaries[k - 1].multiply(out.boundaries[k]).is_zero()) {
      throw Error(ErrorCode::InternalClosureViolation, "boundary maps do not compose to zero");
    }
  }
  return out;
}

ChainComplex chain_complex(const SimplicialComplex& complex, bool include_empty) {
  const std::vector<VertexMask> masks = face_masks(complex, include_empty);
  return chain_complex(masks);
}

std::size_t HomologyRanks::at(int dimension) const {
  const auto k = static_cast<std::size_t>(dimension + 1);
  return dimension < -1 || k >= ranks.size() ? 0 : ranks[k];
}

bool HomologyRanks::all_zero() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

HomologyRanks reduced_homology_ranks(const ChainComplex& chains, FieldSpec field) {
  HomologyRanks out;
  const std::size_t levels = chains.bases.size();
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) boundary_rank[k] = rank(chains.boundaries[k], field);
  out.ranks.resize(std::max<std::size_t>(levels, 1), 0);
  for (std::size_t k = 0; k < levels; ++k) {
    out.ranks[k] = chains.bases[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  while (out.ranks.size() > 1 && out.ranks.back() == 0) out.ranks.pop_back();
  return out;
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field) {
  return reduced_homology_ranks(chain_complex(complex, true), field);
}

HomologyRanks reduced_homology_ranks(std::span<const VertexMask> faces, FieldSpec field) {
  return reduced_homology_ranks(chain_complex(faces), field);
}

bool is_acyclic(const SimplicialComplex& complex, FieldSpec field) {
  return complex.empty() || reduced_homology_ranks(complex, field).all_zero();
}

}  // namespace scarftree
