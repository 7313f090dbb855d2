#ifndef ANSPS_DATASET_HPP
#define ANSPS_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ansps/types.hpp"

namespace ansps {

/// Sparse feature row; indices are 0-based and strictly ascending.
struct SparseRow {
  std::vector<std::uint32_t> index;
  std::vector<double> value;

  double dot(const Vector& x) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < index.size(); ++j) acc += value[j] * x[index[j]];
    return acc;
  }

  bool operator==(const SparseRow&) const = default;
};

/// Labeled rows (w_i, z_i) with z_i in {-1, +1}.
struct Dataset {
  std::size_t n = 0;  // feature dimension
  std::vector<SparseRow> rows;
  std::vector<int> labels;

  std::size_t size() const { return rows.size(); }

  /// Throws ContractViolation if the documented invariants do not hold.
  void validate() const;

  bool operator==(const Dataset&) const = default;
};

/// Reads LIBSVM text (`label idx:val ...`, 1-based indices).
///
/// Labels may be encoded as {-1,+1}, {0,1} or {1,2}; they are remapped to
/// {-1,+1} with 0 -> -1 and 2 -> -1. Indices inside a line may appear in any
/// order and are sorted on load. `n` defaults to the largest index seen.
/// Text after '#' is ignored, as are blank lines.
Dataset parse_libsvm(std::istream& is, std::optional<std::size_t> n = std::nullopt);
Dataset load_libsvm(const std::string& path, std::optional<std::size_t> n = std::nullopt);

void write_libsvm(std::ostream& os, const Dataset& ds);

/// Parameters of the planted-hyperplane generator.
///
/// Recipe: a normal u ~ N(0, I_n) is drawn and normalized; each row
/// w_i ~ N(0, I_n) (dense); the label is sign(u'w_i + e_i / margin) with
/// e_i ~ N(0, 1) and sign(0) = +1. An infinite margin gives noise-free labels,
/// so the data is separable by u. The u draw comes first from a
/// std::mt19937_64 seeded with `seed`, then the rows in order.
struct SyntheticSpec {
  std::size_t n = 2;
  std::size_t samples = 4;
  double margin = 1.0;
  std::uint64_t seed = 1;
};

Dataset make_synthetic(const SyntheticSpec& spec);

/// The planted normal used by make_synthetic for this spec.
Vector synthetic_normal(const SyntheticSpec& spec);

}  // namespace ansps

#endif
