#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fedaux/types.hpp"

namespace fedaux {

// Frozen feature extractor standing in for the pretrained h0. All kinds are
// deterministic: repeated application to the same input yields identical
// output, regardless of call order or thread.
class FeatureExtractor {
 public:
  enum class Kind { Identity, RandomProjection, FileBacked };

  static FeatureExtractor identity();
  // Fixed Gaussian projection matrix derived from (seed, input_dim, output_dim),
  // scaled by 1/sqrt(output_dim); built lazily on first use and frozen.
  static FeatureExtractor random_projection(int output_dim, std::uint64_t seed);
  // Rows precomputed in an FVEC1 file; extract() takes a single-element vector
  // holding the row index (see extract_row).
  static FeatureExtractor file_backed(const std::string& path);

  Kind kind() const { return kind_; }
  int output_dim() const;

  Vector extract(const Vector& raw) const;
  Vector extract_row(std::size_t index) const;  // FileBacked only

 private:
  FeatureExtractor() = default;

  Kind kind_ = Kind::Identity;
  int proj_output_dim_ = 64;
  std::uint64_t proj_seed_ = 0;
  // lazily built projection, keyed by input dim; immutable once set
  mutable std::shared_ptr<const Matrix> projection_;
  std::shared_ptr<const Matrix> table_;  // FileBacked rows
};

// Output dimension = input + 1; first coordinate is the bias constant 1.0.
Vector append_bias(const Vector& features);
Matrix append_bias(const Matrix& rows);

struct NormalizationConstant {
  double value = 1.0;
};

// value = max Euclidean norm over the reference rows. Throws if the reference
// is empty or all-zero.
NormalizationConstant fit_normalizer(const Matrix& reference_rows);

// features / c. Reference-set members end up with norm <= 1.
Vector normalize(const Vector& features, const NormalizationConstant& c);
Matrix normalize(const Matrix& rows, const NormalizationConstant& c);

// For inputs outside the reference set (distillation, test): divide by c,
// then clip to the unit ball so the norm-1 assumption keeps holding.
Vector normalize_clip(const Vector& features, const NormalizationConstant& c);
Matrix normalize_clip(const Matrix& rows, const NormalizationConstant& c);

// --- FVEC1 / FLAB1 file formats -------------------------------------------
// FVEC1: magic "FVEC1", u32 LE row count, u32 LE dimension, row-major f32 LE.
// FLAB1: magic "FLAB1", u32 LE count, u16 LE labels.

void write_fvec(const std::string& path, const Matrix& rows);
Matrix read_fvec(const std::string& path);

void write_flab(const std::string& path, const std::vector<int>& labels);
std::vector<int> read_flab(const std::string& path);

}  // namespace fedaux
