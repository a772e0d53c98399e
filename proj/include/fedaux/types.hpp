#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fedaux {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Dense feature vector; by convention the first coordinate is the bias
// constant once a pipeline has applied append_bias().
struct FeatureVector {
  Vector values;

  FeatureVector() = default;
  explicit FeatureVector(Vector v) : values(std::move(v)) {}

  Eigen::Index dim() const { return values.size(); }
  double norm() const { return values.norm(); }
};

struct LabeledExample {
  FeatureVector features;
  int label = 0;  // zero-based internally; one-based only in external notation
};

struct Dataset {
  std::vector<LabeledExample> examples;
  int class_count = 0;

  std::size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }

  void validate() const {
    if (class_count < 1) throw std::invalid_argument("Dataset: class_count must be >= 1");
    for (const auto& ex : examples) {
      if (ex.label < 0 || ex.label >= class_count)
        throw std::invalid_argument("Dataset: label " + std::to_string(ex.label) +
                                    " outside [0, " + std::to_string(class_count) + ")");
    }
  }

  // Row-major view of the features, one row per example.
  Matrix feature_matrix() const {
    if (examples.empty()) return Matrix(0, 0);
    Matrix X(static_cast<Eigen::Index>(examples.size()), examples[0].features.dim());
    for (Eigen::Index i = 0; i < X.rows(); ++i)
      X.row(i) = examples[static_cast<std::size_t>(i)].features.values.transpose();
    return X;
  }

  std::vector<int> labels() const {
    std::vector<int> y(examples.size());
    for (std::size_t i = 0; i < examples.size(); ++i) y[i] = examples[i].label;
    return y;
  }
};

// Unlabeled split of the public auxiliary pool: negatives feed the scoring
// regressions, distill carries the ensemble supervision.
struct AuxiliarySplit {
  Matrix negatives;  // |D^-| x d
  Matrix distill;    // |D_distill| x d
  double split_fraction = 0.8;  // distill share of the pool
};

// Trainable parameter block: C rows x (p+1) columns, first column biases.
// Binary heads are stored as a single row.
struct HeadParams {
  Matrix matrix;

  HeadParams() = default;
  explicit HeadParams(Matrix m) : matrix(std::move(m)) {}

  Eigen::Index rows() const { return matrix.rows(); }
  Eigen::Index cols() const { return matrix.cols(); }
  bool is_binary() const { return matrix.rows() == 1; }

  void validate() const {
    if (!matrix.allFinite()) throw std::invalid_argument("HeadParams: non-finite entry");
  }
};

struct PrivacyParams {
  double epsilon = 0.0;
  double delta = 0.0;
  bool enabled = false;

  static PrivacyParams disabled() { return {}; }
  static PrivacyParams make(double eps, double delta) {
    PrivacyParams p{eps, delta, true};
    p.validate();
    return p;
  }

  void validate() const {
    if (!enabled) return;
    if (!(epsilon > 0.0)) throw std::invalid_argument("PrivacyParams: epsilon must be > 0");
    if (!(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("PrivacyParams: delta must be in (0,1)");
  }
};

// |D_distill| x C matrix whose rows are probability vectors.
struct SoftLabelMatrix {
  Matrix rows;

  Eigen::Index points() const { return rows.rows(); }
  Eigen::Index classes() const { return rows.cols(); }

  void validate(double tol = 1e-9) const {
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      if ((rows.row(i).array() < 0.0).any())
        throw std::invalid_argument("SoftLabelMatrix: negative entry in row " + std::to_string(i));
      double s = rows.row(i).sum();
      if (std::abs(s - 1.0) > tol)
        throw std::invalid_argument("SoftLabelMatrix: row " + std::to_string(i) +
                                    " sums to " + std::to_string(s));
    }
  }
};

// Per-client sigmoid certainty scores over the distillation set, in (0,1).
struct CertaintyScores {
  Vector values;

  void validate() const {
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      double v = values[i];
      if (!(v > 0.0 && v < 1.0))
        throw std::invalid_argument("CertaintyScores: score outside (0,1)");
    }
  }
};

// Ordered (epsilon, delta, label) records, one per mechanism invocation.
struct PrivacySpend {
  struct Record {
    double epsilon;
    double delta;
    std::string mechanism;
  };
  std::vector<Record> records;

  void add(double eps, double delta, std::string mechanism) {
    records.push_back({eps, delta, std::move(mechanism)});
  }
};

}  // namespace fedaux
