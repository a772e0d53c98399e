#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fedaux/types.hpp"

namespace fedaux {

// Regularized multinomial logistic regression problem over normalized,
// bias-augmented features:
//   J(B) = (1/N) sum_i -log p_{y_i}(B, x_i) + (lambda/2) ||B||_2^2
// with p_k = softmax(B x). The mean multiplies only the loss term, and the
// bias column is regularized along with the rest.
struct ErmProblem {
  Matrix features;         // N x (p+1)
  std::vector<int> labels; // in [0, class_count)
  double lambda = 0.01;
  int class_count = 2;

  std::size_t size() const { return labels.size(); }
  void validate() const;
};

struct FitResult {
  HeadParams params;
  double final_gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct FitOptions {
  double tolerance = 1e-8;   // on the gradient norm
  int max_iterations = 1000;
  int memory = 10;           // L-BFGS history
};

double objective(const HeadParams& params, const ErmProblem& problem);
Matrix gradient(const HeadParams& params, const ErmProblem& problem);

// Deterministic quasi-Newton minimization: zero initialization, L-BFGS with
// strong-Wolfe line search. The lambda-strong convexity of the objective makes
// the minimizer unique.
FitResult fit(const ErmProblem& problem, const FitOptions& options = {});

Vector predict_proba(const HeadParams& params, const Vector& features);
Matrix predict_proba(const HeadParams& params, const Matrix& rows);

// Binary head (single parameter row), sigmoid cross-entropy over
// positives (label 1) and negatives (label 0).
struct BinaryProblem {
  Matrix positives;  // rows
  Matrix negatives;  // rows
  double lambda = 0.01;

  std::size_t size() const {
    return static_cast<std::size_t>(positives.rows() + negatives.rows());
  }
  void validate() const;
};

double binary_objective(const HeadParams& params, const BinaryProblem& problem);
Vector binary_gradient(const HeadParams& params, const BinaryProblem& problem);
FitResult fit_binary(const BinaryProblem& problem, const FitOptions& options = {});

double score_binary(const HeadParams& params, const Vector& features);
Vector score_binary(const HeadParams& params, const Matrix& rows);

// Soft-target cross-entropy on a logistic head (server distillation):
//   J(B) = (1/M) sum_x sum_k -Y[x,k] log p_k(B, x) + (lambda/2) ||B||^2
struct SoftTargetProblem {
  Matrix features;  // M x (p+1)
  Matrix targets;   // M x C, rows are probability vectors
  double lambda = 1e-4;

  void validate() const;
};

double soft_objective(const HeadParams& params, const SoftTargetProblem& problem);
Matrix soft_gradient(const HeadParams& params, const SoftTargetProblem& problem);
FitResult fit_soft(const SoftTargetProblem& problem, const FitOptions& options = {});

// Generic deterministic L-BFGS core (exposed for reuse and testing).
// fg(x, grad_out) returns the objective value and fills the gradient.
struct LbfgsReport {
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};
LbfgsReport lbfgs_minimize(const std::function<double(const Vector&, Vector&)>& fg,
                           Vector& x, const FitOptions& options);

}  // namespace fedaux
