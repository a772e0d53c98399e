#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fedaux/erm.hpp"
#include "fedaux/features.hpp"
#include "fedaux/partition.hpp"
#include "fedaux/privacy.hpp"
#include "fedaux/rng.hpp"
#include "fedaux/types.hpp"

namespace fedaux {

enum class Method { FedAuxFdp, FedD, FedAvg };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct RoundConfig {
  int class_count = 10;
  double lambda_class = 0.01;
  double lambda_score = 0.01;
  double lambda_server = 1e-4;
  PrivacyParams dp_class;   // class-head mechanism
  PrivacyParams dp_score;   // scoring-head mechanism
  FitOptions fit_options;   // client and server fits
  std::uint64_t round_seed = 0;
};

// Unsanitized per-client training products. Computing these is the expensive
// part of a round; sanitization and everything after it can be re-assembled
// for several (eps, delta) settings on top of the same fits.
struct ClientState {
  FitResult class_fit;
  FitResult scoring_fit;
  NormalizationConstant class_norm;
  NormalizationConstant scoring_norm;
  std::size_t n_local = 0;
  std::size_t n_scoring = 0;  // |D_i| + |D^-|
};

// Sanitized heads and their outputs on the distillation set.
struct ClientArtifacts {
  HeadParams scoring_head;
  HeadParams class_head;
  PrivacySpend spend;
  CertaintyScores scores;
  Matrix soft_labels;  // |D_distill| x C
};

struct ServerModel {
  HeadParams head;
  NormalizationConstant normalizer;  // fit on the public distillation set
};

struct MetricsRecord {
  Method method = Method::FedAuxFdp;
  double accuracy = 0.0;
  double eps_total = 0.0;
  double delta_total = 0.0;
  std::size_t fallback_count = 0;
  double wall_ms = 0.0;
};

struct RoundResult {
  std::vector<MetricsRecord> metrics;             // one per requested method
  std::vector<PrivacySpend> per_client_spend;     // FedAUXfdp ledger view
};

// --- spec-named client operations ------------------------------------------

// Binary scoring head on local-vs-negative features, normalized over the
// union, then sanitized with the binary bound at N = |D_i| + |D^-|.
struct ScoringHead {
  HeadParams head;
  NormalizationConstant norm;
  PrivacySpend::Record spend{0.0, 0.0, "scores"};
  FitResult fit;  // pre-sanitization fit, kept for diagnostics
};
ScoringHead client_train_scoring(const Dataset& local, const Matrix& negatives,
                                 double lambda, const PrivacyParams& dp, RngStream& stream,
                                 const FitOptions& options = {});

// Multinomial class head over the global class count, sanitized with the
// Theorem bound at N = |D_i|.
struct ClassHead {
  HeadParams head;
  NormalizationConstant norm;
  PrivacySpend::Record spend{0.0, 0.0, "classes"};
  FitResult fit;
};
ClassHead client_train_classifier(const Dataset& local, double lambda, int class_count,
                                  const PrivacyParams& dp, RngStream& stream,
                                  const FitOptions& options = {});

// Scores and soft labels on the distillation set (post-processing of the
// already-sanitized heads).
std::pair<CertaintyScores, Matrix> client_emit(const HeadParams& scoring_head,
                                               const NormalizationConstant& scoring_norm,
                                               const HeadParams& class_head,
                                               const NormalizationConstant& class_norm,
                                               const Matrix& distill);

// --- aggregation ------------------------------------------------------------

// Eq-style certainty weighting: row(x) = sum_i f_i(x) g_i(x) / sum_i f_i(x).
// Denominators below 1e-12 fall back to the unweighted mean; the count of such
// points is reported.
SoftLabelMatrix aggregate_weighted(const std::vector<ClientArtifacts>& clients,
                                   std::size_t* fallback_count = nullptr);
SoftLabelMatrix aggregate_unweighted(const std::vector<ClientArtifacts>& clients);

// Size-weighted average of client heads.
ServerModel fedavg_aggregate(const std::vector<HeadParams>& heads,
                             const std::vector<std::size_t>& sizes,
                             const NormalizationConstant& server_norm);

// Soft-label cross-entropy fit of a logistic head on the frozen-extractor
// distillation features.
ServerModel server_distill(const SoftLabelMatrix& supervision, const Matrix& distill,
                           double lambda_server, const FitOptions& options = {});

// Fraction of test points whose argmax matches the label; ties break to the
// lowest class index. Test features go through the server normalizer.
double evaluate(const ServerModel& model, const Dataset& test);

// --- round orchestration ----------------------------------------------------

std::vector<Dataset> split_by_assignment(const Dataset& train, const Assignment& assignment);

std::vector<ClientState> train_clients(const std::vector<Dataset>& locals,
                                       const Matrix& negatives, const RoundConfig& config);

// Sanitize + emit + aggregate + distill + evaluate for each method, reusing
// the given fits. Noise substreams are derived as
// hash(round_seed, client_id, mechanism label), so distinct clients and
// mechanisms never share draws, and re-assembly with a different (eps, delta)
// scales the same unit normals.
RoundResult assemble_round(const std::vector<ClientState>& states,
                           const std::vector<Dataset>& locals, const AuxiliarySplit& aux,
                           const Dataset& test, const RoundConfig& config,
                           const std::vector<Method>& methods);

RoundResult run_round(const Dataset& train, const Assignment& assignment,
                      const AuxiliarySplit& aux, const Dataset& test,
                      const RoundConfig& config, const std::vector<Method>& methods);

}  // namespace fedaux
