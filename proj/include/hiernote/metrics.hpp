#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hiernote/corpus.hpp"

namespace hiernote {

struct Prediction {
  std::string patient_id;
  double score = 0.0;  // probability of TT-Yes, in [0, 1]
  Label label_pred = Label::TTNo;
  Label label_true = Label::TTNo;
};

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long support = 0;
};

// Positive class is TT-Yes.
struct ConfusionMatrix {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;
};

struct MacroScores {
  double macro_f1 = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  ClassScores tt_no;
  ClassScores tt_yes;
  ConfusionMatrix confusion;
  bool zero_division = false;  // some precision/recall hit an empty denominator
};

struct RunMetrics {
  double auroc = 0.0;
  double macro_f1 = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  bool diverged = false;
};

struct MetricsReport {
  std::string model;
  double auroc = 0.0;
  double macro_f1 = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  ClassScores tt_no;   // per-class scores of the reporting run (single run)
  ClassScores tt_yes;  // or of the median run when aggregated
  ConfusionMatrix confusion;
  int n_runs = 1;
  std::vector<RunMetrics> per_run;
  bool zero_division = false;
  int diverged_runs = 0;
};

// Mann-Whitney AUROC with half credit for ties. Throws std::invalid_argument
// when predictions contain a single class.
double auroc(const std::vector<Prediction>& predictions);

// Per-class precision/recall/F1 from the confusion matrix; zero denominators
// score 0 and raise the zero_division flag. Macro scores are unweighted means
// over the two classes.
MacroScores macro_scores(const std::vector<Prediction>& predictions);

RunMetrics run_metrics(const std::vector<Prediction>& predictions);

// Single-run report with per-class detail.
MetricsReport report_from_predictions(const std::string& model,
                                      const std::vector<Prediction>& predictions);

// Per-metric median over runs; diverged runs are excluded from the medians
// but retained in per_run.
MetricsReport median_report(const std::string& model, const std::vector<RunMetrics>& runs);

enum class DummyKind { Prior, Stratified, Uniform };

std::string to_string(DummyKind kind);
DummyKind dummy_kind_from_string(const std::string& s);

struct DummyModel {
  DummyKind kind = DummyKind::Prior;
  double train_positive_rate = 0.5;  // TT-Yes fraction of the training set
  std::uint64_t seed = 0;
};

// Prior: constant majority label, constant score. Stratified/Uniform: labels
// sampled from the train / uniform distribution, score equal to the sampled
// class prior so AUROC is well defined for all three.
std::vector<Prediction> dummy_predict(const DummyModel& model, const PatientView& test);

double positive_rate(const PatientView& patients);

std::string predictions_to_jsonl(const std::vector<Prediction>& predictions);
std::vector<Prediction> predictions_from_jsonl(const std::string& text, const std::string& origin);
void save_predictions(const std::vector<Prediction>& predictions, const std::string& path);
std::vector<Prediction> load_predictions(const std::string& path);

std::string metrics_report_to_json(const MetricsReport& report);
void save_metrics_report(const MetricsReport& report, const std::string& path);

}  // namespace hiernote
