#include "hiernote/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hiernote/common.hpp"
#include "hiernote/rng.hpp"
#include <nlohmann/json.hpp>

namespace hiernote {

using nlohmann::json;

double auroc(const std::vector<Prediction>& predictions) {
  long positives = 0, negatives = 0;
  for (const auto& p : predictions) {
    (p.label_true == Label::TTYes ? positives : negatives)++;
  }
  if (positives == 0 || negatives == 0) {
    throw std::invalid_argument(
        "auroc undefined: need at least one positive and one negative example");
  }

  // Midrank formulation: AUC = (sum of positive ranks - P(P+1)/2) / (P*N),
  // which equals P(score+ > score-) + 0.5 * P(tie).
  std::vector<std::size_t> order(predictions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return predictions[a].score < predictions[b].score;
  });

  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() &&
           predictions[order[j]].score == predictions[order[i]].score) {
      ++j;
    }
    double midrank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
    for (std::size_t k = i; k < j; ++k) {
      if (predictions[order[k]].label_true == Label::TTYes) {
        positive_rank_sum += midrank;
      }
    }
    i = j;
  }

  double p = static_cast<double>(positives);
  double n = static_cast<double>(negatives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * n);
}

namespace {

ClassScores class_scores(long tp, long fp, long fn, long support, bool& zero_division) {
  ClassScores s;
  s.support = support;
  if (tp + fp == 0) {
    s.precision = 0.0;
    zero_division = true;
  } else {
    s.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  if (tp + fn == 0) {
    s.recall = 0.0;
    zero_division = true;
  } else {
    s.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
  if (s.precision + s.recall == 0.0) {
    s.f1 = 0.0;
  } else {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

}  // namespace

MacroScores macro_scores(const std::vector<Prediction>& predictions) {
  if (predictions.empty()) {
    throw std::invalid_argument("macro_scores on empty prediction set");
  }
  MacroScores m;
  for (const auto& p : predictions) {
    bool truth = p.label_true == Label::TTYes;
    bool pred = p.label_pred == Label::TTYes;
    if (truth && pred) m.confusion.tp++;
    else if (!truth && pred) m.confusion.fp++;
    else if (truth && !pred) m.confusion.fn++;
    else m.confusion.tn++;
  }
  const auto& c = m.confusion;
  m.tt_yes = class_scores(c.tp, c.fp, c.fn, c.tp + c.fn, m.zero_division);
  // For TT-No the "true positives" are the true negatives of TT-Yes.
  m.tt_no = class_scores(c.tn, c.fn, c.fp, c.tn + c.fp, m.zero_division);
  m.macro_f1 = 0.5 * (m.tt_no.f1 + m.tt_yes.f1);
  m.macro_precision = 0.5 * (m.tt_no.precision + m.tt_yes.precision);
  m.macro_recall = 0.5 * (m.tt_no.recall + m.tt_yes.recall);
  return m;
}

RunMetrics run_metrics(const std::vector<Prediction>& predictions) {
  RunMetrics r;
  r.auroc = auroc(predictions);
  MacroScores m = macro_scores(predictions);
  r.macro_f1 = m.macro_f1;
  r.macro_precision = m.macro_precision;
  r.macro_recall = m.macro_recall;
  return r;
}

MetricsReport report_from_predictions(const std::string& model,
                                      const std::vector<Prediction>& predictions) {
  MetricsReport rep;
  rep.model = model;
  MacroScores m = macro_scores(predictions);
  rep.auroc = auroc(predictions);
  rep.macro_f1 = m.macro_f1;
  rep.macro_precision = m.macro_precision;
  rep.macro_recall = m.macro_recall;
  rep.tt_no = m.tt_no;
  rep.tt_yes = m.tt_yes;
  rep.confusion = m.confusion;
  rep.zero_division = m.zero_division;
  rep.n_runs = 1;
  rep.per_run = {RunMetrics{rep.auroc, rep.macro_f1, rep.macro_precision, rep.macro_recall, false}};
  return rep;
}

MetricsReport median_report(const std::string& model, const std::vector<RunMetrics>& runs) {
  if (runs.empty()) throw std::invalid_argument("median_report on zero runs");
  MetricsReport rep;
  rep.model = model;
  rep.per_run = runs;
  rep.n_runs = static_cast<int>(runs.size());
  std::vector<double> a, f, p, r;
  for (const auto& run : runs) {
    if (run.diverged) {
      rep.diverged_runs++;
      continue;
    }
    a.push_back(run.auroc);
    f.push_back(run.macro_f1);
    p.push_back(run.macro_precision);
    r.push_back(run.macro_recall);
  }
  if (a.empty()) throw DivergenceError("all runs diverged for model " + model);
  // Median is taken per metric, not per run.
  rep.auroc = median(a);
  rep.macro_f1 = median(f);
  rep.macro_precision = median(p);
  rep.macro_recall = median(r);
  return rep;
}

std::string to_string(DummyKind kind) {
  switch (kind) {
    case DummyKind::Prior: return "prior";
    case DummyKind::Stratified: return "stratified";
    case DummyKind::Uniform: return "uniform";
  }
  return "prior";
}

DummyKind dummy_kind_from_string(const std::string& s) {
  if (s == "prior") return DummyKind::Prior;
  if (s == "stratified") return DummyKind::Stratified;
  if (s == "uniform") return DummyKind::Uniform;
  throw ConfigError("unknown dummy kind: " + s);
}

std::vector<Prediction> dummy_predict(const DummyModel& model, const PatientView& test) {
  std::vector<Prediction> out;
  out.reserve(test.size());
  Rng rng(model.seed);
  double p_yes = model.train_positive_rate;
  Label majority = p_yes >= 0.5 ? Label::TTYes : Label::TTNo;
  double majority_prior = majority == Label::TTYes ? p_yes : 1.0 - p_yes;

  for (const Patient* patient : test) {
    Prediction pred;
    pred.patient_id = patient->patient_id;
    pred.label_true = patient->label;
    switch (model.kind) {
      case DummyKind::Prior:
        pred.label_pred = majority;
        pred.score = majority_prior;
        break;
      case DummyKind::Stratified: {
        bool yes = rng.bernoulli(p_yes);
        pred.label_pred = yes ? Label::TTYes : Label::TTNo;
        pred.score = yes ? p_yes : 1.0 - p_yes;
        break;
      }
      case DummyKind::Uniform: {
        bool yes = rng.bernoulli(0.5);
        pred.label_pred = yes ? Label::TTYes : Label::TTNo;
        pred.score = 0.5;
        break;
      }
    }
    out.push_back(std::move(pred));
  }
  return out;
}

double positive_rate(const PatientView& patients) {
  if (patients.empty()) return 0.0;
  long yes = 0;
  for (const Patient* p : patients) {
    if (p->label == Label::TTYes) yes++;
  }
  return static_cast<double>(yes) / static_cast<double>(patients.size());
}

std::string predictions_to_jsonl(const std::vector<Prediction>& predictions) {
  std::ostringstream out;
  for (const auto& p : predictions) {
    json j;
    j["patient_id"] = p.patient_id;
    j["score"] = p.score;
    j["label_pred"] = to_string(p.label_pred);
    j["label_true"] = to_string(p.label_true);
    out << j.dump() << "\n";
  }
  return out.str();
}

std::vector<Prediction> predictions_from_jsonl(const std::string& text,
                                               const std::string& origin) {
  std::vector<Prediction> preds;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
      Prediction p;
      p.patient_id = j.at("patient_id").get<std::string>();
      p.score = j.at("score").get<double>();
      p.label_pred = label_from_string(j.at("label_pred").get<std::string>());
      p.label_true = label_from_string(j.at("label_true").get<std::string>());
      if (p.score < 0.0 || p.score > 1.0) throw ConfigError("score out of [0,1]");
      preds.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw ParseError(origin, line_no, e.what());
    } catch (const ConfigError& e) {
      throw ParseError(origin, line_no, e.what());
    }
  }
  return preds;
}

void save_predictions(const std::vector<Prediction>& predictions, const std::string& path) {
  write_text_file(path, predictions_to_jsonl(predictions));
}

std::vector<Prediction> load_predictions(const std::string& path) {
  return predictions_from_jsonl(read_text_file(path), path);
}

namespace {

json class_scores_json(const ClassScores& s) {
  return json{{"precision", s.precision},
              {"recall", s.recall},
              {"f1", s.f1},
              {"support", s.support}};
}

}  // namespace

std::string metrics_report_to_json(const MetricsReport& report) {
  json j;
  j["model"] = report.model;
  j["auroc"] = report.auroc;
  j["macro_f1"] = report.macro_f1;
  j["macro_precision"] = report.macro_precision;
  j["macro_recall"] = report.macro_recall;
  j["per_class"] = {{"TT-No", class_scores_json(report.tt_no)},
                    {"TT-Yes", class_scores_json(report.tt_yes)}};
  j["confusion_matrix"] = {{"tp", report.confusion.tp},
                           {"fp", report.confusion.fp},
                           {"fn", report.confusion.fn},
                           {"tn", report.confusion.tn}};
  j["n_runs"] = report.n_runs;
  json runs = json::array();
  for (const auto& r : report.per_run) {
    runs.push_back(json{{"auroc", r.auroc},
                        {"macro_f1", r.macro_f1},
                        {"macro_precision", r.macro_precision},
                        {"macro_recall", r.macro_recall},
                        {"diverged", r.diverged}});
  }
  j["per_run"] = runs;
  j["zero_division"] = report.zero_division;
  j["diverged_runs"] = report.diverged_runs;
  return j.dump(2) + "\n";
}

void save_metrics_report(const MetricsReport& report, const std::string& path) {
  write_text_file(path, metrics_report_to_json(report));
}

}  // namespace hiernote
