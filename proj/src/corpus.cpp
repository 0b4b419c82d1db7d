#include "hiernote/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hiernote/common.hpp"
#include "hiernote/lexicon.hpp"
#include "hiernote/rng.hpp"
#include "hiernote/tokenizer.hpp"
#include <nlohmann/json.hpp>

namespace hiernote {

using nlohmann::json;

std::string to_string(Label label) { return label == Label::TTYes ? "TT-Yes" : "TT-No"; }

Label label_from_string(const std::string& s) {
  if (s == "TT-Yes") return Label::TTYes;
  if (s == "TT-No") return Label::TTNo;
  throw ConfigError("unknown label: '" + s + "' (expected TT-Yes or TT-No)");
}

namespace {

bool note_time_less(const Note& a, const Note& b) {
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  return a.note_id < b.note_id;
}

}  // namespace

void validate_corpus(Corpus& corpus, const std::string& origin) {
  if (corpus.patients.empty()) throw ConfigError(origin + ": empty corpus");
  std::unordered_set<std::string> patient_ids;
  std::unordered_set<std::string> note_ids;
  for (auto& patient : corpus.patients) {
    if (!patient_ids.insert(patient.patient_id).second) {
      throw ConfigError(origin + ": duplicate patient_id '" + patient.patient_id + "'");
    }
    if (patient.notes.empty()) {
      throw ConfigError(origin + ": patient '" + patient.patient_id + "' has no notes");
    }
    std::sort(patient.notes.begin(), patient.notes.end(), note_time_less);
    for (const auto& note : patient.notes) {
      if (note.text.empty()) {
        throw ConfigError(origin + ": note '" + note.note_id + "' has empty text");
      }
      if (note.timestamp < 0) {
        throw ConfigError(origin + ": note '" + note.note_id + "' has negative timestamp");
      }
      if (note.patient_id != patient.patient_id) {
        throw ConfigError(origin + ": note '" + note.note_id + "' carries patient_id '" +
                          note.patient_id + "' inside patient '" + patient.patient_id + "'");
      }
      if (!note_ids.insert(note.note_id).second) {
        throw ConfigError(origin + ": duplicate note_id '" + note.note_id + "'");
      }
    }
  }
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::ostringstream out;
  if (!corpus.metadata.empty()) {
    json meta;
    meta["corpus_metadata"] = corpus.metadata;
    out << meta.dump() << "\n";
  }
  for (const auto& patient : corpus.patients) {
    json notes = json::array();
    for (const auto& note : patient.notes) {
      notes.push_back(json{{"note_id", note.note_id},
                           {"timestamp", note.timestamp},
                           {"text", note.text}});
    }
    json j{{"patient_id", patient.patient_id},
           {"label", to_string(patient.label)},
           {"notes", notes}};
    out << j.dump() << "\n";
  }
  return out.str();
}

Corpus corpus_from_jsonl(const std::string& text, const std::string& origin) {
  Corpus corpus;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(origin, line_no, std::string("invalid JSON: ") + e.what());
    }
    try {
      if (line_no == 1 && j.contains("corpus_metadata")) {
        corpus.metadata = j.at("corpus_metadata").get<std::map<std::string, std::string>>();
        continue;
      }
      Patient patient;
      patient.patient_id = j.at("patient_id").get<std::string>();
      patient.label = label_from_string(j.at("label").get<std::string>());
      for (const auto& n : j.at("notes")) {
        Note note;
        note.note_id = n.at("note_id").get<std::string>();
        note.timestamp = n.at("timestamp").get<std::int64_t>();
        note.text = n.at("text").get<std::string>();
        note.patient_id = patient.patient_id;
        patient.notes.push_back(std::move(note));
      }
      corpus.patients.push_back(std::move(patient));
    } catch (const json::exception& e) {
      throw ParseError(origin, line_no, e.what());
    } catch (const ConfigError& e) {
      throw ParseError(origin, line_no, e.what());
    }
  }
  validate_corpus(corpus, origin);
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  return corpus_from_jsonl(read_text_file(path), path);
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  write_text_file(path, corpus_to_jsonl(corpus));
}

Split split_patients(const Corpus& corpus, SplitRatios ratios, std::uint64_t seed) {
  double sum = ratios.train + ratios.valid + ratios.test;
  if (std::fabs(sum - 1.0) > 1e-9) throw ConfigError("split ratios must sum to 1");
  auto n = corpus.patients.size();
  if (n < 3) throw ConfigError("need at least 3 patients for a three-way split");

  auto n_train = static_cast<std::size_t>(std::floor(ratios.train * static_cast<double>(n)));
  auto n_valid = static_cast<std::size_t>(std::floor(ratios.valid * static_cast<double>(n)));
  auto n_test = static_cast<std::size_t>(std::floor(ratios.test * static_cast<double>(n)));
  // Leftover patients (at most two) go to valid, then test.
  std::size_t leftover = n - n_train - n_valid - n_test;
  if (leftover >= 1) n_valid++;
  if (leftover >= 2) n_test++;
  if (n_train == 0 || n_valid == 0 || n_test == 0) {
    throw ConfigError("too few patients for non-empty partitions");
  }

  std::vector<std::string> ids;
  ids.reserve(n);
  for (const auto& p : corpus.patients) ids.push_back(p.patient_id);
  Rng rng(seed);
  rng.shuffle(ids);

  Split split;
  split.ratios = ratios;
  split.seed = seed;
  split.train.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_train));
  split.valid.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_train),
                     ids.begin() + static_cast<std::ptrdiff_t>(n_train + n_valid));
  split.test.assign(ids.begin() + static_cast<std::ptrdiff_t>(n_train + n_valid), ids.end());
  return split;
}

SplitViews apply_split(const Corpus& corpus, const Split& split) {
  std::unordered_map<std::string, const Patient*> by_id;
  for (const auto& p : corpus.patients) by_id[p.patient_id] = &p;
  auto take = [&](const std::vector<std::string>& ids) {
    PatientView view;
    view.reserve(ids.size());
    for (const auto& id : ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw ConfigError("split references unknown patient_id '" + id + "'");
      view.push_back(it->second);
    }
    return view;
  };
  SplitViews views;
  views.train = take(split.train);
  views.valid = take(split.valid);
  views.test = take(split.test);
  std::size_t covered = views.train.size() + views.valid.size() + views.test.size();
  if (covered != corpus.patients.size()) {
    throw ConfigError("split does not cover the corpus exactly");
  }
  return views;
}

void save_split(const Split& split, const std::string& path) {
  json j{{"train", split.train},
         {"valid", split.valid},
         {"test", split.test},
         {"ratios", {split.ratios.train, split.ratios.valid, split.ratios.test}},
         {"seed", split.seed}};
  write_text_file(path, j.dump(2) + "\n");
}

Split load_split(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
    Split split;
    split.train = j.at("train").get<std::vector<std::string>>();
    split.valid = j.at("valid").get<std::vector<std::string>>();
    split.test = j.at("test").get<std::vector<std::string>>();
    auto r = j.at("ratios").get<std::vector<double>>();
    if (r.size() != 3) throw ConfigError("ratios must have three entries");
    split.ratios = {r[0], r[1], r[2]};
    split.seed = j.at("seed").get<std::uint64_t>();
    return split;
  } catch (const json::exception& e) {
    throw ParseError(path, 0, e.what());
  }
}

namespace {

// Longest first; ties resolved toward the later note, then the greater id.
bool selection_preferred(const Note& a, std::size_t a_tokens, const Note& b,
                         std::size_t b_tokens) {
  if (a_tokens != b_tokens) return a_tokens > b_tokens;
  if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
  return a.note_id > b.note_id;
}

}  // namespace

const Note& select_single_note(const Patient& patient) {
  if (patient.notes.empty()) throw std::invalid_argument("patient has no notes");
  const Note* best = &patient.notes.front();
  std::size_t best_tokens = count_tokens(best->text);
  for (std::size_t i = 1; i < patient.notes.size(); ++i) {
    const Note& candidate = patient.notes[i];
    std::size_t tokens = count_tokens(candidate.text);
    if (selection_preferred(candidate, tokens, *best, best_tokens)) {
      best = &candidate;
      best_tokens = tokens;
    }
  }
  return *best;
}

std::vector<const Note*> select_notes_ms(const Patient& patient, int n) {
  if (n < 1) throw std::invalid_argument("select_notes_ms: n must be >= 1");
  std::vector<std::pair<const Note*, std::size_t>> ranked;
  ranked.reserve(patient.notes.size());
  for (const auto& note : patient.notes) ranked.emplace_back(&note, count_tokens(note.text));
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return selection_preferred(*a.first, a.second, *b.first, b.second);
  });
  ranked.resize(std::min(ranked.size(), static_cast<std::size_t>(n)));
  std::vector<const Note*> selected;
  selected.reserve(ranked.size());
  for (const auto& [note, tokens] : ranked) selected.push_back(note);
  std::sort(selected.begin(), selected.end(),
            [](const Note* a, const Note* b) { return note_time_less(*a, *b); });
  return selected;
}

// ---------------------------------------------------------------------------
// Note-count distribution
// ---------------------------------------------------------------------------

namespace {

struct PmfStats {
  int mode = 0;
  int median = 0;
  double mean = 0.0;
  double mode_margin = 0.0;  // pmf(mode) minus the larger neighbour
};

PmfStats pmf_stats(const std::vector<double>& pmf) {
  PmfStats s;
  double best = -1.0, cum = 0.0, mean = 0.0;
  bool median_set = false;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    if (pmf[k] > best) {
      best = pmf[k];
      s.mode = static_cast<int>(k);
    }
    cum += pmf[k];
    mean += static_cast<double>(k) * pmf[k];
    if (!median_set && cum >= 0.5) {
      s.median = static_cast<int>(k);
      median_set = true;
    }
  }
  s.mean = mean;
  double left = s.mode > 0 ? pmf[static_cast<std::size_t>(s.mode) - 1] : 0.0;
  double right = static_cast<std::size_t>(s.mode) + 1 < pmf.size()
                     ? pmf[static_cast<std::size_t>(s.mode) + 1]
                     : 0.0;
  s.mode_margin = best - std::max(left, right);
  return s;
}

std::vector<double> poisson_pmf(double lambda, std::size_t len) {
  std::vector<double> pmf(len, 0.0);
  double p = std::exp(-lambda);
  for (std::size_t k = 0; k < len; ++k) {
    pmf[k] = p;
    p *= lambda / static_cast<double>(k + 1);
  }
  return pmf;
}

std::vector<double> geometric_pmf(double mean, std::size_t len) {
  std::vector<double> pmf(len, 0.0);
  double p = 1.0 / (1.0 + mean);
  double cur = p;
  for (std::size_t k = 0; k < len; ++k) {
    pmf[k] = cur;
    cur *= 1.0 - p;
  }
  return pmf;
}

}  // namespace

// A single shifted negative binomial cannot give the Figure-2B shape a stable
// mode: with median >> mode its pmf is near-geometric and the head
// probabilities differ by less than sampling noise at a few thousand
// patients. A two-component mixture (Poisson-like head for the short-stay
// pattern, geometric tail for long-running patients) hits mode and median
// exactly and keeps the mean close.
std::vector<double> note_count_distribution(const NoteCountTargets& targets) {
  if (targets.mode < 1 || targets.median < 1 || targets.mean < 1.0) {
    throw ConfigError("note-count targets must be >= 1");
  }
  if (targets.mode > targets.median || static_cast<double>(targets.median) > targets.mean + 1e-9) {
    throw ConfigError("note-count targets must satisfy mode <= median <= mean");
  }
  // Work with the unshifted distribution (counts - 1).
  int mode_t = targets.mode - 1;
  int median_t = targets.median - 1;
  double mean_t = targets.mean - 1.0;

  std::size_t len = static_cast<std::size_t>(std::max(64.0, mean_t * 12.0));
  double head_lambda = static_cast<double>(mode_t) + 0.35;
  auto head = poisson_pmf(head_lambda, len);

  double best_cost = 1e18;
  std::vector<double> best_pmf;
  for (int wi = 20; wi <= 100; ++wi) {
    double w = static_cast<double>(wi) / 100.0;
    for (double tail_mean = 0.25; tail_mean <= std::max(4.0, mean_t * 4.0); tail_mean *= 1.04) {
      auto tail = geometric_pmf(tail_mean, len);
      std::vector<double> pmf(len);
      for (std::size_t k = 0; k < len; ++k) pmf[k] = w * head[k] + (1.0 - w) * tail[k];
      PmfStats s = pmf_stats(pmf);
      if (s.mode != mode_t || s.mode_margin < 0.015) continue;
      double cost = 40.0 * std::abs(s.median - median_t) +
                    std::fabs(s.mean - mean_t) / std::max(1.0, mean_t) -
                    0.1 * std::min(s.mode_margin, 0.05);
      if (cost < best_cost) {
        best_cost = cost;
        best_pmf = pmf;
      }
    }
  }
  if (best_pmf.empty()) {
    throw ConfigError("could not fit a note-count distribution to the requested targets");
  }
  // Shift by one: index k holds P(note count == k), counts start at 1.
  std::vector<double> shifted(best_pmf.size() + 1, 0.0);
  for (std::size_t k = 0; k < best_pmf.size(); ++k) shifted[k + 1] = best_pmf[k];
  double total = std::accumulate(shifted.begin(), shifted.end(), 0.0);
  for (auto& v : shifted) v /= total;
  return shifted;
}

// ---------------------------------------------------------------------------
// Synthetic corpus generator
// ---------------------------------------------------------------------------

namespace {

// Deterministic CV-syllable filler words, skipping anything that collides
// with a topic keyword (collisions would corrupt the ablation ground truth).
std::vector<std::string> make_filler_vocab(int count) {
  static const char* kSyllables[] = {"ba", "be", "bi", "bo", "bu", "da", "de", "di", "do",
                                     "du", "ka", "ke", "ki", "ko", "ku", "la", "le", "li",
                                     "lo", "lu", "ma", "me", "mi", "mo", "mu", "na", "ne",
                                     "ni", "no", "nu", "pa", "pe", "pi", "po", "pu", "ra",
                                     "re", "ri", "ro", "ru", "sa", "se", "si", "so", "su",
                                     "ta", "te", "ti", "to", "tu"};
  constexpr int kNumSyllables = 50;
  std::unordered_set<std::string> blocked;
  for (const auto& topic : default_lexicons()) {
    blocked.insert(topic.keywords.begin(), topic.keywords.end());
  }
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(count));
  for (long i = 0; static_cast<int>(words.size()) < count; ++i) {
    std::string w = std::string(kSyllables[i % kNumSyllables]) +
                    kSyllables[(i / kNumSyllables) % kNumSyllables] +
                    kSyllables[(i / (kNumSyllables * kNumSyllables)) % kNumSyllables];
    if (blocked.count(w)) continue;
    words.push_back(std::move(w));
  }
  return words;
}

int sample_from_pmf(const std::vector<double>& pmf, Rng& rng) {
  double u = rng.uniform();
  double cum = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    cum += pmf[k];
    if (u < cum) return static_cast<int>(k);
  }
  return static_cast<int>(pmf.size() - 1);
}

int sample_poisson(double lambda, Rng& rng) {
  double limit = std::exp(-lambda);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.uniform();
  } while (p > limit);
  return k - 1;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::string zero_pad(long value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

Corpus generate_corpus(const GeneratorSpec& spec) {
  if (spec.n_patients < 1) throw ConfigError("generator: n_patients must be >= 1");
  if (spec.positive_rate < 0.0 || spec.positive_rate > 1.0) {
    throw ConfigError("generator: positive_rate must lie in [0,1]");
  }
  if (spec.vocab_noise < 1) throw ConfigError("generator: vocab_noise must be >= 1");
  if (spec.min_note_words < 1 || spec.max_note_words < spec.min_note_words) {
    throw ConfigError("generator: invalid note word-count range");
  }
  bool any_coupling = false;
  for (const auto& [topic, beta] : spec.topic_label_coupling) {
    if (!std::isfinite(beta)) throw ConfigError("generator: coupling for '" + topic + "' not finite");
    if (beta != 0.0) any_coupling = true;
  }
  if (!any_coupling && (spec.positive_rate <= 0.0 || spec.positive_rate >= 1.0)) {
    throw ConfigError("generator: degenerate spec (no coupling and positive_rate not in (0,1))");
  }
  for (const auto& [topic, prev] : spec.topic_prevalence) {
    if (prev < 0.0 || prev > 1.0) {
      throw ConfigError("generator: prevalence for '" + topic + "' outside [0,1]");
    }
    if (!find_topic(default_lexicons(), topic)) {
      throw ConfigError("generator: unknown topic '" + topic + "'");
    }
  }

  // Words appearing in more than one topic lexicon are never planted, so the
  // per-topic occurrence counts used for labels stay exact under matching.
  std::map<std::string, std::vector<std::string>> plantable;
  {
    std::map<std::string, int> word_topic_count;
    for (const auto& topic : default_lexicons()) {
      for (const auto& w : topic.keywords) word_topic_count[w]++;
    }
    for (const auto& topic : default_lexicons()) {
      if (!spec.topic_prevalence.count(topic.slug)) continue;
      std::vector<std::string> words;
      for (const auto& w : topic.keywords) {
        if (word_topic_count[w] == 1) words.push_back(w);
      }
      std::sort(words.begin(), words.end());
      if (words.empty()) throw ConfigError("generator: topic '" + topic.slug + "' has no unique keywords");
      plantable[topic.slug] = std::move(words);
    }
  }

  Rng rng(spec.seed);
  auto fillers = make_filler_vocab(spec.vocab_noise);
  auto note_count_pmf = note_count_distribution(spec.notes_per_patient);

  Corpus corpus;
  corpus.patients.reserve(static_cast<std::size_t>(spec.n_patients));
  std::vector<double> label_log_odds(static_cast<std::size_t>(spec.n_patients), 0.0);

  for (int pi = 0; pi < spec.n_patients; ++pi) {
    Patient patient;
    patient.patient_id = "p" + zero_pad(pi, 5);
    int n_notes = sample_from_pmf(note_count_pmf, rng);

    std::int64_t day = static_cast<std::int64_t>(rng.range(0, 3650));
    double log_odds = 0.0;
    for (int ni = 0; ni < n_notes; ++ni) {
      Note note;
      note.patient_id = patient.patient_id;
      note.note_id = patient.patient_id + "-n" + zero_pad(ni, 3);
      note.timestamp = day * 86400 + rng.range(0, 86399);
      day += static_cast<std::int64_t>(rng.range(1, 30));

      int n_words = rng.range(spec.min_note_words, spec.max_note_words);
      std::vector<std::string> words;
      words.reserve(static_cast<std::size_t>(n_words) + 8);
      for (int wi = 0; wi < n_words; ++wi) {
        words.push_back(fillers[rng.below(fillers.size())]);
      }
      for (const auto& [slug, prevalence] : spec.topic_prevalence) {
        if (prevalence <= 0.0 || !rng.bernoulli(prevalence)) continue;
        const auto& pool = plantable.at(slug);
        int occurrences = 1 + std::min(3, sample_poisson(spec.extra_keyword_rate, rng));
        for (int k = 0; k < occurrences; ++k) {
          words.push_back(pool[rng.below(pool.size())]);
        }
        auto it = spec.topic_label_coupling.find(slug);
        if (it != spec.topic_label_coupling.end()) {
          log_odds += it->second * static_cast<double>(occurrences);
        }
      }
      rng.shuffle(words);
      std::string text;
      for (std::size_t k = 0; k < words.size(); ++k) {
        if (k) text += ' ';
        text += words[k];
      }
      note.text = std::move(text);
      patient.notes.push_back(std::move(note));
    }
    label_log_odds[static_cast<std::size_t>(pi)] = log_odds;
    corpus.patients.push_back(std::move(patient));
  }

  // Calibrate the intercept so the marginal positive rate hits the target.
  double base_lo = -60.0, base_hi = 60.0;
  auto mean_rate = [&](double base) {
    double total = 0.0;
    for (double lo : label_log_odds) total += sigmoid(base + lo);
    return total / static_cast<double>(label_log_odds.size());
  };
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (base_lo + base_hi);
    if (mean_rate(mid) < spec.positive_rate) base_lo = mid;
    else base_hi = mid;
  }
  double base = 0.5 * (base_lo + base_hi);

  long n_positive = 0;
  for (std::size_t pi = 0; pi < corpus.patients.size(); ++pi) {
    bool yes = rng.bernoulli(sigmoid(base + label_log_odds[pi]));
    corpus.patients[pi].label = yes ? Label::TTYes : Label::TTNo;
    if (yes) n_positive++;
  }

  corpus.metadata["generator"] = "hiernote";
  corpus.metadata["generator_spec"] = generator_spec_to_json_text(spec);
  corpus.metadata["base_log_odds"] = std::to_string(base);
  corpus.metadata["realized_positive_rate"] =
      std::to_string(static_cast<double>(n_positive) / static_cast<double>(spec.n_patients));
  validate_corpus(corpus, "generated corpus");
  return corpus;
}

double realized_positive_rate(const Corpus& corpus) {
  if (corpus.patients.empty()) return 0.0;
  long yes = 0;
  for (const auto& p : corpus.patients) {
    if (p.label == Label::TTYes) yes++;
  }
  return static_cast<double>(yes) / static_cast<double>(corpus.patients.size());
}

GeneratorSpec generator_spec_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin, 0, std::string("invalid JSON: ") + e.what());
  }
  try {
    GeneratorSpec spec;
    spec.n_patients = j.at("n_patients").get<int>();
    spec.positive_rate = j.at("positive_rate").get<double>();
    const auto& npp = j.at("notes_per_patient");
    spec.notes_per_patient.mode = npp.at("mode").get<int>();
    spec.notes_per_patient.median = npp.at("median").get<int>();
    spec.notes_per_patient.mean = npp.at("mean").get<double>();
    if (j.contains("topic_prevalence")) {
      spec.topic_prevalence = j.at("topic_prevalence").get<std::map<std::string, double>>();
    }
    if (j.contains("topic_label_coupling")) {
      spec.topic_label_coupling =
          j.at("topic_label_coupling").get<std::map<std::string, double>>();
    }
    spec.vocab_noise = j.value("vocab_noise", spec.vocab_noise);
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.min_note_words = j.value("min_note_words", spec.min_note_words);
    spec.max_note_words = j.value("max_note_words", spec.max_note_words);
    spec.extra_keyword_rate = j.value("extra_keyword_rate", spec.extra_keyword_rate);
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(origin, 0, e.what());
  }
}

GeneratorSpec load_generator_spec(const std::string& path) {
  return generator_spec_from_json_text(read_text_file(path), path);
}

std::string generator_spec_to_json_text(const GeneratorSpec& spec) {
  json j;
  j["n_patients"] = spec.n_patients;
  j["positive_rate"] = spec.positive_rate;
  j["notes_per_patient"] = {{"mode", spec.notes_per_patient.mode},
                            {"median", spec.notes_per_patient.median},
                            {"mean", spec.notes_per_patient.mean}};
  j["topic_prevalence"] = spec.topic_prevalence;
  j["topic_label_coupling"] = spec.topic_label_coupling;
  j["vocab_noise"] = spec.vocab_noise;
  j["seed"] = spec.seed;
  j["min_note_words"] = spec.min_note_words;
  j["max_note_words"] = spec.max_note_words;
  j["extra_keyword_rate"] = spec.extra_keyword_rate;
  return j.dump(2) + "\n";
}

}  // namespace hiernote
