#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hiernote {

enum class Label { TTNo = 0, TTYes = 1 };

std::string to_string(Label label);
Label label_from_string(const std::string& s);

struct Note {
  std::string note_id;
  std::string patient_id;
  std::int64_t timestamp = 0;  // epoch seconds, >= 0
  std::string text;            // non-empty UTF-8
};

struct Patient {
  std::string patient_id;
  Label label = Label::TTNo;
  std::vector<Note> notes;  // ascending timestamp, ties by note_id
};

struct Corpus {
  std::vector<Patient> patients;
  std::map<std::string, std::string> metadata;  // generator parameters, provenance
};

struct SplitRatios {
  double train = 0.8;
  double valid = 0.1;
  double test = 0.1;
};

// Patient-level partition: a patient's notes never straddle two sets.
struct Split {
  std::vector<std::string> train;
  std::vector<std::string> valid;
  std::vector<std::string> test;
  SplitRatios ratios;
  std::uint64_t seed = 0;
};

// Borrowed, label-aware view of a subset of patients.
using PatientView = std::vector<const Patient*>;

struct SplitViews {
  PatientView train;
  PatientView valid;
  PatientView test;
};

struct NoteCountTargets {
  int mode = 2;
  int median = 11;
  double mean = 22.0;
};

struct GeneratorSpec {
  int n_patients = 0;
  double positive_rate = 0.5;
  NoteCountTargets notes_per_patient;
  std::map<std::string, double> topic_prevalence;      // topic slug -> fraction of notes
  std::map<std::string, double> topic_label_coupling;  // log-odds per keyword occurrence
  int vocab_noise = 500;  // size of the filler vocabulary
  std::uint64_t seed = 0;
  // Plumbing knobs; defaults produce social-work-note-sized texts.
  int min_note_words = 18;
  int max_note_words = 40;
  double extra_keyword_rate = 0.6;  // mean extra occurrences per containing note
};

// Line-delimited corpus file: one JSON patient record per line, optional
// metadata header line. Round trips byte-identically through save/load.
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);
std::string corpus_to_jsonl(const Corpus& corpus);
Corpus corpus_from_jsonl(const std::string& text, const std::string& origin);

// Sorts each patient's notes and enforces all corpus invariants.
void validate_corpus(Corpus& corpus, const std::string& origin = "corpus");

Split split_patients(const Corpus& corpus, SplitRatios ratios, std::uint64_t seed);
SplitViews apply_split(const Corpus& corpus, const Split& split);
void save_split(const Split& split, const std::string& path);
Split load_split(const std::string& path);

// Longest note by token count; ties latest timestamp, then note_id.
const Note& select_single_note(const Patient& patient);

// The n longest notes (same tie rule), returned in ascending timestamp order.
std::vector<const Note*> select_notes_ms(const Patient& patient, int n);

Corpus generate_corpus(const GeneratorSpec& spec);

GeneratorSpec generator_spec_from_json_text(const std::string& text, const std::string& origin);
GeneratorSpec load_generator_spec(const std::string& path);
std::string generator_spec_to_json_text(const GeneratorSpec& spec);

// Shifted negative binomial pmf fit to the note-count targets; index k holds
// P(note count = k), index 0 unused. Exposed for distribution tests.
std::vector<double> note_count_distribution(const NoteCountTargets& targets);

double realized_positive_rate(const Corpus& corpus);

}  // namespace hiernote
