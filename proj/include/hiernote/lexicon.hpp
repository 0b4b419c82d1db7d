#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "hiernote/corpus.hpp"

namespace hiernote {

struct TopicLexicon {
  std::string slug;  // stable machine name, e.g. "risk_of_death"
  std::string name;  // display name, e.g. "Risk of death"
  std::unordered_set<std::string> keywords;  // lowercase, unique
};

// The 11 shipped SDOH topics with their keyword lists, in canonical order.
const std::vector<TopicLexicon>& default_lexicons();

const TopicLexicon* find_topic(const std::vector<TopicLexicon>& lexicons,
                               const std::string& slug);

std::vector<TopicLexicon> lexicons_from_json_text(const std::string& text,
                                                  const std::string& origin);
std::vector<TopicLexicon> load_lexicons(const std::string& path);
std::string lexicons_to_json_text(const std::vector<TopicLexicon>& lexicons);

// Case-insensitive whole-word deletion; every other token and its order is
// preserved, and the operation is idempotent.
std::string remove_topic_words(const std::string& text, const TopicLexicon& lexicon);

// Whole-word containment test using the same boundary rules.
bool contains_topic_word(const std::string& text, const TopicLexicon& lexicon);
std::size_t count_topic_words(const std::string& text, const TopicLexicon& lexicon);

struct TopicStats {
  std::string slug;
  double note_frequency = 0.0;     // fraction of notes containing >=1 keyword
  double patient_frequency = 0.0;  // fraction of patients with >=1 containing note
  double class_proportion = 0.0;   // TT-Yes fraction among containing notes
  long containing_notes = 0;
  long containing_patients = 0;
};

std::vector<TopicStats> topic_stats(const PatientView& patients,
                                    const std::vector<TopicLexicon>& lexicons);

}  // namespace hiernote
