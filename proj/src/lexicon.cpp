#include "hiernote/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "hiernote/common.hpp"
#include "hiernote/tokenizer.hpp"
#include <nlohmann/json.hpp>

namespace hiernote {

using nlohmann::json;

namespace {

TopicLexicon make_topic(std::string slug, std::string name,
                        std::initializer_list<const char*> words) {
  TopicLexicon t;
  t.slug = std::move(slug);
  t.name = std::move(name);
  for (const char* w : words) t.keywords.insert(w);
  return t;
}

std::vector<TopicLexicon> build_default_lexicons() {
  return {
      make_topic("mental_health", "Mental health",
                 {"mental", "depression", "anxiety", "mood", "psychological", "physical",
                  "cognitive", "emotional", "mind", "psychiatric"}),
      make_topic("family", "Family",
                 {"family", "parent", "father", "mother", "child", "children", "sister",
                  "parents", "relatives", "clan", "childhood", "friends"}),
      make_topic("consultation", "Consultation/Appointment",
                 {"appointment", "consultation", "consult", "questionnaire", "question",
                  "advice", "biographical", "wikipedia", "relevant", "questions", "know",
                  "documentation"}),
      make_topic("group_session", "Group session",
                 {"group", "intervention", "session", "interpers", "community", "class",
                  "organization", "together", "part"}),
      make_topic("risk_of_death", "Risk of death",
                 {"suicide", "suicidal", "risk", "crisis", "homicide", "murder", "commit",
                  "bombing", "murdered", "murders", "bomber", "killing", "convicted",
                  "victims"}),
      make_topic("medical_factors", "Medical factors",
                 {"patient", "medication", "hospital", "medical", "clinic", "clinician",
                  "treatment", "therapy", "surgery", "symptoms", "patients", "drugs",
                  "diagnosis", "treatments", "prescribed"}),
      make_topic("living_condition", "Living condition/Lifestyle",
                 {"shelter", "housing", "house", "living", "sleep", "bedtime", "building",
                  "buildings", "urban", "employment", "suburban", "campus", "acres"}),
      make_topic("social_support", "Social support",
                 {"social", "service", "support", "referral", "recommendation", "recommend",
                  "worker", "resource", "supports", "provide", "supporting", "supported",
                  "allow", "providing", "assistance", "benefit", "help"}),
      make_topic("telephone", "TelephoneEcounter/Online communication",
                 {"telehealth", "phone", "call", "video", "telephone", "mobile", "wireless",
                  "gsm", "cellular", "dial", "email", "calling", "networks", "calls",
                  "messages", "telephones", "internet"}),
      make_topic("abuse", "Abuse history",
                 {"abuse", "history", "addiction", "alcohol", "drugs", "allegations",
                  "victim", "violence", "sexual", "rape", "dependence"}),
      make_topic("insurance", "Insurance/Income",
                 {"insurance", "income", "coverage", "financial", "contracts", "banking",
                  "finance", "liability", "private", "pay"}),
  };
}

}  // namespace

const std::vector<TopicLexicon>& default_lexicons() {
  static const std::vector<TopicLexicon> lexicons = build_default_lexicons();
  return lexicons;
}

const TopicLexicon* find_topic(const std::vector<TopicLexicon>& lexicons,
                               const std::string& slug) {
  for (const auto& t : lexicons) {
    if (t.slug == slug) return &t;
  }
  return nullptr;
}

std::vector<TopicLexicon> lexicons_from_json_text(const std::string& text,
                                                  const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin, 0, std::string("invalid JSON: ") + e.what());
  }
  std::vector<TopicLexicon> out;
  try {
    for (const auto& entry : j.at("topics")) {
      TopicLexicon t;
      t.slug = entry.at("slug").get<std::string>();
      t.name = entry.value("name", t.slug);
      for (const auto& w : entry.at("keywords")) {
        std::string word = lowercase_ascii(w.get<std::string>());
        if (word.empty()) throw ConfigError("empty keyword in topic '" + t.slug + "'");
        t.keywords.insert(word);
      }
      if (t.keywords.empty()) throw ConfigError("topic '" + t.slug + "' has no keywords");
      out.push_back(std::move(t));
    }
  } catch (const json::exception& e) {
    throw ParseError(origin, 0, e.what());
  } catch (const ConfigError& e) {
    throw ParseError(origin, 0, e.what());
  }
  if (out.empty()) throw ParseError(origin, 0, "lexicon file has no topics");
  return out;
}

std::vector<TopicLexicon> load_lexicons(const std::string& path) {
  return lexicons_from_json_text(read_text_file(path), path);
}

std::string lexicons_to_json_text(const std::vector<TopicLexicon>& lexicons) {
  json topics = json::array();
  for (const auto& t : lexicons) {
    std::vector<std::string> words(t.keywords.begin(), t.keywords.end());
    std::sort(words.begin(), words.end());
    topics.push_back(json{{"slug", t.slug}, {"name", t.name}, {"keywords", words}});
  }
  return json{{"topics", topics}}.dump(2) + "\n";
}

namespace {

// Calls visit(start, end) for every word token whose lowercased form is in
// the lexicon.
template <typename Visit>
void scan_keyword_spans(const std::string& text, const TopicLexicon& lexicon, Visit visit) {
  for (const auto& span : word_spans(text)) {
    if (lexicon.keywords.count(span.lower)) visit(span.begin, span.end);
  }
}

}  // namespace

std::string remove_topic_words(const std::string& text, const TopicLexicon& lexicon) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  scan_keyword_spans(text, lexicon,
                     [&](std::size_t a, std::size_t b) { spans.emplace_back(a, b); });
  if (spans.empty()) return text;

  auto is_space = [&](std::size_t i) {
    unsigned char c = text[i];
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };

  // Each deleted word absorbs the following whitespace run (or the preceding
  // one at end of text) so repeated removal cannot stack up separators.
  std::vector<char> drop(text.size(), 0);
  for (auto [a, b] : spans) {
    for (std::size_t k = a; k < b; ++k) drop[k] = 1;
    std::size_t k = b;
    if (k < text.size() && is_space(k)) {
      while (k < text.size() && is_space(k)) drop[k++] = 1;
    } else if (a > 0 && is_space(a - 1)) {
      std::size_t j = a;
      while (j > 0 && is_space(j - 1)) drop[--j] = 1;
    }
  }
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (!drop[k]) out.push_back(text[k]);
  }
  return out;
}

bool contains_topic_word(const std::string& text, const TopicLexicon& lexicon) {
  bool found = false;
  scan_keyword_spans(text, lexicon, [&](std::size_t, std::size_t) { found = true; });
  return found;
}

std::size_t count_topic_words(const std::string& text, const TopicLexicon& lexicon) {
  std::size_t count = 0;
  scan_keyword_spans(text, lexicon, [&](std::size_t, std::size_t) { ++count; });
  return count;
}

std::vector<TopicStats> topic_stats(const PatientView& patients,
                                    const std::vector<TopicLexicon>& lexicons) {
  std::vector<TopicStats> stats;
  stats.reserve(lexicons.size());
  long total_notes = 0;
  for (const Patient* p : patients) total_notes += static_cast<long>(p->notes.size());

  for (const auto& lexicon : lexicons) {
    TopicStats s;
    s.slug = lexicon.slug;
    long yes_notes = 0;
    for (const Patient* p : patients) {
      bool patient_contains = false;
      for (const auto& note : p->notes) {
        if (!contains_topic_word(note.text, lexicon)) continue;
        s.containing_notes++;
        patient_contains = true;
        if (p->label == Label::TTYes) yes_notes++;
      }
      if (patient_contains) s.containing_patients++;
    }
    if (total_notes > 0) {
      s.note_frequency = static_cast<double>(s.containing_notes) / static_cast<double>(total_notes);
    }
    if (!patients.empty()) {
      s.patient_frequency =
          static_cast<double>(s.containing_patients) / static_cast<double>(patients.size());
    }
    if (s.containing_notes > 0) {
      s.class_proportion = static_cast<double>(yes_notes) / static_cast<double>(s.containing_notes);
    }
    stats.push_back(std::move(s));
  }
  return stats;
}

}  // namespace hiernote
