#include "hiernote/tokenizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hiernote/common.hpp"
#include "hiernote/rng.hpp"

namespace hiernote {

namespace {

const char* kReservedNames[kNumReserved] = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};

struct Codepoint {
  char32_t value;
  std::size_t length;  // bytes consumed
};

Codepoint decode_utf8(const std::string& s, std::size_t i) {
  unsigned char c = s[i];
  if (c < 0x80) return {c, 1};
  std::size_t left = s.size() - i;
  if ((c >> 5) == 0x6 && left >= 2) {
    return {static_cast<char32_t>(((c & 0x1F) << 6) | (s[i + 1] & 0x3F)), 2};
  }
  if ((c >> 4) == 0xE && left >= 3) {
    return {static_cast<char32_t>(((c & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) |
                                  (s[i + 2] & 0x3F)),
            3};
  }
  if ((c >> 3) == 0x1E && left >= 4) {
    return {static_cast<char32_t>(((c & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
                                  ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F)),
            4};
  }
  return {c, 1};  // invalid byte: pass through as-is
}

bool is_space_cp(char32_t c) {
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return true;
  if (c == 0x00A0 || c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x3000) return true;
  return c >= 0x2000 && c <= 0x200A;
}

bool is_punct_cp(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  if (c >= 0x00A1 && c <= 0x00BF) return true;
  return (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E);
}

char32_t to_lower_cp(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  return c;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

}  // namespace

std::vector<std::string> word_tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string word;
  std::size_t i = 0;
  while (i < text.size()) {
    Codepoint cp = decode_utf8(text, i);
    i += cp.length;
    if (is_space_cp(cp.value)) {
      if (!word.empty()) {
        tokens.push_back(std::move(word));
        word.clear();
      }
    } else if (is_punct_cp(cp.value)) {
      if (!word.empty()) {
        tokens.push_back(std::move(word));
        word.clear();
      }
      std::string punct;
      append_utf8(punct, cp.value);
      tokens.push_back(std::move(punct));
    } else {
      append_utf8(word, to_lower_cp(cp.value));
    }
  }
  if (!word.empty()) tokens.push_back(std::move(word));
  return tokens;
}

std::size_t count_tokens(const std::string& text) { return word_tokenize(text).size(); }

std::vector<WordSpan> word_spans(const std::string& text) {
  std::vector<WordSpan> spans;
  WordSpan current;
  bool in_word = false;
  std::size_t i = 0;
  while (i < text.size()) {
    Codepoint cp = decode_utf8(text, i);
    std::size_t next = i + cp.length;
    if (is_space_cp(cp.value) || is_punct_cp(cp.value)) {
      if (in_word) {
        current.end = i;
        spans.push_back(std::move(current));
        current = WordSpan{};
        in_word = false;
      }
    } else {
      if (!in_word) {
        current.begin = i;
        in_word = true;
      }
      append_utf8(current.lower, to_lower_cp(cp.value));
    }
    i = next;
  }
  if (in_word) {
    current.end = text.size();
    spans.push_back(std::move(current));
  }
  return spans;
}

Vocabulary::Vocabulary() {
  for (int i = 0; i < kNumReserved; ++i) {
    id_to_token_.emplace_back(kReservedNames[i]);
    token_to_id_[kReservedNames[i]] = i;
  }
}

int Vocabulary::lookup(const std::string& token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::decode(int id) const {
  if (id < 0 || id >= size()) throw std::out_of_range("token id out of range");
  return id_to_token_[static_cast<std::size_t>(id)];
}

bool Vocabulary::contains(const std::string& token) const {
  return token_to_id_.count(token) > 0;
}

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens) {
  Vocabulary v;
  for (const auto& tok : tokens) {
    if (tok.empty()) throw ConfigError("empty token in vocabulary");
    if (v.token_to_id_.count(tok)) throw ConfigError("duplicate token in vocabulary: " + tok);
    v.token_to_id_[tok] = v.size();
    v.id_to_token_.push_back(tok);
  }
  return v;
}

std::string Vocabulary::to_text() const {
  std::ostringstream out;
  for (int i = kNumReserved; i < size(); ++i) out << id_to_token_[i] << "\n";
  return out.str();
}

Vocabulary Vocabulary::from_text(const std::string& text, const std::string& origin) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) throw ParseError(origin, line_no, "empty vocabulary line");
    tokens.push_back(line);
  }
  try {
    return from_tokens(tokens);
  } catch (const ConfigError& e) {
    throw ParseError(origin, 0, e.what());
  }
}

void Vocabulary::save(const std::string& path) const { write_text_file(path, to_text()); }

Vocabulary Vocabulary::load(const std::string& path) {
  return from_text(read_text_file(path), path);
}

namespace {

Vocabulary build_vocab_from_counts(std::map<std::string, long>& counts, int min_count,
                                   int max_size) {
  if (counts.empty()) throw ConfigError("empty text corpus: no tokens to build a vocabulary");
  if (max_size <= kNumReserved) throw ConfigError("max_size leaves no room beyond reserved ids");
  std::vector<std::pair<std::string, long>> entries(counts.begin(), counts.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> kept;
  for (const auto& [token, count] : entries) {
    if (count < min_count) continue;
    if (static_cast<int>(kept.size()) + kNumReserved >= max_size) break;
    kept.push_back(token);
  }
  return Vocabulary::from_tokens(kept);
}

}  // namespace

Vocabulary build_vocab(const PatientView& patients, int min_count, int max_size) {
  std::map<std::string, long> counts;
  for (const Patient* patient : patients) {
    for (const Note& note : patient->notes) {
      for (auto& tok : word_tokenize(note.text)) counts[tok]++;
    }
  }
  return build_vocab_from_counts(counts, min_count, max_size);
}

Vocabulary build_vocab(const Corpus& corpus, int min_count, int max_size) {
  PatientView view;
  view.reserve(corpus.patients.size());
  for (const auto& p : corpus.patients) view.push_back(&p);
  return build_vocab(view, min_count, max_size);
}

TokenSequence encode(const Vocabulary& vocab, const std::string& text, int max_len) {
  if (max_len < 2) throw std::invalid_argument("encode: max_len must be >= 2");
  auto words = word_tokenize(text);
  std::size_t body = std::min(words.size(), static_cast<std::size_t>(max_len - 2));

  TokenSequence seq;
  seq.ids.reserve(static_cast<std::size_t>(max_len));
  seq.ids.push_back(kClsId);
  for (std::size_t i = 0; i < body; ++i) seq.ids.push_back(vocab.lookup(words[i]));
  seq.ids.push_back(kSepId);
  seq.length = static_cast<int>(seq.ids.size());
  seq.ids.resize(static_cast<std::size_t>(max_len), kPadId);
  seq.attention_mask.assign(static_cast<std::size_t>(max_len), 0);
  for (int i = 0; i < seq.length; ++i) seq.attention_mask[static_cast<std::size_t>(i)] = 1;
  return seq;
}

std::vector<std::string> decode(const Vocabulary& vocab, const TokenSequence& seq) {
  std::vector<std::string> out;
  for (int i = 0; i < seq.length; ++i) {
    int id = seq.ids[static_cast<std::size_t>(i)];
    if (id == kClsId || id == kSepId || id == kPadId) continue;
    out.push_back(vocab.decode(id));
  }
  return out;
}

std::vector<MlmInstance> make_mlm_instances(const Vocabulary& vocab,
                                            const std::vector<std::string>& texts,
                                            double mask_rate, int max_len,
                                            std::uint64_t seed) {
  if (mask_rate <= 0.0 || mask_rate >= 1.0) {
    throw std::invalid_argument("mask_rate must lie in (0,1)");
  }
  if (max_len < 5) throw std::invalid_argument("max_len too small for a sentence pair");

  Rng rng(seed);
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(texts.size());
  for (const auto& t : texts) tokenized.push_back(word_tokenize(t));

  std::vector<MlmInstance> instances;
  int n_regular = vocab.size() - kNumReserved;

  for (std::size_t i = 0; i < tokenized.size(); ++i) {
    const auto& words = tokenized[i];
    if (words.size() < 2) continue;  // cannot form two segments
    std::size_t half = (words.size() + 1) / 2;

    std::vector<int> seg_a, seg_b;
    for (std::size_t k = 0; k < half; ++k) seg_a.push_back(vocab.lookup(words[k]));

    bool is_next = rng.bernoulli(0.5);
    if (!is_next && tokenized.size() >= 2) {
      std::size_t j = i;
      while (j == i || tokenized[j].size() < 2) {
        j = static_cast<std::size_t>(rng.below(tokenized.size()));
      }
      const auto& other = tokenized[j];
      std::size_t other_half = (other.size() + 1) / 2;
      for (std::size_t k = other_half; k < other.size(); ++k) {
        seg_b.push_back(vocab.lookup(other[k]));
      }
    } else {
      is_next = true;
      for (std::size_t k = half; k < words.size(); ++k) seg_b.push_back(vocab.lookup(words[k]));
    }

    // Trim the longer segment until [CLS] A [SEP] B [SEP] fits.
    std::size_t budget = static_cast<std::size_t>(max_len - 3);
    while (seg_a.size() + seg_b.size() > budget) {
      auto& longer = seg_a.size() >= seg_b.size() ? seg_a : seg_b;
      longer.pop_back();
    }
    if (seg_a.empty() || seg_b.empty()) continue;

    MlmInstance inst;
    inst.nsp_is_next = is_next;
    inst.input_ids.reserve(static_cast<std::size_t>(max_len));
    inst.input_ids.push_back(kClsId);
    for (int id : seg_a) inst.input_ids.push_back(id);
    inst.input_ids.push_back(kSepId);
    std::size_t seg_b_start = inst.input_ids.size();
    for (int id : seg_b) inst.input_ids.push_back(id);
    inst.input_ids.push_back(kSepId);

    std::size_t real = inst.input_ids.size();
    inst.input_ids.resize(static_cast<std::size_t>(max_len), kPadId);
    inst.attention_mask.assign(static_cast<std::size_t>(max_len), 0);
    inst.segment_ids.assign(static_cast<std::size_t>(max_len), 0);
    inst.labels.assign(static_cast<std::size_t>(max_len), kIgnoreLabel);
    for (std::size_t k = 0; k < real; ++k) inst.attention_mask[k] = 1;
    for (std::size_t k = seg_b_start; k < real; ++k) inst.segment_ids[k] = 1;

    for (std::size_t pos = 0; pos < real; ++pos) {
      int id = inst.input_ids[pos];
      if (id == kClsId || id == kSepId) continue;
      if (!rng.bernoulli(mask_rate)) continue;
      inst.labels[pos] = id;
      double roll = rng.uniform();
      if (roll < 0.8) {
        inst.input_ids[pos] = kMaskId;
      } else if (roll < 0.9 && n_regular > 0) {
        inst.input_ids[pos] =
            kNumReserved + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_regular)));
      }  // else: keep the original token
    }
    instances.push_back(std::move(inst));
  }
  return instances;
}

}  // namespace hiernote
