#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hiernote/corpus.hpp"

namespace hiernote {

inline constexpr int kPadId = 0;
inline constexpr int kUnkId = 1;
inline constexpr int kClsId = 2;
inline constexpr int kSepId = 3;
inline constexpr int kMaskId = 4;
inline constexpr int kNumReserved = 5;

// Lowercased word split on whitespace/punctuation boundaries. Letter and
// digit runs form words; every punctuation codepoint is its own token;
// whitespace only separates. Non-ASCII codepoints are treated as letters.
std::vector<std::string> word_tokenize(const std::string& text);
std::size_t count_tokens(const std::string& text);

// Byte spans of the word tokens only (punctuation skipped), with the
// lowercased form. Keyword matching goes through this so it shares the
// tokenizer's exact boundary rules.
struct WordSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string lower;
};
std::vector<WordSpan> word_spans(const std::string& text);

class Vocabulary {
public:
  Vocabulary();  // reserved tokens only

  int lookup(const std::string& token) const;  // kUnkId when absent
  const std::string& decode(int id) const;
  int size() const { return static_cast<int>(id_to_token_.size()); }
  bool contains(const std::string& token) const;

  // Tokens beyond the reserved block, in id order.
  static Vocabulary from_tokens(const std::vector<std::string>& tokens);
  std::string to_text() const;  // one token per line, reserved block implicit
  static Vocabulary from_text(const std::string& text, const std::string& origin);
  void save(const std::string& path) const;
  static Vocabulary load(const std::string& path);

private:
  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, int> token_to_id_;
};

// Frequency-ordered vocabulary over all note text; ties break
// lexicographically. max_size caps the total size including reserved ids.
Vocabulary build_vocab(const Corpus& corpus, int min_count, int max_size);
Vocabulary build_vocab(const PatientView& patients, int min_count, int max_size);

struct TokenSequence {
  std::vector<int> ids;                      // padded to max_len
  std::vector<std::uint8_t> attention_mask;  // 1 = real token, 0 = PAD
  int length = 0;                            // count of non-PAD positions
};

// [CLS] tokens... [SEP], truncated so the total fits max_len, padded with PAD.
TokenSequence encode(const Vocabulary& vocab, const std::string& text, int max_len);

// Real tokens between CLS and SEP.
std::vector<std::string> decode(const Vocabulary& vocab, const TokenSequence& seq);

inline constexpr int kIgnoreLabel = -1;

struct MlmInstance {
  std::vector<int> input_ids;
  std::vector<std::uint8_t> attention_mask;
  std::vector<std::uint8_t> segment_ids;  // 0 = segment A (incl CLS, first SEP)
  std::vector<int> labels;                // original id at masked positions, else -1
  bool nsp_is_next = false;
};

// Sentence pairs from note halves: 50/50 consecutive vs. random pairing, then
// BERT-style corruption of mask_rate positions (80% MASK / 10% random /
// 10% unchanged). Notes too short to split are skipped.
std::vector<MlmInstance> make_mlm_instances(const Vocabulary& vocab,
                                            const std::vector<std::string>& texts,
                                            double mask_rate, int max_len,
                                            std::uint64_t seed);

}  // namespace hiernote
