// Copyright 2026 The pampo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sentence splitting and tokenization with scalar-value offsets.

#ifndef PAMPO_TEXT_H_
#define PAMPO_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pampo/unicode.h"

namespace pampo {

enum class TokenKind { kWord, kNumber, kPunctuation };

const char *to_string(TokenKind kind);

struct Token {
  std::string surface;
  std::size_t start = 0;  // scalar offset into the document text
  std::size_t end = 0;    // exclusive
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }

  friend bool operator==(const Token &, const Token &) = default;
};

// True for word tokens whose first letter is uppercase. For elided forms
// ("d'Ávila") the letter after the apostrophe decides.
bool is_capitalized(const Token &token);

// True for word tokens starting with a lowercase letter.
bool is_lowercase_initial(const Token &token);

struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SentenceSpan &, const SentenceSpan &) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<Token> tokens;
};

class Document {
 public:
  Document() = default;
  Document(std::string id, std::string text);

  const std::string &id() const { return id_; }
  const std::string &text() const { return text_; }
  const std::vector<Sentence> &sentences() const { return sentences_; }

  // Text length in scalar values.
  std::size_t length() const { return index_.size(); }

  // Substring between two scalar offsets.
  std::string slice(std::size_t start, std::size_t end) const;

  std::size_t word_count() const;

 private:
  std::string id_;
  std::string text_;
  unicode::OffsetIndex index_;
  std::vector<Sentence> sentences_;
};

// Abbreviations whose trailing period does not end a sentence. Compared
// case-insensitively.
const std::vector<std::string> &abbreviations();

// Sentence boundaries as scalar-offset ranges, trimmed of whitespace.
std::vector<SentenceSpan> split_sentences(std::string_view text);
std::vector<SentenceSpan> split_sentences(std::u32string_view text);

// Tokens of one sentence; offsets are shifted by base_offset.
std::vector<Token> tokenize(std::string_view sentence_text,
                            std::size_t base_offset = 0);
std::vector<Token> tokenize(std::u32string_view sentence_text,
                            std::size_t base_offset = 0);

// Joins surfaces of tokens [first, last) with single spaces.
std::string join_surfaces(const std::vector<Token> &tokens, std::size_t first,
                          std::size_t last);

}  // namespace pampo

#endif  // PAMPO_TEXT_H_
