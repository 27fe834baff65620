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

#include "pampo/text.h"

#include <algorithm>

namespace pampo {

const char *to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kPunctuation: return "punctuation";
  }
  return "unknown";
}

namespace {

// Index of the letter that decides capitalization, skipping an elided
// "d'" prefix.
char32_t leading_letter(const Token &token) {
  std::u32string s = unicode::decode(token.surface);
  std::size_t i = 0;
  if (s.size() > 2 && (s[0] == U'd' || s[0] == U'D') &&
      unicode::is_apostrophe(s[1])) {
    i = 2;
  }
  for (; i < s.size(); ++i) {
    if (unicode::is_letter(s[i])) return s[i];
  }
  return 0;
}

bool is_closer(char32_t c) {
  return c == U'’' || c == U'”' || c == U'»' || c == U')' || c == U']' ||
         c == U'"' || c == U'\'';
}

bool is_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == U';';
}

bool is_newline(char32_t c) {
  return c == U'\n' || c == U'\r' || c == U' ' || c == U' ';
}

// Word made of letters immediately before position `dot`.
std::u32string word_before(std::u32string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && (unicode::is_letter(text[b - 1]) ||
                   unicode::is_mark(text[b - 1]))) {
    --b;
  }
  return std::u32string(text.substr(b, dot - b));
}

bool is_abbreviation(std::u32string_view word) {
  if (word.empty()) return false;
  std::string key = unicode::fold_key(unicode::encode(word));
  for (const auto &a : abbreviations()) {
    if (unicode::fold_key(a) == key) return true;
  }
  return false;
}

}  // namespace

bool is_capitalized(const Token &token) {
  if (!token.is_word()) return false;
  char32_t c = leading_letter(token);
  return c != 0 && unicode::is_upper(c);
}

bool is_lowercase_initial(const Token &token) {
  if (!token.is_word()) return false;
  char32_t c = leading_letter(token);
  return c != 0 && !unicode::is_upper(c);
}

const std::vector<std::string> &abbreviations() {
  static const std::vector<std::string> kAbbreviations = {
      "Cf",  "Dr",  "Dra",  "Drs", "Sr",   "Sra", "Srs",  "Eng", "Prof",
      "Profa", "Av", "art", "arts", "pp", "p",   "séc", "sécs", "etc",
      "Exmo", "Exma", "Sto", "Sta", "vol", "cap", "pág", "págs", "fl",
      "fls", "ed", "Mons", "Pe"};
  return kAbbreviations;
}

std::vector<SentenceSpan> split_sentences(std::u32string_view text) {
  std::vector<SentenceSpan> spans;
  std::size_t n = text.size();
  std::size_t start = 0;

  auto emit = [&](std::size_t b, std::size_t e) {
    while (b < e && unicode::is_space(text[b])) ++b;
    while (e > b && unicode::is_space(text[e - 1])) --e;
    if (b < e) spans.push_back({b, e});
  };

  std::size_t i = 0;
  while (i < n) {
    char32_t c = text[i];
    if (is_newline(c)) {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }
    if (c == U'.') {
      bool digit_before = i > 0 && unicode::is_digit(text[i - 1]);
      bool digit_after = i + 1 < n && unicode::is_digit(text[i + 1]);
      if (digit_before && digit_after) {
        ++i;
        continue;
      }
      if (is_abbreviation(word_before(text, i))) {
        ++i;
        continue;
      }
    }
    std::size_t e = i + 1;
    while (e < n && is_terminator(text[e])) ++e;
    while (e < n && is_closer(text[e]) &&
           (e + 1 == n || unicode::is_space(text[e + 1]) ||
            is_closer(text[e + 1]) || is_terminator(text[e + 1]))) {
      ++e;
    }
    emit(start, e);
    start = i = e;
  }
  emit(start, n);
  return spans;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  return split_sentences(unicode::decode(text));
}

std::vector<Token> tokenize(std::u32string_view s, std::size_t base_offset) {
  std::vector<Token> tokens;
  std::size_t n = s.size();
  std::size_t i = 0;
  auto word_char = [](char32_t c) {
    return unicode::is_letter(c) || unicode::is_mark(c);
  };
  while (i < n) {
    char32_t c = s[i];
    if (unicode::is_space(c)) {
      ++i;
      continue;
    }
    std::size_t b = i;
    TokenKind kind;
    if (unicode::is_letter(c)) {
      kind = TokenKind::kWord;
      ++i;
      while (i < n) {
        if (word_char(s[i])) {
          ++i;
        } else if (unicode::is_hyphen(s[i]) && i + 1 < n &&
                   unicode::is_letter(s[i + 1])) {
          i += 2;
        } else if (i - b == 1 && (s[b] == U'd' || s[b] == U'D') &&
                   unicode::is_apostrophe(s[i]) && i + 1 < n &&
                   unicode::is_letter(s[i + 1])) {
          i += 2;
        } else {
          break;
        }
      }
    } else if (unicode::is_digit(c)) {
      kind = TokenKind::kNumber;
      while (i < n && unicode::is_digit(s[i])) ++i;
    } else {
      kind = TokenKind::kPunctuation;
      ++i;
    }
    tokens.push_back({unicode::encode(s.substr(b, i - b)), base_offset + b,
                      base_offset + i, kind});
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view sentence_text,
                            std::size_t base_offset) {
  return tokenize(unicode::decode(sentence_text), base_offset);
}

std::string join_surfaces(const std::vector<Token> &tokens, std::size_t first,
                          std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) out.push_back(' ');
    out += tokens[i].surface;
  }
  return out;
}

Document::Document(std::string id, std::string text)
    : id_(std::move(id)), text_(std::move(text)), index_(text_) {
  std::u32string cps = unicode::decode(text_);
  auto spans = split_sentences(std::u32string_view(cps));
  sentences_.reserve(spans.size());
  for (const auto &span : spans) {
    Sentence sentence;
    sentence.index = sentences_.size();
    sentence.start = span.start;
    sentence.end = span.end;
    sentence.tokens = tokenize(
        std::u32string_view(cps).substr(span.start, span.end - span.start),
        span.start);
    sentences_.push_back(std::move(sentence));
  }
}

std::string Document::slice(std::size_t start, std::size_t end) const {
  std::size_t b = index_.byte_offset(start);
  std::size_t e = index_.byte_offset(end);
  return text_.substr(b, e - b);
}

std::size_t Document::word_count() const {
  std::size_t n = 0;
  for (const auto &s : sentences_) {
    n += static_cast<std::size_t>(std::count_if(
        s.tokens.begin(), s.tokens.end(),
        [](const Token &t) { return t.is_word(); }));
  }
  return n;
}

}  // namespace pampo
