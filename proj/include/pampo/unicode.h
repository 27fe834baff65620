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

// UTF-8 helpers. Offsets exposed by the library count Unicode scalar values.

#ifndef PAMPO_UNICODE_H_
#define PAMPO_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pampo {
namespace unicode {

// Decodes UTF-8 into scalar values. Throws pampo::Utf8Error on malformed
// input, reporting the byte offset of the first bad sequence.
std::u32string decode(std::string_view utf8);

bool is_valid(std::string_view utf8);

void append(std::string &out, char32_t cp);
std::string encode(std::u32string_view text);

// Number of scalar values in a valid UTF-8 string.
std::size_t length(std::string_view utf8);

bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);
// Nonspacing and enclosing combining marks (decomposed diacritics).
bool is_mark(char32_t cp);
bool is_apostrophe(char32_t cp);
bool is_hyphen(char32_t cp);

std::string nfc(std::string_view utf8);
std::string to_lower(std::string_view utf8);

// NFC, lowercased, outer whitespace trimmed. Key used for every
// case-insensitive lexicon comparison.
std::string fold_key(std::string_view utf8);

// NFC with internal whitespace runs collapsed to one space and outer
// whitespace trimmed. Case is preserved.
std::string collapse(std::string_view utf8);

// Maps scalar-value offsets to byte offsets of one UTF-8 string.
class OffsetIndex {
 public:
  OffsetIndex() = default;
  explicit OffsetIndex(std::string_view utf8);

  std::size_t size() const { return bytes_.empty() ? 0 : bytes_.size() - 1; }
  std::size_t byte_offset(std::size_t cp_offset) const {
    return bytes_.at(cp_offset);
  }

 private:
  // bytes_[i] is the byte offset of scalar i; the final entry is the total
  // byte length.
  std::vector<std::size_t> bytes_;
};

}  // namespace unicode
}  // namespace pampo

#endif  // PAMPO_UNICODE_H_
