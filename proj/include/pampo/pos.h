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

// Part-of-speech tagging of candidate entities.
//
// Tags always come from tagging the whole sentence so that providers see the
// context (sentence-initial position, neighbours); candidates then take the
// slice covering their tokens.

#ifndef PAMPO_POS_H_
#define PAMPO_POS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pampo/pos_tag.h"
#include "pampo/text.h"

namespace pampo {

// Inclusive token-index range inside one sentence.
struct TokenSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }

  friend bool operator==(const TokenSpan &, const TokenSpan &) = default;
};

struct TaggedCandidate {
  std::vector<Token> tokens;
  std::vector<PosTag> tags;
};

class TagProvider {
 public:
  virtual ~TagProvider() = default;

  virtual std::string identity() const = 0;

  // One tag per token of `sentence`. Implementations must be safe to call
  // concurrently.
  virtual std::vector<PosTag> tag_sentence(const Document &doc,
                                           const Sentence &sentence) const = 0;
};

// Tags `span` of `sentence`. Failures of the provider, including a tag count
// that differs from the token count, surface as TaggingError carrying the
// provider identity.
TaggedCandidate tag_candidate(const TagProvider &provider, const Document &doc,
                              const Sentence &sentence, TokenSpan span);

// Deterministic lexicon and suffix tagger. Precedence per word:
//   1. closed-class lexicon (any capitalization)
//   2. isolated capital letters (initials, OCR debris) -> other
//   3. open-class lexicon for lowercase words
//   4. capitalized, not sentence-initial -> prop
//   5. capitalized, sentence-initial -> open-class lookup of the lowercased
//      form, else prop
//   6. suffix rules for lowercase words, else n
class BuiltinTagger : public TagProvider {
 public:
  std::string identity() const override { return "builtin"; }
  std::vector<PosTag> tag_sentence(const Document &doc,
                                   const Sentence &sentence) const override;

  std::vector<PosTag> tag_tokens(const std::vector<Token> &tokens) const;
};

std::shared_ptr<const TagProvider> builtin_tagger();

// Reads tags from a file in the two-column format
//
//   # doc: <id>
//   surface<TAB>tag
//   ...
//   <blank line between sentences>
//
// Tokens must align with the library's own segmentation.
class PretaggedProvider : public TagProvider {
 public:
  static std::shared_ptr<PretaggedProvider> load(
      const std::filesystem::path &path);
  static std::shared_ptr<PretaggedProvider> parse(
      std::string_view text, const std::string &source = "<string>");

  std::string identity() const override { return identity_; }
  std::vector<PosTag> tag_sentence(const Document &doc,
                                   const Sentence &sentence) const override;

  // Unknown tag strings, mapped to `other`, one message per occurrence.
  const std::vector<std::string> &warnings() const { return warnings_; }

  bool has_document(const std::string &id) const {
    return docs_.count(id) > 0;
  }

 private:
  struct Entry {
    std::string surface;
    PosTag tag;
  };
  using TaggedSentence = std::vector<Entry>;

  std::string identity_;
  std::map<std::string, std::vector<TaggedSentence>> docs_;
  std::vector<std::string> warnings_;
};

std::shared_ptr<const TagProvider> pretagged_provider(
    const std::filesystem::path &path);

// Open-class lexicon size, exposed for coverage checks.
std::size_t open_class_lexicon_size();
std::size_t closed_class_lexicon_size();

// Tag of `word` in the closed-class lexicon, if any.
std::optional<PosTag> closed_class_tag(std::string_view word);

}  // namespace pampo

#endif  // PAMPO_POS_H_
