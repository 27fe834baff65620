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

#ifndef PAMPO_POS_TAG_H_
#define PAMPO_POS_TAG_H_

#include <optional>
#include <string_view>

namespace pampo {

// Subset of the Bosque/Floresta tagset inspected by entity selection.
enum class PosTag {
  kProp,
  kNoun,
  kAdj,
  kVerbFinite,
  kVerbInfinitive,
  kVerbParticiple,
  kAdv,
  kPronDet,
  kPronPers,
  kPrep,
  kArt,
  kNum,
  kConj,
  kPunc,
  kOther,
};

// Canonical Bosque name ("prop", "n", "v-fi", ...).
const char *to_string(PosTag tag);

// Exact lookup of a canonical name; also accepts "v-fin" as an alias of
// "v-fi". Returns nullopt for anything else.
std::optional<PosTag> parse_pos_tag(std::string_view name);

}  // namespace pampo

#endif  // PAMPO_POS_TAG_H_
