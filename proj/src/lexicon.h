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

#ifndef PAMPO_SRC_LEXICON_H_
#define PAMPO_SRC_LEXICON_H_

#include <string>
#include <unordered_map>

#include "pampo/pos_tag.h"

namespace pampo {
namespace lexicon {

// Keys are lowercase NFC forms.
const std::unordered_map<std::string, PosTag> &closed_class();
const std::unordered_map<std::string, PosTag> &open_class();

}  // namespace lexicon
}  // namespace pampo

#endif  // PAMPO_SRC_LEXICON_H_
