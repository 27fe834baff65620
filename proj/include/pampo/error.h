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

#ifndef PAMPO_ERROR_H_
#define PAMPO_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pampo {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Utf8Error : public Error {
 public:
  Utf8Error(std::size_t byte_offset)
      : Error("invalid UTF-8 at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed pattern-base or annotation file. line() is 1-based, 0 when the
// problem is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string &source, std::size_t line,
             const std::string &message)
      : Error(source + (line ? ":" + std::to_string(line) : "") + ": " +
              message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class TaggingError : public Error {
 public:
  TaggingError(const std::string &provider, const std::string &message)
      : Error("tagger '" + provider + "': " + message), provider_(provider) {}
  const std::string &provider() const { return provider_; }

 private:
  std::string provider_;
};

// Inputs that disagree on document sets or offsets.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace pampo

#endif  // PAMPO_ERROR_H_
