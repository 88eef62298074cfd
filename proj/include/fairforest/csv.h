// Copyright 2026 The FairForest Authors.
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

#ifndef FAIRFOREST_CSV_H_
#define FAIRFOREST_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fairforest {

// RFC 4180 record reader: quoted fields, doubled quotes, embedded delimiters
// and line breaks, LF or CRLF record ends. Blank lines are skipped.
class CsvReader {
 public:
  CsvReader(std::string_view text, char delimiter = ',')
      : text_(text), delimiter_(delimiter) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // Throws ParseError on an unterminated quoted field.
  bool next(std::vector<std::string>& fields);

  // Line on which the last record returned by next() started (1-based).
  std::size_t record_line() const { return record_line_; }

 private:
  std::string_view text_;
  char delimiter_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

}  // namespace fairforest

#endif  // FAIRFOREST_CSV_H_
