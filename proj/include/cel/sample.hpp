/*
 * Copyright (c) 2026, CEL library developers.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CEL_SAMPLE_HPP
#define CEL_SAMPLE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cel {

/// Thrown by Sample::load on malformed input; the message names the line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ordered collection of strictly positive observations.
/// Values are sorted ascending at construction; the object is immutable.
class Sample {
 public:
  /// Validates (nonempty, finite, > 0) and sorts.
  Sample(std::vector<double> values, std::string label);

  /// Reads one numeric value per line, or a single-column CSV with an
  /// optional header row. Lines starting with '#' and blank lines are
  /// skipped. Throws ParseError (with line number), std::domain_error
  /// (listing non-positive values), or std::runtime_error for I/O failures.
  static Sample load(const std::string& path);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const std::string& label() const { return label_; }

  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  double median() const;
  double mean() const;

  /// FNV-1a hash of the sorted values rendered with 17 significant digits;
  /// stable across whitespace and ordering variations of the source file.
  std::uint64_t checksum() const;

 private:
  std::vector<double> values_;
  std::string label_;
};

}  // namespace cel

#endif  // CEL_SAMPLE_HPP
