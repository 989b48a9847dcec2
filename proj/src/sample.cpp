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

#include "cel/sample.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cel {

Sample::Sample(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) {
    throw std::domain_error("Sample: no observations");
  }
  std::string bad;
  for (double v : values_) {
    if (!std::isfinite(v) || v <= 0.0) {
      if (!bad.empty()) bad += ", ";
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", v);
      bad += buf;
    }
  }
  if (!bad.empty()) {
    throw std::domain_error(
        "Sample: observations must be positive and finite; offending values: " +
        bad);
  }
  std::sort(values_.begin(), values_.end());
}

namespace {

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_double(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Sample Sample::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  bool header_allowed = true;
  int header_line = 0;
  std::string header_text;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') {
      continue;
    }
    // Single-column CSV: tolerate one trailing comma.
    if (!t.empty() && t.back() == ',') {
      t = trim(t.substr(0, t.size() - 1));
    }
    double v;
    if (!parse_double(t, v)) {
      if (header_allowed) {
        // One non-numeric leading row is treated as a CSV header, but only
        // if numeric rows follow it.
        header_allowed = false;
        header_line = line_no;
        header_text = t;
        continue;
      }
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": cannot parse value '" + t + "'");
    }
    header_allowed = false;
    values.push_back(v);
  }
  if (values.empty()) {
    if (header_line > 0) {
      throw ParseError(path + ":" + std::to_string(header_line) +
                       ": cannot parse value '" + header_text + "'");
    }
    throw ParseError(path + ": file contains no observations");
  }
  return Sample(std::move(values), path);
}

double Sample::median() const {
  const size_t n = values_.size();
  return n % 2 == 1 ? values_[n / 2]
                    : 0.5 * (values_[n / 2 - 1] + values_[n / 2]);
}

double Sample::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

std::uint64_t Sample::checksum() const {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a 64 offset basis
  char buf[40];
  for (double v : values_) {
    const int len = std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    for (int i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace cel
