// Copyright 2026 The Authors.
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

// Classic Normaliz input files: row count, column count, one row per line,
// then the mode keyword. The writer is byte-exact so files feed the external
// tool unchanged; a reader is provided for round-trip checks.

#ifndef BASECONE_NORMALIZ_HPP
#define BASECONE_NORMALIZ_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "basecone/vec.hpp"

namespace basecone {

inline std::string normaliz_matrix_string(const std::vector<Vec>& rows,
                                          const std::string& mode = "integral_closure") {
  if (rows.empty()) throw std::invalid_argument("normaliz export: empty matrix");
  const std::size_t cols = rows[0].size();
  std::ostringstream os;
  os << rows.size() << "\n" << cols << "\n";
  for (const Vec& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("normaliz export: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) os << " ";
      os << row[c];
    }
    os << "\n";
  }
  os << mode << "\n";
  return os.str();
}

inline void export_normaliz(const std::vector<Vec>& rows, const std::string& path,
                            const std::string& mode = "integral_closure") {
  if (path.empty()) throw std::invalid_argument("normaliz export: empty output path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("normaliz export: cannot open " + path);
  out << normaliz_matrix_string(rows, mode);
  if (!out) throw std::runtime_error("normaliz export: write failed for " + path);
}

struct NormalizInput {
  std::vector<Vec> rows;
  std::string mode;
};

inline NormalizInput parse_normaliz(std::istream& in) {
  std::size_t nrows = 0, ncols = 0;
  if (!(in >> nrows >> ncols)) throw std::runtime_error("normaliz parse: bad header");
  NormalizInput r;
  r.rows.assign(nrows, Vec(ncols));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      long long x;
      if (!(in >> x)) throw std::runtime_error("normaliz parse: truncated matrix");
      r.rows[i][j] = x;
    }
  if (!(in >> r.mode)) throw std::runtime_error("normaliz parse: missing mode keyword");
  return r;
}

inline NormalizInput parse_normaliz_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("normaliz parse: cannot open " + path);
  return parse_normaliz(in);
}

}  // namespace basecone

#endif  // BASECONE_NORMALIZ_HPP
