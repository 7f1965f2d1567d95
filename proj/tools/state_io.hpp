// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALQM_TOOLS_STATE_IO_HPP_
#define REALQM_TOOLS_STATE_IO_HPP_

// Versioned plain-text files for states and operators.
//
//   header line:  realqm-state 1 <kind> <d1> ... <dN>
//                 realqm-operator 1 <kind> <d1> ... <dN>
//   kind:         complex | real | compact-real
//   payload:      whitespace-separated decimals, row-major, 17 significant
//                 digits on output.
//
// complex vectors hold re/im pairs per entry; compact-real vectors hold the
// full re part then the full im part; real payloads are plain.  Operators are
// DxD (both blocks for compact-real).

#include <string>
#include <vector>

#include "config.hpp"
#include "realqm/dense.hpp"
#include "realqm/shape.hpp"

namespace rqm::cli {

enum class PayloadKind { complex_kind, real_kind, compact_real };

const char* payload_kind_name(PayloadKind k);

struct VectorFile {
  PayloadKind kind;
  std::vector<int> dims;
  ComplexVector complex_data;  // kind == complex
  RealVector real_data;        // kind == real
  RealVector re_part, im_part;  // kind == compact-real
};

struct MatrixFile {
  PayloadKind kind;
  std::vector<int> dims;
  ComplexMatrix complex_data;
  RealMatrix real_data;
  RealMatrix re_block, im_block;
};

VectorFile read_vector_file(const std::string& path);
MatrixFile read_matrix_file(const std::string& path);

void write_vector_file(const std::string& path, const VectorFile& file);
void write_matrix_file(const std::string& path, const MatrixFile& file);

}  // namespace rqm::cli

#endif  // REALQM_TOOLS_STATE_IO_HPP_
