// xmamimo -- subarray receiver library for extremely large aperture massive MIMO
// Copyright (C) 2026 the xmamimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>

#include "xmamimo/types.hpp"

namespace xmamimo {

// Matrix dump formats for cross-implementation comparison.
//
// Binary: 8-byte magic "XMAMAT01", uint32 element kind (0 = real, 1 =
// complex), uint64 rows, uint64 cols, then row-major little-endian IEEE-754
// 64-bit floats. Complex entries are stored as (re, im) pairs.
//
// Text: header line "<rows> <cols> real|complex", then one row per line,
// entries separated by single spaces, complex entries written as "re im"
// pairs, printed with 17 significant digits.

void write_matrix_binary(const std::string& path, const RealMatrix& m);
void write_matrix_binary(const std::string& path, const CMatrix& m);
void write_matrix_text(const std::string& path, const RealMatrix& m);
void write_matrix_text(const std::string& path, const CMatrix& m);

RealMatrix read_real_matrix_binary(const std::string& path);
CMatrix read_complex_matrix_binary(const std::string& path);
RealMatrix read_real_matrix_text(const std::string& path);
CMatrix read_complex_matrix_text(const std::string& path);

}  // namespace xmamimo
