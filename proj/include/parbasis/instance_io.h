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

#ifndef PARBASIS_INSTANCE_IO_H_
#define PARBASIS_INSTANCE_IO_H_

#include <functional>
#include <iosfwd>
#include <string>

#include "parbasis/instance.h"

namespace parbasis {

// Line-oriented instance text:
//
//   graphic m n       followed by m lines "u v"
//   cographic m n     followed by m lines "u v"
//   binary m r        followed by m hex columns (see Gf2Vector::ToHex)
//
// Blank lines and lines starting with '#' are ignored.
MatroidInstance ParseInstance(std::istream& in);
MatroidInstance ReadInstanceFile(const std::string& path);

std::string FormatInstance(const MatroidInstance& instance);

// Writes to a temporary sibling and renames it into place.
void WriteFileAtomically(const std::string& path, const std::string& contents);
void WriteFileAtomically(const std::string& path,
                         const std::function<void(std::ostream&)>& write);

}  // namespace parbasis

#endif  // PARBASIS_INSTANCE_IO_H_
