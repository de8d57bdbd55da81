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

#include "parbasis/random.h"

#include <cmath>

namespace parbasis {

BernoulliThreshold::BernoulliThreshold(double p) {
  if (!(p > 0.0)) return;
  if (p >= 1.0) {
    always = true;
    return;
  }
  // p * 2^64, computed in long double to keep the low bits.
  const long double scaled = std::ldexp(static_cast<long double>(p), 64);
  threshold = static_cast<std::uint64_t>(scaled);
}

}  // namespace parbasis
