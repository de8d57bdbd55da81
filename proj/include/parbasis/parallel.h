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

#ifndef PARBASIS_PARALLEL_H_
#define PARBASIS_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace parbasis {

// Worker count used by batch evaluation. 0 selects the hardware concurrency.
void SetThreadCount(unsigned threads);
unsigned ThreadCount();

// Splits [0, n) into at most ThreadCount() contiguous chunks, in index order,
// and runs `body(chunk, begin, end)` on each. The first exception thrown by
// any chunk is rethrown after all chunks finish.
void ParallelChunks(
    std::size_t n,
    const std::function<void(std::size_t chunk, std::size_t begin,
                             std::size_t end)>& body,
    unsigned max_chunks = 0);

// Number of chunks ParallelChunks will use for n items.
std::size_t ChunkCount(std::size_t n, unsigned max_chunks = 0);

}  // namespace parbasis

#endif  // PARBASIS_PARALLEL_H_
