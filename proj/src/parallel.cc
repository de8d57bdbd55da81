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

#include "parbasis/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace parbasis {
namespace {

std::atomic<unsigned> g_threads{0};

}  // namespace

void SetThreadCount(unsigned threads) { g_threads = threads; }

unsigned ThreadCount() {
  const unsigned configured = g_threads;
  if (configured > 0) return configured;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t ChunkCount(std::size_t n, unsigned max_chunks) {
  unsigned threads = ThreadCount();
  if (max_chunks > 0) threads = std::min(threads, max_chunks);
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
}

void ParallelChunks(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
    unsigned max_chunks) {
  const std::size_t chunks = ChunkCount(n, max_chunks);
  if (chunks == 1) {
    body(0, 0, n);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace parbasis
