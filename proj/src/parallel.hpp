/* Copyright (C) 2026 The zdspec Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef ZDSPEC_PARALLEL_HPP
#define ZDSPEC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace zdspec::detail {

unsigned resolve_threads(unsigned requested);

// Splits [0, count) into contiguous blocks, one per worker, and calls
// body(begin, end) for each. Block boundaries depend only on count and the
// worker count. The first exception thrown by any block is rethrown.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace zdspec::detail

#endif  // ZDSPEC_PARALLEL_HPP
