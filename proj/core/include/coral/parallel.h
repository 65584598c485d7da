// core/include/coral/parallel.h

// Copyright 2026  The Coral Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace coral {

// Runs fn(begin, end) on contiguous index ranges across hardware threads and
// joins. Ranges are fixed by (n, thread count), so any writer that owns its
// output slots stays deterministic. Exceptions propagate to the caller.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn);

// Per-index convenience wrapper over parallel_chunks.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace coral
