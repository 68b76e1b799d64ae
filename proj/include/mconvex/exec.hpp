// Copyright 2026 The mconvex Authors
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

#ifndef MCONVEX_EXEC_HPP_
#define MCONVEX_EXEC_HPP_

namespace mconvex {

// Selects the OpenMP kernel or its serial reference. Both produce identical
// results, including which witness is reported.
enum class Exec { kSerial, kParallel };

// Below this many rows the OpenMP kernels run on one thread.
inline constexpr int kParallelMinRows = 64;

}  // namespace mconvex

#endif  // MCONVEX_EXEC_HPP_
