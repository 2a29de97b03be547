// Copyright 2026 The quadcover Authors
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


// Convenience header pulling in the whole library.

#ifndef QUADCOVER_QUADCOVER_HPP_
#define QUADCOVER_QUADCOVER_HPP_

#include "quadcover/canonical.hpp"
#include "quadcover/covers.hpp"
#include "quadcover/gf5core.hpp"
#include "quadcover/golden.hpp"
#include "quadcover/linalg.hpp"
#include "quadcover/picard.hpp"
#include "quadcover/report.hpp"
#include "quadcover/sheaves.hpp"
#include "quadcover/symmetry.hpp"

#endif  // QUADCOVER_QUADCOVER_HPP_
