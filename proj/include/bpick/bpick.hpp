/*
   Copyright 2026 The bpick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Umbrella header. JSON support lives in json_io.hpp and needs json.hpp.

#ifndef BPICK_BPICK_HPP
#define BPICK_BPICK_HPP

#include "errors.hpp"
#include "scalar.hpp"
#include "extended.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"
#include "poly_matrix.hpp"
#include "matrix.hpp"
#include "pick_matrix.hpp"
#include "reduction.hpp"
#include "solver.hpp"
#include "schur_disk.hpp"

#endif  // BPICK_BPICK_HPP
