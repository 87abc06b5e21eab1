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

#ifndef LAGMAT_LAGMAT_HPP_
#define LAGMAT_LAGMAT_HPP_

#include "lagmat/axioms.hpp"
#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/io.hpp"
#include "lagmat/linalg.hpp"
#include "lagmat/matrix.hpp"
#include "lagmat/orient.hpp"
#include "lagmat/pairs.hpp"
#include "lagmat/pfaffian.hpp"
#include "lagmat/random.hpp"
#include "lagmat/repr.hpp"
#include "lagmat/signmap.hpp"

#endif  // LAGMAT_LAGMAT_HPP_
