// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALQM_REALQM_HPP_
#define REALQM_REALQM_HPP_

#include "realqm/bellswap.hpp"
#include "realqm/complexqm.hpp"
#include "realqm/dense.hpp"
#include "realqm/random.hpp"
#include "realqm/real_physics.hpp"
#include "realqm/realmap.hpp"
#include "realqm/shape.hpp"
#include "realqm/tensor_ops.hpp"
#include "realqm/verification.hpp"

#endif  // REALQM_REALQM_HPP_
