// Copyright 2026 The vmu Authors
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


// Umbrella header.

#pragma once

#include "vmu/bounds.hpp"
#include "vmu/certificate.hpp"
#include "vmu/clifford.hpp"
#include "vmu/error.hpp"
#include "vmu/f2.hpp"
#include "vmu/field.hpp"
#include "vmu/graph.hpp"
#include "vmu/io.hpp"
#include "vmu/json_io.hpp"
#include "vmu/measurement.hpp"
#include "vmu/montecarlo.hpp"
#include "vmu/oracle.hpp"
#include "vmu/parallel.hpp"
#include "vmu/projective.hpp"
#include "vmu/protocol.hpp"
#include "vmu/random.hpp"
#include "vmu/statevector.hpp"
#include "vmu/synth.hpp"
#include "vmu/synth_geometric.hpp"
#include "vmu/synth_rank.hpp"

namespace vmu {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vmu
