// Copyright 2026 The snarkpipe Authors.
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

#pragma once

#include "snarkpipe/circuit.hpp"
#include "snarkpipe/corpus.hpp"
#include "snarkpipe/error.hpp"
#include "snarkpipe/field.hpp"
#include "snarkpipe/frontend.hpp"
#include "snarkpipe/group.hpp"
#include "snarkpipe/interactive.hpp"
#include "snarkpipe/pinocchio.hpp"
#include "snarkpipe/polynomial.hpp"
#include "snarkpipe/qap.hpp"
#include "snarkpipe/rng.hpp"
