// Copyright 2026 The qising Authors
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

#ifndef QISING_QISING_HPP_
#define QISING_QISING_HPP_

#include "qising/bimatrix.hpp"
#include "qising/eisert.hpp"
#include "qising/equilibrium.hpp"
#include "qising/errors.hpp"
#include "qising/games.hpp"
#include "qising/ising_map.hpp"
#include "qising/ising_oracle.hpp"
#include "qising/tensor.hpp"

#endif  // QISING_QISING_HPP_
