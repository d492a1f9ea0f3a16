// Copyright 2026 The MMVC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "mmvc/security/harness.h"

namespace mmvc::security {

// Every strategy asks the KeyGen oracle for a random F, prepares a random
// input and computes the honest response (y, V) before deviating from it.

// Returns (y, V) unchanged. Never wins.
std::unique_ptr<Adversary> MakeHonestStrategy();
// y-hat = y + e_1, V-hat = V.
std::unique_ptr<Adversary> MakeBitFlipStrategy();
// y-hat = y + c e_1 (c != 0), V-hat = V g^v for uniform v.
std::unique_ptr<Adversary> MakeRandomOffsetStrategy();
// y-hat = c y, V-hat = V^c for uniform c not in {0, 1}.
std::unique_ptr<Adversary> MakeScaledStrategy();
// Answers x_2 with the response computed for a different x_1.
std::unique_ptr<Adversary> MakeReplayStrategy();
// Spends every Verify query on a distinct guess v for V-hat = V g^v with
// y-hat = y + e_1, and replays an accepted guess as the final forgery.
std::unique_ptr<Adversary> MakeAdaptiveOffsetStrategy();

std::vector<std::unique_ptr<Adversary>> AllStrategies();
std::unique_ptr<Adversary> MakeStrategy(std::string_view name);

}  // namespace mmvc::security
