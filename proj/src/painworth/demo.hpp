// Copyright 2026 The painworth Authors
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

#include <string>

#include "painworth/domain.hpp"

namespace painworth {

/// Manufacturing case study: three operational pains and one structural
/// pain, valued for the machine operator (customer) and the machine
/// manufacturer (provider). Identical to data/demo.json.
Portfolio demo_portfolio();

/// Canonical JSON of demo_portfolio().
std::string demo_fixture_json();

}  // namespace painworth
