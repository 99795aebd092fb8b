// Copyright 2026 The polya-cert Authors
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

// Rows of the published certification trace from lambda = 3: (lambda, e, delta).

#include <array>

#include "polya/rational.hpp"

namespace polya::testing {

struct TraceRow {
  const char* lambda;
  const char* e_lower;
  const char* delta_lower;
};

inline constexpr std::array<TraceRow, 13> kPublishedTrace = {{
    {"3", "3/4", "6/13"},
    {"45/13", "1355/676", "223/221"},
    {"76/17", "868/289", "584/493"},
    {"164/29", "3368/841", "995/783"},
    {"187/27", "11687/2916", "29/27"},
    {"8", "3", "43/60"},
    {"523/60", "57671/14400", "227/260"},
    {"374/39", "6098/1521", "719/897"},
    {"239/23", "10591/2116", "339/368"},
    {"181/16", "4103/1024", "11/16"},
    {"12", "6", "24/25"},
    {"324/25", "2506/625", "241/400"},
    {"217/16", "7183/1024", "271/272"},
}};

inline constexpr const char* kPublishedFinal = "495/34";

}  // namespace polya::testing
