// Copyright 2026 The oakit Authors
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

#pragma once

#include <vector>

#include "oakit/algebra/difference_scheme.hpp"

namespace oakit::seeds {

/// D_3(18,5,3) over Z_3; row i is the scheme row a_i.
inline DifferenceScheme d3_18_5_3() {
    static const std::vector<std::vector<Symbol>> rows = {
        {0, 0, 0, 0, 1},
        {1, 1, 1, 1, 0},
        {1, 1, 2, 2, 2},
        {1, 0, 1, 0, 2},
        {0, 2, 2, 0, 1},
        {0, 1, 1, 0, 2},
        {0, 1, 0, 1, 2},
        {0, 0, 2, 2, 0},
        {2, 2, 1, 1, 1},
        {2, 2, 0, 0, 2},
        {2, 0, 1, 0, 0},
        {2, 0, 2, 1, 2},
        {0, 2, 0, 1, 0},
        {1, 2, 0, 1, 1},
        {1, 0, 2, 1, 1},
        {2, 1, 1, 0, 1},
        {1, 2, 2, 0, 2},
        {0, 2, 1, 2, 2},
    };
    return DifferenceScheme(MixedArray::from_rows(std::vector<Level>(5, 3), rows), AdditiveGroup::cyclic(3), 3);
}

/// D(3,3,3) over Z_3.
inline DifferenceScheme d_3_3_3() {
    static const std::vector<std::vector<Symbol>> rows = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    return DifferenceScheme(MixedArray::from_rows(std::vector<Level>(3, 3), rows), AdditiveGroup::cyclic(3), 2);
}

}  // namespace oakit::seeds
