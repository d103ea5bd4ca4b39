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

// Umbrella header for the whole toolkit.

#pragma once

#include "oakit/algebra/difference_scheme.hpp"
#include "oakit/algebra/finite_field.hpp"
#include "oakit/algebra/group.hpp"
#include "oakit/algebra/hadamard.hpp"
#include "oakit/algebra/stacking.hpp"
#include "oakit/catalog/fixtures.hpp"
#include "oakit/catalog/registry.hpp"
#include "oakit/catalog/seeds.hpp"
#include "oakit/constructions/bush.hpp"
#include "oakit/constructions/certificate.hpp"
#include "oakit/constructions/column_selection.hpp"
#include "oakit/constructions/families.hpp"
#include "oakit/constructions/feasibility.hpp"
#include "oakit/constructions/juxtapose.hpp"
#include "oakit/constructions/partition.hpp"
#include "oakit/constructions/replacement.hpp"
#include "oakit/core/distance.hpp"
#include "oakit/core/error.hpp"
#include "oakit/core/mixed_array.hpp"
#include "oakit/core/strength.hpp"
#include "oakit/core/subsets.hpp"
#include "oakit/io/report.hpp"
#include "oakit/io/text_format.hpp"
#include "oakit/quantum/density.hpp"
#include "oakit/quantum/state.hpp"
#include "oakit/search/search.hpp"
