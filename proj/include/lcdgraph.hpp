// Copyright 2026 The lcdgraph Authors
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

#ifndef LCDGRAPH_LCDGRAPH_HPP
#define LCDGRAPH_LCDGRAPH_HPP

#include "lcdgraph/canonical.hpp"
#include "lcdgraph/code.hpp"
#include "lcdgraph/correspondence.hpp"
#include "lcdgraph/equivalence.hpp"
#include "lcdgraph/error.hpp"
#include "lcdgraph/field.hpp"
#include "lcdgraph/graph.hpp"
#include "lcdgraph/io.hpp"
#include "lcdgraph/matrix.hpp"
#include "lcdgraph/paley.hpp"
#include "lcdgraph/random.hpp"
#include "lcdgraph/srg_bounds.hpp"
#include "lcdgraph/two_graph.hpp"
#include "lcdgraph/verify.hpp"
#include "lcdgraph/weights.hpp"

#endif  // LCDGRAPH_LCDGRAPH_HPP
