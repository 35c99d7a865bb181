// Copyright 2026 The oec Authors
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

#ifndef OEC_OEC_HPP_
#define OEC_OEC_HPP_

#include "oec/error.hpp"
#include "oec/integer.hpp"
#include "oec/group.hpp"
#include "oec/gspace.hpp"
#include "oec/orbifold.hpp"
#include "oec/wreath.hpp"
#include "oec/series.hpp"
#include "oec/euler_calc.hpp"
#include "oec/lie_models.hpp"
#include "oec/spec_io.hpp"

#endif  // OEC_OEC_HPP_
