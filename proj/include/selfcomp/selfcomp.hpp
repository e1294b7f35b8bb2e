// Copyright 2026 The selfcomp Authors
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

#include "selfcomp/channel.hpp"
#include "selfcomp/dynamics.hpp"
#include "selfcomp/error.hpp"
#include "selfcomp/families.hpp"
#include "selfcomp/measures.hpp"
#include "selfcomp/numerics.hpp"
