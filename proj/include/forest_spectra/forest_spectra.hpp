// Copyright 2026 The Authors.
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

// Umbrella header for the library. The command-line front end lives in
// forest_spectra/cli.hpp and is not included here.

#include "forest_spectra/bijections.hpp"
#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/forest.hpp"
#include "forest_spectra/forest_counts.hpp"
#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/hessian_spectra.hpp"
#include "forest_spectra/index_set.hpp"
#include "forest_spectra/lefschetz.hpp"
#include "forest_spectra/matrix.hpp"
#include "forest_spectra/matroid.hpp"
#include "forest_spectra/parallel.hpp"
#include "forest_spectra/polynomial.hpp"
