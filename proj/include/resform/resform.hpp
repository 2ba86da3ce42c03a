// Copyright 2026 The resform Authors
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

// Convenience header pulling in the whole library.

#ifndef RESFORM_RESFORM_HPP_
#define RESFORM_RESFORM_HPP_

#include "resform/error.hpp"
#include "resform/ring.hpp"
#include "resform/gfield.hpp"
#include "resform/upoly.hpp"
#include "resform/wittring.hpp"
#include "resform/mpoly.hpp"
#include "resform/milnor.hpp"
#include "resform/residue.hpp"
#include "resform/epsilon.hpp"
#include "resform/homog.hpp"

#endif  // RESFORM_RESFORM_HPP_
