/* Copyright 2026 The gsp4 Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef GSP4_GSP4_HPP_
#define GSP4_GSP4_HPP_

#include "gsp4/field.hpp"
#include "gsp4/fq_matrix.hpp"
#include "gsp4/finite_group.hpp"
#include "gsp4/group.hpp"
#include "gsp4/conjugacy.hpp"
#include "gsp4/classfn.hpp"
#include "gsp4/gl2.hpp"
#include "gsp4/parabolic.hpp"
#include "gsp4/whittaker.hpp"
#include "gsp4/irreducibles.hpp"
#include "gsp4/families.hpp"
#include "gsp4/dimensions.hpp"
#include "gsp4/verify.hpp"
#include "gsp4/store.hpp"

#endif  // GSP4_GSP4_HPP_
