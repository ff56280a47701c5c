/*
 * Copyright 2026 The cca2ta Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CCA2TA_CCA2TA_HPP_
#define CCA2TA_CCA2TA_HPP_

#include "cca2ta/adversaries.hpp"
#include "cca2ta/cost_ledger.hpp"
#include "cca2ta/cramer_shoup.hpp"
#include "cca2ta/digest.hpp"
#include "cca2ta/errors.hpp"
#include "cca2ta/games.hpp"
#include "cca2ta/goldwasser_micali.hpp"
#include "cca2ta/leaky.hpp"
#include "cca2ta/natural.hpp"
#include "cca2ta/numtheory.hpp"
#include "cca2ta/scheme.hpp"
#include "cca2ta/serialization.hpp"
#include "cca2ta/suite.hpp"
#include "cca2ta/timing.hpp"

#endif  // CCA2TA_CCA2TA_HPP_
