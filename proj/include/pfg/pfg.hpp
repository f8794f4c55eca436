/*
 * Copyright 2026 The pfgames Authors.
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

#pragma once

#include "pfg/corpus.hpp"
#include "pfg/errors.hpp"
#include "pfg/family_checks.hpp"
#include "pfg/io.hpp"
#include "pfg/partitions.hpp"
#include "pfg/random_partitions.hpp"
#include "pfg/rational.hpp"
#include "pfg/report.hpp"
#include "pfg/restriction_ops.hpp"
#include "pfg/sampling.hpp"
#include "pfg/tu_games.hpp"
#include "pfg/tux_games.hpp"
#include "pfg/verify.hpp"
