// Copyright 2026 The swogr Authors
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

// Everything except the HTTP binding (include swogr/http.hpp for that).

#include "swogr/binarize.hpp"
#include "swogr/catalog.hpp"
#include "swogr/components.hpp"
#include "swogr/config.hpp"
#include "swogr/embed.hpp"
#include "swogr/engine.hpp"
#include "swogr/error.hpp"
#include "swogr/eval.hpp"
#include "swogr/features.hpp"
#include "swogr/geometry.hpp"
#include "swogr/image.hpp"
#include "swogr/image_io.hpp"
#include "swogr/iswa.hpp"
#include "swogr/render.hpp"
#include "swogr/rules.hpp"
#include "swogr/segment.hpp"
#include "swogr/service.hpp"
#include "swogr/store.hpp"
#include "swogr/strokes.hpp"
#include "swogr/swml.hpp"
#include "swogr/swml_json.hpp"
#include "swogr/xml.hpp"
