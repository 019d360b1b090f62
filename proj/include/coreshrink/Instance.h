/*
 *  Copyright (C) 2026  The coreshrink authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef CORESHRINK_INSTANCE_H
#define CORESHRINK_INSTANCE_H

#include "Program.h"
#include "WeakConstraints.h"

namespace coreshrink {

enum class SourceDialect { GroundAsp, Wcnf };

struct ParsedInstance {
    Program program;
    WeakConstraintSet weak;
    std::vector<int> visible; // sorted atom ids shown in models
};

} // namespace coreshrink

#endif
