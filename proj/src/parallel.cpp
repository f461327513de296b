// Copyright 2026 The qeff Authors
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

#include "qeff/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace qeff {

namespace {

int env_threads() {
    const char *value = std::getenv("QEFF_NUM_THREADS");
    if (value == nullptr) {
        return 0;
    }
    char *end = nullptr;
    long n = std::strtol(value, &end, 10);
    if (end == value || n <= 0) {
        return 0;
    }
    return static_cast<int>(n);
}

std::atomic<int> &override_threads() {
    static std::atomic<int> n{env_threads()};
    return n;
}

}  // namespace

int num_threads() {
    int n = override_threads().load();
    return n > 0 ? n : omp_get_max_threads();
}

void set_num_threads(int n) {
    override_threads().store(n > 0 ? n : env_threads());
}

}  // namespace qeff
