// SPDX-License-Identifier: Apache-2.0
//
// eigsense - eigenvalue-based spectrum sensing under correlated noise
// Copyright (C) 2026 The eigsense authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace eigsense
{

// Evaluates fn(i) for i in [0, count) on up to `workers` threads. Each result is stored at its own index, so the
// returned vector does not depend on scheduling. If any call throws, the exception of the lowest index is rethrown.
template <class Result, class Fn>
std::vector<Result> run_trials(std::size_t count, int workers, Fn &&fn)
{
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};

    auto work = [&]()
    {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        {
            try
            {
                results[i] = fn(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t threads = workers > 1 ? std::min<std::size_t>(static_cast<std::size_t>(workers), count) : 1;
    if (threads <= 1)
        work();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }

    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace eigsense
