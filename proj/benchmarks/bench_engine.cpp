//
// Copyright (c) 2026 The lnps authors
//
// This file is part of lnps.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <lnps/config.h>
#include <lnps/destroy.h>
#include <lnps/engine.h>
#include <lnps/harness.h>

#include <benchmark/benchmark.h>

namespace {
using namespace lnps;

void bmEngineRun(benchmark::State& state) {
	Problem      p   = generateInstance(1000, 200, 0.3, 1.0);
	LnpsConfig   cfg = parseConfig("_lnps_project(sel,1). _lnps_destroy(sel,1,1,p(20)). _lnps_prioritize(sel,1,1,true).");
	EngineParams params;
	params.initBudget    = Budget::conflicts(200);
	params.iterBudget    = Budget::conflicts(50);
	params.escalation    = Rational::parse("1");
	params.tightenBound  = true;
	params.maxIterations = static_cast<std::uint64_t>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(run(p, cfg, params));
}
BENCHMARK(bmEngineRun)->Arg(10)->Arg(36)->Unit(benchmark::kMillisecond);

void bmTourRun(benchmark::State& state) {
	auto n = static_cast<std::size_t>(state.range(0));
	std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, 0));
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) d[i][j] = i == j ? 0 : static_cast<Weight>(1 + (i * 7 + j * 13) % 29);
	}
	Problem      p   = makeTourInstance(d);
	LnpsConfig   cfg = parseConfig("_lnps_project(cycle,2). _lnps_destroy(cycle,2,3,p(30)). _lnps_prioritize(cycle,2,1,true).");
	EngineParams params;
	params.initBudget    = Budget::conflicts(500);
	params.iterBudget    = Budget::conflicts(50);
	params.maxIterations = 20;
	for (auto _ : state) benchmark::DoNotOptimize(run(p, cfg, params));
}
BENCHMARK(bmTourRun)->Arg(5)->Unit(benchmark::kMillisecond);
} // namespace
