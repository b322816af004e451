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
#include <lnps/harness.h>
#include <lnps/solver.h>

#include <benchmark/benchmark.h>

namespace {
using namespace lnps;

void bmSolveOptimum(benchmark::State& state) {
	Problem p = generateInstance(17, static_cast<std::uint32_t>(state.range(0)), 0.5, 1.0);
	for (auto _ : state) {
		Solver s(p);
		benchmark::DoNotOptimize(s.solve());
	}
}
BENCHMARK(bmSolveOptimum)->Arg(20)->Arg(40)->Arg(60);

void bmSolveBudget(benchmark::State& state) {
	Problem p = generateInstance(1000, 200, 0.3, 1.0);
	Budget  b = Budget::conflicts(static_cast<std::uint64_t>(state.range(0)));
	std::uint64_t conflicts = 0;
	for (auto _ : state) {
		Solver      s(p);
		SolveResult r = s.solve(b);
		conflicts += r.conflicts;
		benchmark::DoNotOptimize(r);
	}
	state.counters["conflicts/s"] = benchmark::Counter(static_cast<double>(conflicts), benchmark::Counter::kIsRate);
}
BENCHMARK(bmSolveBudget)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

// Repeated calls on one solver with fresh assumptions, as the engine issues them.
void bmAssumptionCalls(benchmark::State& state) {
	Problem p = generateInstance(1001, 200, 0.3, 1.0);
	Solver  s(p);
	std::vector<Lit> fix;
	for (Var v = 1; v <= 40; ++v) fix.push_back(Lit::neg(v));
	for (auto _ : state) benchmark::DoNotOptimize(s.solve(fix, {}, Budget::conflicts(50)));
}
BENCHMARK(bmAssumptionCalls)->Unit(benchmark::kMicrosecond);

void bmBruteForce(benchmark::State& state) {
	Problem p = generateInstance(5, static_cast<std::uint32_t>(state.range(0)), 0.7, 1.0);
	for (auto _ : state) benchmark::DoNotOptimize(bruteForceOptimum(p));
}
BENCHMARK(bmBruteForce)->Arg(12)->Arg(18);
} // namespace
