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
#ifndef LNPS_SOLVER_H_INCLUDED
#define LNPS_SOLVER_H_INCLUDED

#include <lnps/model.h>

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lnps {

//! A branching directive: decide on \c var before every variable of a lower level, trying \c sign first.
struct Directive {
	Var  var{0};
	int  level{1};
	bool sign{true};
	bool operator==(const Directive&) const = default;
};

//! Per-call resource limit. Conflicts are counted per solve call.
struct Budget {
	std::optional<std::uint64_t>             maxConflicts;
	std::optional<std::chrono::milliseconds> wallClock;

	static Budget unlimited() { return {}; }
	static Budget conflicts(std::uint64_t n) { return Budget{n, std::nullopt}; }
	bool bounded() const { return maxConflicts.has_value(); }
	bool operator==(const Budget&) const = default;
};

enum class SolveStatus { Optimum, Satisfiable, Unsatisfiable, BudgetExhausted };

std::string_view toString(SolveStatus s);

struct SolveResult {
	SolveStatus             status{SolveStatus::BudgetExhausted};
	std::optional<Solution> model;
	std::uint64_t           conflicts{0};
	//! Costs of the models found during the call, in order of discovery.
	std::vector<Cost>       modelCosts;
	//! True if the wall-clock limit stopped the call.
	bool                    interrupted{false};
};

struct SolverOptions {
	//! Polarity tried first for variables without a directive (and without a saved phase).
	bool          defaultSign{false};
	bool          phaseSaving{false};
	//! Conflicts in the first Luby restart interval.
	std::uint32_t restartBase{100};
	double        varDecay{0.95};
};

/*!
 * Conflict-driven systematic search over a Problem with a native "cost < bound"
 * propagator for the linear objective.
 *
 * A session keeps its hard clauses and conflict clauses that were derived
 * independently of the objective bound across calls. Assumptions, directives
 * and bounds are per call and never persist after solve() returns.
 *
 * Branching: an unassigned variable of the highest directive level is chosen
 * (undirected variables have level 0); ties are broken by activity. The first
 * polarity is the directive sign, otherwise the backend's default policy.
 */
class Solver {
public:
	explicit Solver(const Problem& problem, SolverOptions opts = {});
	~Solver();
	Solver(Solver&&) noexcept;
	Solver& operator=(Solver&&) noexcept;
	Solver(const Solver&)            = delete;
	Solver& operator=(const Solver&) = delete;

	/*!
	 * Branch-and-improve: repeatedly searches for a model satisfying the clauses,
	 * the assumptions and (cost < current bound) and tightens the bound to each
	 * model's cost. If \p initialBound is given, only models with cost <= initialBound
	 * are admitted.
	 *
	 * Throws UsageError on directives with level < 1 or out-of-range variables.
	 */
	SolveResult solve(std::span<const Lit> assumptions, std::span<const Directive> directives, const Budget& budget,
	                  std::optional<Cost> initialBound = std::nullopt);
	SolveResult solve(const Budget& budget = Budget::unlimited()) { return solve({}, {}, budget); }

	//! First heuristic decision of the most recent call; absent if the first model needed none.
	//! Throws UsageError if solve() was never called.
	std::optional<Lit> firstDecision() const;

	const Problem& problem() const;
	std::size_t    numLearnts() const;

private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

} // namespace lnps
#endif
