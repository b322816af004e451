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
#ifndef LNPS_ENGINE_H_INCLUDED
#define LNPS_ENGINE_H_INCLUDED

#include <lnps/config.h>
#include <lnps/model.h>
#include <lnps/solver.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lnps {

//! Exact non-negative rational, e.g. a budget escalation factor.
struct Rational {
	std::uint64_t num{1};
	std::uint64_t den{1};

	//! Parses "1", "1.05" or "21/20". Throws UsageError on malformed input.
	static Rational parse(std::string_view text);
	double      toDouble() const { return static_cast<double>(num) / static_cast<double>(den); }
	std::string toString() const;
	bool atLeastOne() const { return num >= den; }
	bool isOne() const { return num == den; }
};

enum class AcceptPolicy { StrictImproving, NonWorsening };

//! Which destroy operator a DestroySpec is executed with.
enum class DestroyOperator {
	Auto,      //!< random atoms for full argument masks, random constants otherwise
	Atoms,
	Constants,
};

struct EngineParams {
	Budget                                   initBudget{Budget::conflicts(1000)};
	Budget                                   iterBudget{Budget::conflicts(100)};
	Rational                                 escalation{105, 100};
	AcceptPolicy                             accept{AcceptPolicy::StrictImproving};
	bool                                     tightenBound{false};
	std::optional<std::uint64_t>             maxIterations;
	std::optional<std::chrono::milliseconds> wallClockLimit;
	std::uint64_t                            seed{0};
	DestroyOperator                          destroyOperator{DestroyOperator::Auto};
	//! Replaces the percentage of every destroy spec if set.
	std::optional<int>                       percentOverride;
	SolverOptions                            solver{};

	//! Throws UsageError if a field is out of range.
	void validate() const;
};

struct IterationRecord {
	std::uint64_t       step{0};
	std::size_t         destroyed{0};
	SolveStatus         status{SolveStatus::BudgetExhausted};
	std::optional<Cost> temporalCost;
	bool                accepted{false};
	Cost                currentCost{0};
	Cost                bestCost{0};
	std::uint64_t       conflicts{0};
	bool operator==(const IterationRecord&) const = default;
};

struct Outcome {
	Solution                     best;
	bool                         provenOptimal{false};
	std::uint64_t                iterations{0};
	std::uint64_t                initialConflicts{0};
	//! Cost of the solution found by the initial solve.
	Cost                         initialCost{0};
	std::vector<IterationRecord> trace;

	std::uint64_t totalConflicts() const;
};

//! Called after every iteration with its record and the temporal solution (null if the iteration found none).
using IterationObserver = std::function<void(const IterationRecord&, const Solution*)>;

bool   accept(Cost temporalCost, Cost currentCost, AcceptPolicy policy);
//! max_conflicts' = ceil(max_conflicts * factor); unlimited stays unlimited.
Budget escalateBudget(const Budget& budget, const Rational& factor);

/*!
 * Runs large neighborhood prioritized search on \p problem.
 *
 * Starts from a solution found with params.initBudget, then repeatedly
 * destroys part of the current solution's projected atoms, prefers (or fixes)
 * the undestroyed ones via directives (or assumptions), and re-solves with an
 * escalating conflict budget. The run finishes when an iteration proves
 * global optimality (only possible without fixing) or a limit is reached.
 *
 * Throws EngineError if no initial solution is found, ConfigError on a
 * configuration that does not fit the problem and UsageError on bad params.
 */
Outcome run(const Problem& problem, const LnpsConfig& config, const EngineParams& params,
            const IterationObserver& observer = {});

std::string_view toString(AcceptPolicy p);
std::string_view toString(DestroyOperator op);

} // namespace lnps
#endif
