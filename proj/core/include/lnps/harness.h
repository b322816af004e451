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
#ifndef LNPS_HARNESS_H_INCLUDED
#define LNPS_HARNESS_H_INCLUDED

#include <lnps/config.h>
#include <lnps/engine.h>
#include <lnps/model.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lnps {

struct OracleResult {
	bool satisfiable{false};
	//! Minimum cost over all feasible assignments; meaningless if !satisfiable.
	Cost cost{0};
};

constexpr std::uint32_t oracle_max_vars = 24;

//! Exhaustive enumeration of all 2^n assignments. Throws UsageError if n > oracle_max_vars.
OracleResult  bruteForceOptimum(const Problem& p);
//! Number of assignments satisfying all clauses. Same guard as bruteForceOptimum().
std::uint64_t countModels(const Problem& p);

/*!
 * Random problem with ceil(clauseDensity * 4.26 * numVars) 3-clauses,
 * positive objective literals (weight 1..9) on roughly objectiveDensity of
 * the variables, and an atom \c sel(v) for every variable v. Redraws until
 * the instance is satisfiable: checked by enumeration up to 20 variables and
 * by the solver above that.
 */
Problem generateInstance(std::uint64_t seed, std::uint32_t numVars, double clauseDensity, double objectiveDensity);

/*!
 * Directed tour selection over n <= 5 cities: atom \c cycle(i,j) for each
 * ordered pair i != j, exactly one outgoing and one incoming arc per city and
 * no 2-cycles. For n <= 5 the models are exactly the Hamiltonian cycles.
 * \p dist[i][j] is the cost of arc (i+1,j+1).
 */
Problem makeTourInstance(const std::vector<std::vector<Weight>>& dist);

struct RunSpec {
	std::string                instancePath;
	std::string                configPath;
	EngineParams               params;
	//! Seeds of the repetitions, one run each.
	std::vector<std::uint64_t> seeds;
	unsigned                   threads{1};
};

struct SeedRun {
	std::uint64_t                seed{0};
	std::optional<Cost>          cost;
	std::optional<Cost>          initialCost;
	bool                         provenOptimal{false};
	std::uint64_t                iterations{0};
	std::uint64_t                conflicts{0};
	double                       wallMs{0};
	std::string                  error;
	std::vector<IterationRecord> trace;
};

struct RunReport {
	std::string          instance;
	std::vector<SeedRun> runs; // sorted by seed
	std::optional<double> avg;
	std::optional<Cost>   min;
	std::optional<Cost>   max;
	std::size_t           provenRuns{0};
	std::size_t           failedRuns{0};
	// Single-shot solve with the same total conflict budget.
	std::uint64_t         plainBudget{0};
	SolveStatus           plainStatus{SolveStatus::BudgetExhausted};
	std::optional<Cost>   plainCost;
	//! avg / plainCost.
	std::optional<double> rate;
	double                wallMs{0};
};

//! Conflicts an engine run may use at most: initial budget plus all iteration budgets. Absent if unbounded.
std::optional<std::uint64_t> plannedConflicts(const EngineParams& params);

//! Fills avg, min, max, provenRuns, failedRuns and rate from runs and plainCost.
void summarize(RunReport& report);

RunReport runSuite(const std::string& name, const Problem& problem, const LnpsConfig& config, const EngineParams& params,
                   std::span<const std::uint64_t> seeds, unsigned threads = 1);
//! Reads the files named in \p spec. Throws Error on unreadable or malformed input.
RunReport runSuite(const RunSpec& spec);

std::string readFile(const std::string& path);

//! One CSV row per report plus an "Average rate" footer.
void writeCsv(std::ostream& os, std::span<const RunReport> reports);
//! One JSON object per line and iteration.
void writeTrace(std::ostream& os, const RunReport& report);
void writeTrace(std::ostream& os, const std::string& instance, std::uint64_t seed, std::span<const IterationRecord> trace);

} // namespace lnps
#endif
