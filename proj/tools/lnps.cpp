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
// Command-line front end: plain solving, LNPS runs, oracle verification,
// instance generation and benchmark suites.
#include <lnps/config.h>
#include <lnps/engine.h>
#include <lnps/error.h>
#include <lnps/harness.h>
#include <lnps/model.h>
#include <lnps/random.h>
#include <lnps/solver.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace lnps;

struct EngineFlags {
	std::uint64_t              seed{0};
	std::uint64_t              initConflicts{1000};
	std::uint64_t              iterConflicts{100};
	std::string                escalation{"1.05"};
	std::string                acceptPolicy{"strict"};
	bool                       tighten{false};
	std::optional<std::uint64_t> maxIterations;
	std::optional<double>      timeLimit;
	std::optional<int>         percent;
	std::string                destroyOp{"auto"};
	bool                       phaseSaving{false};

	void add(CLI::App& app) {
		app.add_option("--seed", seed, "Random seed (first seed for bench)");
		app.add_option("--init-conflicts", initConflicts, "Conflict budget of the initial solve")->check(CLI::PositiveNumber);
		app.add_option("--iter-conflicts", iterConflicts, "Conflict budget of the first iteration")->check(CLI::PositiveNumber);
		app.add_option("--escalation", escalation, "Per-iteration budget factor (>= 1), e.g. 1.05 or 21/20");
		app.add_option("--accept", acceptPolicy, "Acceptance policy")->check(CLI::IsMember({"strict", "nonworsening"}));
		app.add_flag("--tighten-bound", tighten, "Admit only models better than the current solution");
		app.add_option("--max-iterations", maxIterations, "Iteration limit");
		app.add_option("--time-limit", timeLimit, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
		app.add_option("--percent", percent, "Override every destroy percentage")->check(CLI::Range(0, 100));
		app.add_option("--operator", destroyOp, "Destroy operator")->check(CLI::IsMember({"auto", "atoms", "constants"}));
		app.add_flag("--phase-saving", phaseSaving, "Reuse last polarities for undirected variables");
	}

	EngineParams params() const {
		EngineParams p;
		p.initBudget      = Budget::conflicts(initConflicts);
		p.iterBudget      = Budget::conflicts(iterConflicts);
		p.escalation      = Rational::parse(escalation);
		p.accept          = acceptPolicy == "strict" ? AcceptPolicy::StrictImproving : AcceptPolicy::NonWorsening;
		p.tightenBound    = tighten;
		p.maxIterations   = maxIterations;
		p.seed            = seed;
		p.percentOverride = percent;
		p.destroyOperator = destroyOp == "atoms" ? DestroyOperator::Atoms
		                  : destroyOp == "constants" ? DestroyOperator::Constants
		                                             : DestroyOperator::Auto;
		p.solver.phaseSaving = phaseSaving;
		if (timeLimit) p.wallClockLimit = std::chrono::milliseconds(static_cast<std::int64_t>(*timeLimit * 1000));
		p.validate();
		return p;
	}
};

void printModel(std::ostream& os, const Solution& s) {
	os << 'v';
	for (Var v = 1; v <= s.assignment.numVars(); ++v) os << ' ' << (s.assignment.value(v) ? std::int64_t(v) : -std::int64_t(v));
	os << " 0\n";
}

int cmdSolve(const std::string& path, std::optional<std::uint64_t> conflicts, std::optional<double> timeLimit, bool model) {
	Problem p = parseInstance(readFile(path));
	Budget  b;
	b.maxConflicts = conflicts;
	if (timeLimit) b.wallClock = std::chrono::milliseconds(static_cast<std::int64_t>(*timeLimit * 1000));
	Solver      s(p);
	SolveResult r = s.solve(b);
	std::cout << "s " << toString(r.status) << '\n';
	if (r.model) std::cout << "o " << r.model->cost << '\n';
	std::cout << "c conflicts " << r.conflicts << '\n';
	if (r.model && model) printModel(std::cout, *r.model);
	return 0;
}

int cmdLnps(const std::string& path, const std::string& cfgPath, const EngineFlags& flags, const std::string& out, bool model) {
	Problem      p   = parseInstance(readFile(path));
	LnpsConfig   cfg = parseConfig(readFile(cfgPath));
	EngineParams params = flags.params();
	Outcome      o   = run(p, cfg, params);
	if (out == "jsonl") {
		writeTrace(std::cout, path, params.seed, o.trace);
	}
	else {
		std::cout << "instance,seed,best,proven_optimal,iterations,conflicts\n"
		          << path << ',' << params.seed << ',' << o.best.cost << ',' << (o.provenOptimal ? 1 : 0) << ','
		          << o.iterations << ',' << o.totalConflicts() << '\n';
	}
	if (model) printModel(std::cout, o.best);
	return 0;
}

int cmdVerify(const std::string& path) {
	Problem      p = parseInstance(readFile(path));
	Solver       s(p);
	SolveResult  r = s.solve();
	OracleResult o = bruteForceOptimum(p);
	bool match = o.satisfiable ? (r.status == SolveStatus::Optimum && r.model->cost == o.cost)
	                           : r.status == SolveStatus::Unsatisfiable;
	std::cout << "solver " << toString(r.status);
	if (r.model) std::cout << ' ' << r.model->cost;
	std::cout << "\noracle " << (o.satisfiable ? "OPTIMUM " + std::to_string(o.cost) : std::string("UNSATISFIABLE")) << '\n'
	          << (match ? "MATCH" : "MISMATCH") << '\n';
	return match ? 0 : 2;
}

int cmdGen(std::uint64_t seed, std::uint32_t vars, double clauseDensity, double objDensity, std::optional<std::uint32_t> tour) {
	if (tour) {
		Rng  rng(seed);
		auto n = *tour;
		std::vector<std::vector<Weight>> dist(n, std::vector<Weight>(n, 0));
		for (auto& row : dist) {
			for (auto& d : row) d = static_cast<Weight>(1 + rng.below(20));
		}
		writeInstance(std::cout, makeTourInstance(dist));
		return 0;
	}
	writeInstance(std::cout, generateInstance(seed, vars, clauseDensity, objDensity));
	return 0;
}

int cmdBench(const std::vector<std::string>& paths, const std::string& cfgPath, const EngineFlags& flags, std::size_t runs,
             unsigned threads, const std::string& out, const std::string& reportFile, const std::string& traceFile) {
	EngineParams params = flags.params();
	LnpsConfig   cfg    = parseConfig(readFile(cfgPath));
	std::vector<std::uint64_t> seeds;
	for (std::size_t i = 0; i != runs; ++i) seeds.push_back(flags.seed + i);

	std::vector<RunReport> reports;
	for (const auto& path : paths) {
		Problem p = parseInstance(readFile(path));
		reports.push_back(runSuite(path, p, cfg, params, seeds, threads));
		const auto& rep = reports.back();
		for (const auto& r : rep.runs) {
			if (!r.error.empty()) std::cerr << path << ": " << r.error << '\n';
		}
		std::cerr << path << ": " << rep.runs.size() << " runs in " << static_cast<long long>(rep.wallMs) << " ms\n";
	}
	auto emit = [&](std::ostream& os, const std::string& kind) {
		if (kind == "csv") writeCsv(os, reports);
		else for (const auto& r : reports) writeTrace(os, r);
	};
	emit(std::cout, out);
	if (!reportFile.empty()) {
		std::ofstream f(reportFile, std::ios::binary);
		emit(f, "csv");
	}
	if (!traceFile.empty()) {
		std::ofstream f(traceFile, std::ios::binary);
		emit(f, "jsonl");
	}
	std::size_t failed = 0;
	for (const auto& r : reports) failed += r.failedRuns;
	return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Large neighborhood prioritized search"};
	app.require_subcommand(1);

	bool printModelFlag = false;

	auto* solve = app.add_subcommand("solve", "Solve an instance with the plain backend");
	std::string solvePath;
	std::optional<std::uint64_t> solveConflicts;
	std::optional<double> solveTime;
	solve->add_option("instance", solvePath, "Instance file")->required();
	solve->add_option("--conflicts", solveConflicts, "Conflict budget")->check(CLI::PositiveNumber);
	solve->add_option("--time-limit", solveTime, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
	solve->add_flag("--model", printModelFlag, "Print the model");

	auto* lnpsCmd = app.add_subcommand("lnps", "Run large neighborhood prioritized search");
	std::string lnpsPath, lnpsCfg, lnpsOut{"csv"};
	EngineFlags lnpsFlags;
	lnpsCmd->add_option("instance", lnpsPath, "Instance file")->required();
	lnpsCmd->add_option("--config", lnpsCfg, "Configuration file")->required();
	lnpsCmd->add_option("--out", lnpsOut, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
	lnpsCmd->add_flag("--model", printModelFlag, "Print the best model");
	lnpsFlags.add(*lnpsCmd);

	auto* verify = app.add_subcommand("verify", "Compare the solver optimum against exhaustive enumeration");
	std::string verifyPath;
	verify->add_option("instance", verifyPath, "Instance file")->required();

	auto* gen = app.add_subcommand("gen", "Generate a random instance");
	std::uint64_t genSeed = 0;
	std::uint32_t genVars = 12;
	double        genClauses = 0.5, genObj = 0.5;
	std::optional<std::uint32_t> genTour;
	gen->add_option("--seed", genSeed, "Random seed");
	gen->add_option("--vars", genVars, "Number of variables")->check(CLI::PositiveNumber);
	gen->add_option("--clause-density", genClauses, "Clauses per variable relative to 4.26, in (0,1]");
	gen->add_option("--objective-density", genObj, "Fraction of variables with an objective term, in (0,1]");
	gen->add_option("--tour", genTour, "Generate a tour instance over this many cities (3..5) instead")->check(CLI::Range(3, 5));

	auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
	std::vector<std::string> benchPaths;
	std::string benchCfg, benchOut{"csv"}, benchReport, benchTrace;
	std::size_t benchRuns = 3;
	unsigned    benchThreads = 1;
	EngineFlags benchFlags;
	bench->add_option("instances", benchPaths, "Instance files")->required();
	bench->add_option("--config", benchCfg, "Configuration file")->required();
	bench->add_option("--runs", benchRuns, "Runs per instance (seeds seed..seed+runs-1)")->check(CLI::PositiveNumber);
	bench->add_option("--threads", benchThreads, "Concurrent runs")->check(CLI::PositiveNumber);
	bench->add_option("--out", benchOut, "Format printed to stdout")->check(CLI::IsMember({"csv", "jsonl"}));
	bench->add_option("--report", benchReport, "Also write the CSV report to this file");
	bench->add_option("--trace", benchTrace, "Also write JSON-lines traces to this file");
	benchFlags.add(*bench);

	CLI11_PARSE(app, argc, argv);

	try {
		if (*solve)   return cmdSolve(solvePath, solveConflicts, solveTime, printModelFlag);
		if (*lnpsCmd) return cmdLnps(lnpsPath, lnpsCfg, lnpsFlags, lnpsOut, printModelFlag);
		if (*verify)  return cmdVerify(verifyPath);
		if (*gen)     return cmdGen(genSeed, genVars, genClauses, genObj, genTour);
		if (*bench)   return cmdBench(benchPaths, benchCfg, benchFlags, benchRuns, benchThreads, benchOut, benchReport, benchTrace);
	}
	catch (const lnps::Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
	return 0;
}
