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
// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.
//
// Usage: lnps_acceptance [--cli <path to lnps>] [--work <scratch dir>]
#include <lnps/destroy.h>
#include <lnps/engine.h>
#include <lnps/harness.h>
#include <lnps/heuristics.h>
#include <lnps/random.h>
#include <lnps/solver.h>

#include "enumerate.h"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace lnps;

namespace {

using Clock = std::chrono::steady_clock;

// The shared small-instance set of criteria 1 to 4.
constexpr int           small_instances    = 240;
constexpr double        small_clauses      = 0.7;
constexpr double        small_objective    = 1.0;
constexpr std::uint64_t small_seed_base    = 5000;

const char* const prefer_config = "_lnps_project(sel,1).\n_lnps_destroy(sel,1,1,p(20)).\n_lnps_prioritize(sel,1,1,true).\n";
const char* const fix_config    = "_lnps_project(sel,1).\n_lnps_destroy(sel,1,1,p(20)).\n_lnps_prioritize(sel,1,inf,true).\n";

struct Verdict {
	bool        pass{false};
	std::string detail;
};

double secondsSince(Clock::time_point t) {
	return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double x, int prec = 2) {
	std::ostringstream os;
	os.setf(std::ios::fixed);
	os.precision(prec);
	os << x;
	return os.str();
}

std::vector<Problem>& smallSet() {
	static std::vector<Problem> set = [] {
		std::vector<Problem> out;
		for (int k = 0; k < small_instances; ++k) {
			auto n = static_cast<std::uint32_t>(8 + k % 11);
			out.push_back(generateInstance(small_seed_base + static_cast<std::uint64_t>(k), n, small_clauses, small_objective));
		}
		return out;
	}();
	return set;
}

std::vector<Cost>& smallOptima() {
	static std::vector<Cost> opt = [] {
		std::vector<Cost> out;
		for (const auto& p : smallSet()) out.push_back(bruteForceOptimum(p).cost);
		return out;
	}();
	return opt;
}

// Smallest initial conflict budget whose solve yields a model. Keeps the initial solve from
// proving optimality by itself, which would end a run before any iteration.
std::vector<Budget>& startBudgets() {
	static std::vector<Budget> out = [] {
		std::vector<Budget> b;
		for (const auto& p : smallSet()) {
			for (std::uint64_t n = 1;; ++n) {
				Solver s(p);
				if (s.solve(Budget::conflicts(n)).model) {
					b.push_back(Budget::conflicts(n));
					break;
				}
			}
		}
		return b;
	}();
	return out;
}

bool initiallyOptimal(std::size_t i) {
	Solver s(smallSet()[i]);
	return s.solve(startBudgets()[i]).status == SolveStatus::Optimum;
}

// Every engine run of the suite is kept for the trace audit.
struct AuditedRun {
	std::string                  label;
	Cost                         initialCost{0};
	std::vector<IterationRecord> trace;
};
std::vector<AuditedRun> audited;

Outcome auditedRun(const std::string& label, const Problem& p, const LnpsConfig& cfg, const EngineParams& params,
                   const IterationObserver& obs = {}) {
	Outcome o = run(p, cfg, params, obs);
	audited.push_back({label, o.initialCost, o.trace});
	return o;
}

// 1
Verdict oracleEquivalence() {
	auto        start      = Clock::now();
	int         mismatches = 0;
	const auto& set        = smallSet();
	for (std::size_t i = 0; i < set.size(); ++i) {
		Solver      s(set[i]);
		SolveResult r = s.solve();
		bool ok = r.status == SolveStatus::Optimum && r.model->cost == bruteForceOptimum(set[i]).cost &&
		          satisfiesClauses(set[i], r.model->assignment);
		mismatches += ok ? 0 : 1;
	}
	double secs = secondsSince(start);
	return {mismatches == 0 && secs < 60.0,
	        std::to_string(set.size()) + " instances (8-18 vars), " + std::to_string(mismatches) + " mismatches, " + fmt(secs) + " s"};
}

// 2
Verdict optimalityGuarantee() {
	LnpsConfig   cfg = parseConfig(prefer_config);
	EngineParams params;
	params.iterBudget    = Budget::conflicts(50);
	params.escalation    = Rational::parse("1.1");
	params.maxIterations = 100000; // safety net only; the run must finish on its own
	int proven = 0, viaIterations = 0;
	const auto& set = smallSet();
	for (std::size_t i = 0; i < set.size(); ++i) {
		params.seed       = i;
		params.initBudget = startBudgets()[i];
		Outcome o = auditedRun("guarantee", set[i], cfg, params);
		if (o.provenOptimal && o.best.cost == smallOptima()[i]) ++proven;
		if (o.iterations > 0) ++viaIterations;
	}
	return {proven == static_cast<int>(set.size()),
	        std::to_string(proven) + "/" + std::to_string(set.size()) + " proven optimal with oracle cost (" +
	            std::to_string(viaIterations) + " finished by an iteration)"};
}

// 3
Verdict lnsNeverOptimal() {
	LnpsConfig   cfg = parseConfig(fix_config);
	EngineParams params;
	params.iterBudget    = Budget::conflicts(50);
	params.escalation    = Rational::parse("1.1");
	params.maxIterations = 30;
	int runs = 0, skipped = 0, flagged = 0, withOptimumStatus = 0;
	const auto& set = smallSet();
	for (std::size_t i = 0; i < set.size(); ++i) {
		// An optimal initial solve ends the run before the config takes part.
		if (initiallyOptimal(i)) {
			++skipped;
			continue;
		}
		params.seed       = i;
		params.initBudget = startBudgets()[i];
		bool sawOptimum = false;
		Outcome o = auditedRun("lns", set[i], cfg, params, [&](const IterationRecord& r, const Solution*) {
			sawOptimum = sawOptimum || r.status == SolveStatus::Optimum;
		});
		++runs;
		flagged += o.provenOptimal ? 1 : 0;
		withOptimumStatus += sawOptimum ? 1 : 0;
	}
	return {runs >= 50 && flagged == 0 && withOptimumStatus > 0,
	        std::to_string(runs) + " runs (" + std::to_string(skipped) + " instances solved optimally by the initial solve), " +
	            std::to_string(flagged) + " flagged proven optimal, " +
	            std::to_string(withOptimumStatus) + " runs had an OPTIMUM iteration"};
}

std::vector<std::string> projection(const Problem& p, const Assignment& a) {
	std::vector<std::string> out;
	for (const auto& atom : makeProjectionView(p, a, "sel", 1).atoms) out.push_back(atom.symbol());
	return out;
}

// 4
Verdict zeroDestruction() {
	const auto& set = smallSet();
	// (a) p(0) with fixing reproduces the current projection
	EngineParams fixParams;
	fixParams.iterBudget    = Budget::conflicts(50);
	fixParams.escalation    = Rational::parse("1.1");
	fixParams.maxIterations = 20;
	LnpsConfig fixZero = parseConfig("_lnps_project(sel,1). _lnps_destroy(sel,1,1,p(0)). _lnps_prioritize(sel,1,inf,true).");
	int identical = 0, checkedIterations = 0;
	for (std::size_t i = 0; i < set.size(); ++i) {
		fixParams.initBudget = startBudgets()[i];
		Solver init(set[i]);
		auto   start = init.solve(fixParams.initBudget);
		if (!start.model || start.status == SolveStatus::Optimum) {
			++identical; // nothing to iterate on
			continue;
		}
		std::vector<std::string> expected = projection(set[i], start.model->assignment);
		bool same = true;
		auditedRun("zero-fix", set[i], fixZero, fixParams, [&](const IterationRecord&, const Solution* s) {
			++checkedIterations;
			if (!s || projection(set[i], s->assignment) != expected) same = false;
		});
		identical += same ? 1 : 0;
	}
	// (b) p(0) with level-1 preference
	EngineParams preferParams = fixParams;
	preferParams.maxIterations = 200;
	LnpsConfig preferZero = parseConfig("_lnps_project(sel,1). _lnps_destroy(sel,1,1,p(0)). _lnps_prioritize(sel,1,1,true).");
	int reached = 0;
	for (std::size_t i = 0; i < set.size(); ++i) {
		preferParams.seed       = i;
		preferParams.initBudget = startBudgets()[i];
		Outcome o = auditedRun("zero-prefer", set[i], preferZero, preferParams);
		reached += o.best.cost == smallOptima()[i] ? 1 : 0;
	}
	double share = 100.0 * reached / static_cast<double>(set.size());
	return {identical == static_cast<int>(set.size()) && share >= 95.0,
	        "INF: " + std::to_string(identical) + "/" + std::to_string(set.size()) + " runs kept the projection over " +
	            std::to_string(checkedIterations) + " iterations; level 1: " + std::to_string(reached) + "/" +
	            std::to_string(set.size()) + " reached the optimum (" + fmt(share, 1) + "%)"};
}

// Variables taking both values in the feasible set can never be assigned by root propagation.
std::vector<Var> unfixed(const Problem& p) {
	std::vector<int> t(p.numVars + 1, 0), f(p.numVars + 1, 0);
	test::forEachAssignment(p.numVars, [&](const std::vector<bool>& val) {
		if (!test::feasible(p, val)) return;
		for (Var v = 1; v <= p.numVars; ++v) (val[v] ? t : f)[v] = 1;
	});
	std::vector<Var> out;
	for (Var v = 1; v <= p.numVars; ++v) {
		if (t[v] && f[v]) out.push_back(v);
	}
	return out;
}

// 5
Verdict branchingContract() {
	Rng rng(2024);
	int single = 0, singleOk = 0, pairs = 0, pairsOk = 0;
	for (std::uint64_t seed = 1; single < 100 || pairs < 100; ++seed) {
		Problem p    = generateInstance(9000 + seed, 8 + static_cast<std::uint32_t>(seed % 9), 0.7, 0.7);
		auto    free = unfixed(p);
		if (free.size() < 2) continue;
		Solver s(p);
		if (rng.chance(0.5)) s.solve(Budget::conflicts(20)); // warm session with learnt clauses
		if (single < 100) {
			Var  v    = free[rng.below(free.size())];
			bool sign = rng.chance(0.5);
			std::vector<Directive> d{{v, 1, sign}};
			s.solve({}, d, Budget::unlimited());
			++single;
			singleOk += s.firstDecision() == (sign ? Lit::pos(v) : Lit::neg(v)) ? 1 : 0;
		}
		if (pairs < 100) {
			auto pick = rng.sample(free.size(), 2);
			Var  lo = free[pick[0]], hi = free[pick[1]];
			bool loSign = rng.chance(0.5), hiSign = rng.chance(0.5);
			std::vector<Directive> d{{lo, 1, loSign}, {hi, 2, hiSign}};
			s.solve({}, d, Budget::unlimited());
			++pairs;
			pairsOk += s.firstDecision() == (hiSign ? Lit::pos(hi) : Lit::neg(hi)) ? 1 : 0;
		}
	}
	return {singleOk == single && pairsOk == pairs,
	        "single directive " + std::to_string(singleOk) + "/" + std::to_string(single) + ", level 2 over level 1 " +
	            std::to_string(pairsOk) + "/" + std::to_string(pairs)};
}

// 6
Verdict destroyCardinality() {
	Rng rng(6);
	int cases = 0, wrong = 0;
	for (std::size_t N = 0; N <= 50; ++N) {
		ProjectionView view;
		for (std::size_t i = 1; i <= N; ++i) view.atoms.push_back(SymbolicAtom{static_cast<Var>(i), "sel", {std::int64_t(i)}});
		for (int n = 0; n <= 100; ++n) {
			std::size_t expected = (2 * static_cast<std::size_t>(n) * N + 100) / 200;
			auto out = destroyRandomAtoms(view, DestroySpec{"sel", 1, 1, n}, rng);
			++cases;
			if (out.destroyed.size() != expected || !partitionCheck(out, view)) ++wrong;
		}
	}
	return {wrong == 0, std::to_string(cases) + " (n, N) pairs, " + std::to_string(wrong) + " wrong"};
}

struct AuditResult {
	std::size_t traces{0}, records{0}, violations{0};
};

void auditRecords(AuditResult& res, std::optional<Cost> initial, const std::vector<IterationRecord>& trace) {
	++res.traces;
	std::optional<Cost> current = initial, best = initial;
	for (const auto& r : trace) {
		++res.records;
		bool bad = false;
		if (best && r.bestCost > *best) bad = true;
		if (current && r.currentCost != *current && !r.accepted) bad = true;
		if (r.accepted && (!r.temporalCost || *r.temporalCost != r.currentCost)) bad = true;
		if (r.bestCost > r.currentCost) bad = true;
		res.violations += bad ? 1 : 0;
		current = r.currentCost;
		best    = r.bestCost;
	}
}

// 7: runs after the others and also audits the traces written by the bench executions of criterion 9
Verdict traceAudit(const std::vector<fs::path>& jsonlFiles) {
	AuditResult res;
	for (const auto& a : audited) auditRecords(res, a.initialCost, a.trace);
	std::size_t fileTraces = 0;
	for (const auto& path : jsonlFiles) {
		std::ifstream in(path);
		std::map<std::pair<std::string, std::uint64_t>, std::vector<IterationRecord>> traces;
		std::string line;
		while (std::getline(in, line)) {
			auto j = nlohmann::json::parse(line);
			IterationRecord r;
			r.step        = j["step"];
			r.accepted    = j["accepted"];
			r.currentCost = j["current_cost"];
			r.bestCost    = j["best_cost"];
			if (!j["temporal_cost"].is_null()) r.temporalCost = j["temporal_cost"].get<Cost>();
			traces[{j["instance"], j["seed"]}].push_back(r);
		}
		for (const auto& [key, t] : traces) {
			auditRecords(res, std::nullopt, t);
			++fileTraces;
		}
	}
	return {res.violations == 0 && res.records > 0,
	        std::to_string(res.traces) + " traces (" + std::to_string(fileTraces) + " from bench files), " +
	            std::to_string(res.records) + " iterations, " + std::to_string(res.violations) + " violations"};
}

// 8
constexpr std::uint32_t family_vars      = 200;
constexpr double        family_clauses   = 0.3;
constexpr double        family_objective = 1.0;

EngineParams familyParams() {
	EngineParams p;
	p.initBudget    = Budget::conflicts(200);
	p.iterBudget    = Budget::conflicts(50);
	p.escalation    = Rational::parse("1");
	p.tightenBound  = true;
	p.maxIterations = 36; // 200 + 36 * 50 = 2000 conflicts in total
	return p;
}

Verdict improvement(const fs::path& work) {
	LnpsConfig   cfg    = parseConfig(prefer_config);
	EngineParams params = familyParams();
	std::vector<std::uint64_t> seeds{1, 2, 3};
	std::vector<RunReport>     reports;
	int wins = 0, plainOptimal = 0;
	for (int k = 0; k < 20; ++k) {
		Problem p = generateInstance(1000 + static_cast<std::uint64_t>(k), family_vars, family_clauses, family_objective);
		std::string name = "family-" + std::to_string(k);
		RunReport rep = runSuite(name, p, cfg, params, seeds, 1);
		for (const auto& r : rep.runs) {
			if (r.initialCost) audited.push_back({name, *r.initialCost, r.trace});
		}
		if (rep.plainStatus == SolveStatus::Optimum) ++plainOptimal;
		if (rep.rate && *rep.rate <= 0.95) ++wins;
		reports.push_back(std::move(rep));
	}
	fs::path csv = work / "improvement.csv";
	{
		std::ofstream out(csv, std::ios::binary);
		writeCsv(out, reports);
	}
	std::ostringstream table;
	writeCsv(table, reports);
	std::cout << table.str();
	bool planned = plannedConflicts(params) == 2000u;
	return {wins >= 15 && plainOptimal == 0 && planned,
	        std::to_string(wins) + "/20 instances with rate <= 0.95, plain solve optimal on " + std::to_string(plainOptimal) +
	            ", total budget " + std::to_string(plannedConflicts(params).value_or(0)) + " conflicts, report " + csv.string()};
}

std::string slurp(const fs::path& p) {
	std::ifstream in(p, std::ios::binary);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// 9
Verdict reproducibility(const std::string& cli, const fs::path& work, std::vector<fs::path>& traceFiles) {
	if (cli.empty()) return {false, "no --cli given, bench executable unavailable"};
	fs::path dir = work / "repro";
	fs::create_directories(dir);
	std::vector<std::string> instances;
	for (int k = 0; k < 3; ++k) {
		fs::path f = dir / ("r" + std::to_string(k) + ".lnps");
		std::ofstream(f, std::ios::binary) << toText(generateInstance(1000 + static_cast<std::uint64_t>(k), family_vars, family_clauses, family_objective));
		instances.push_back(f.string());
	}
	{
		std::ofstream(dir / "sel.lp", std::ios::binary) << prefer_config;
	}
	std::string args;
	for (const auto& i : instances) args += " \"" + i + "\"";
	args += " --config \"" + (dir / "sel.lp").string() + "\" --runs 3 --threads 3 --seed 11 --init-conflicts 200 "
	        "--iter-conflicts 50 --escalation 1.05 --max-iterations 20 --tighten-bound";
	bool ranOk = true;
	for (int run = 1; run <= 2; ++run) {
		fs::path csv   = dir / ("report" + std::to_string(run) + ".csv");
		fs::path trace = dir / ("trace" + std::to_string(run) + ".jsonl");
		std::string cmd = "\"" + cli + "\" bench" + args + " --report \"" + csv.string() + "\" --trace \"" + trace.string() +
		                  "\" > \"" + (dir / ("stdout" + std::to_string(run) + ".txt")).string() + "\" 2> \"" +
		                  (dir / ("stderr" + std::to_string(run) + ".txt")).string() + "\"";
		ranOk = ranOk && std::system(cmd.c_str()) == 0;
		traceFiles.push_back(trace);
	}
	std::string csv1 = slurp(dir / "report1.csv"), csv2 = slurp(dir / "report2.csv");
	std::string tr1 = slurp(dir / "trace1.jsonl"), tr2 = slurp(dir / "trace2.jsonl");
	bool same = !csv1.empty() && !tr1.empty() && csv1 == csv2 && tr1 == tr2;
	return {ranOk && same, std::string(ranOk ? "both bench runs succeeded" : "a bench run failed") + ", CSV " +
	                           (csv1 == csv2 ? "identical" : "differs") + " (" + std::to_string(csv1.size()) + " bytes), traces " +
	                           (tr1 == tr2 ? "identical" : "differ") + " (" + std::to_string(tr1.size()) + " bytes)"};
}

} // namespace

int main(int argc, char** argv) {
	std::string cli;
	fs::path    work = fs::temp_directory_path() / "lnps_acceptance";
	for (int i = 1; i < argc; ++i) {
		std::string a = argv[i];
		if (a == "--cli" && i + 1 < argc) cli = argv[++i];
		else if (a == "--work" && i + 1 < argc) work = argv[++i];
		else {
			std::cerr << "usage: " << argv[0] << " [--cli <lnps executable>] [--work <dir>]\n";
			return 2;
		}
	}
	fs::create_directories(work);

	struct Criterion {
		int                      id;
		const char*              name;
		std::function<Verdict()> check;
	};
	std::vector<fs::path> traceFiles;
	std::vector<Criterion> criteria{
		{1, "oracle equivalence", oracleEquivalence},
		{2, "optimality guarantee", optimalityGuarantee},
		{3, "LNS never proves optimality", lnsNeverOptimal},
		{4, "zero destruction", zeroDestruction},
		{5, "branching contract", branchingContract},
		{6, "destroy cardinality", destroyCardinality},
		{8, "improvement over plain solving", [&] { return improvement(work); }},
		{9, "reproducibility", [&] { return reproducibility(cli, work, traceFiles); }},
		{7, "anytime monotonicity and acceptance consistency", [&] { return traceAudit(traceFiles); }},
	};
	std::vector<std::string> lines(10);
	int failed = 0;
	for (const auto& c : criteria) {
		auto    start = Clock::now();
		Verdict v;
		try {
			v = c.check();
		}
		catch (const std::exception& e) {
			v = {false, std::string("exception: ") + e.what()};
		}
		failed += v.pass ? 0 : 1;
		lines[c.id] = std::string(v.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + " (" + c.name + "): " +
		              v.detail + " [" + fmt(secondsSince(start), 1) + " s]";
		std::cerr << lines[c.id] << '\n';
	}
	std::cout << '\n';
	for (int id = 1; id <= 9; ++id) std::cout << lines[id] << '\n';
	std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
	return failed == 0 ? 0 : 1;
}
