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
#include <lnps/destroy.h>
#include <lnps/engine.h>
#include <lnps/error.h>
#include <lnps/harness.h>

#include "enumerate.h"

#include "testing.h"

namespace lnps::test {

namespace {
const char* const sel_prefer = "_lnps_project(sel,1). _lnps_destroy(sel,1,1,p(30)). _lnps_prioritize(sel,1,1,true).";
const char* const sel_fix    = "_lnps_project(sel,1). _lnps_destroy(sel,1,1,p(30)). _lnps_prioritize(sel,1,inf,true).";

EngineParams smallParams() {
	EngineParams p;
	p.initBudget = Budget::conflicts(200);
	p.iterBudget = Budget::conflicts(5);
	p.escalation = Rational::parse("1.1");
	return p;
}

std::vector<std::string> trueSymbols(const Problem& p, const Assignment& a) {
	std::vector<std::string> out;
	for (const auto& atom : makeProjectionView(p, a, "sel", 1).atoms) out.push_back(atom.symbol());
	return out;
}

// The smallest conflict budget whose solve yields a model.
Budget firstModelBudget(const Problem& p) {
	for (std::uint64_t n = 1;; ++n) {
		if (Solver(p).solve(Budget::conflicts(n)).model) return Budget::conflicts(n);
	}
}

void auditTrace(const Outcome& o, Cost initialCost) {
	Cost current = initialCost;
	Cost best    = initialCost;
	for (const auto& r : o.trace) {
		CHECK(r.bestCost <= best);
		CHECK(r.bestCost <= r.currentCost);
		if (r.currentCost != current) CHECK(r.accepted);
		if (r.accepted) {
			REQUIRE(r.temporalCost);
			CHECK(*r.temporalCost == r.currentCost);
		}
		current = r.currentCost;
		best    = r.bestCost;
	}
	CHECK(o.best.cost == best);
}
} // namespace

TEST_SUITE("engine") {

TEST_CASE("accept policies") {
	CHECK(accept(5, 7, AcceptPolicy::StrictImproving));
	CHECK_FALSE(accept(7, 7, AcceptPolicy::StrictImproving));
	CHECK(accept(7, 7, AcceptPolicy::NonWorsening));
	CHECK_FALSE(accept(9, 7, AcceptPolicy::StrictImproving));
	CHECK_FALSE(accept(9, 7, AcceptPolicy::NonWorsening));
}

TEST_CASE("rational factors") {
	CHECK(Rational::parse("1.05").num == 21);
	CHECK(Rational::parse("1.05").den == 20);
	CHECK(Rational::parse("21/20").toString() == "21/20");
	CHECK(Rational::parse("2").toString() == "2");
	CHECK(Rational::parse("1.0").isOne());
	CHECK_FALSE(Rational::parse("0.9").atLeastOne());
	CHECK_THROWS_AS(Rational::parse("abc"), UsageError);
	CHECK_THROWS_AS(Rational::parse("1/0"), UsageError);
	CHECK_THROWS_AS(Rational::parse("-1"), UsageError);
	CHECK_THROWS_AS(Rational::parse("1."), UsageError);
	CHECK_THROWS_AS(Rational::parse(""), UsageError);
}

TEST_CASE("budget escalation") {
	CHECK(*escalateBudget(Budget::conflicts(1000), Rational::parse("1.05")).maxConflicts == 1050);
	CHECK(*escalateBudget(Budget::conflicts(1000), Rational::parse("1")).maxConflicts == 1000);
	CHECK(*escalateBudget(Budget::conflicts(1), Rational::parse("1.01")).maxConflicts == 2);
	CHECK_FALSE(escalateBudget(Budget::unlimited(), Rational::parse("2")).bounded());
	CHECK(*escalateBudget(Budget::conflicts(UINT64_MAX / 2), Rational::parse("3")).maxConflicts == UINT64_MAX);
}

TEST_CASE("twenty escalation steps from 40000 by 1.05") {
	// reference: repeated ceiling of m * 105 / 100 in plain integer arithmetic
	std::uint64_t ref = 40000;
	for (int i = 0; i < 20; ++i) ref = (ref * 105 + 99) / 100;
	Budget b = Budget::conflicts(40000);
	for (int i = 0; i < 20; ++i) b = escalateBudget(b, Rational::parse("1.05"));
	CHECK(*b.maxConflicts == ref);
	CHECK(ref == 106147);
}

TEST_CASE("parameter validation") {
	EngineParams p;
	p.escalation = Rational::parse("0.5");
	CHECK_THROWS_AS(p.validate(), UsageError);
	p            = EngineParams{};
	p.iterBudget = Budget::conflicts(0);
	CHECK_THROWS_AS(p.validate(), UsageError);
	p                 = EngineParams{};
	p.percentOverride = 101;
	CHECK_THROWS_AS(p.validate(), UsageError);
}

TEST_CASE("initially optimal problem returns without iterations") {
	Problem p = parseInstance("p lnps 2 1\na 1 sel(1)\na 2 sel(2)\nc 1 2 0\n");
	Outcome o = run(p, parseConfig(sel_prefer), EngineParams{});
	CHECK(o.provenOptimal);
	CHECK(o.iterations == 0);
	CHECK(o.trace.empty());
	CHECK(o.best.cost == 0);
}

TEST_CASE("error conditions") {
	Problem unsat = parseInstance("p lnps 1 2\na 1 sel(1)\nc 1 0\nc -1 0\n");
	CHECK_THROWS_AS(run(unsat, parseConfig(sel_prefer), EngineParams{}), EngineError);

	Problem p = generateInstance(3, 12, 0.5, 0.8);
	CHECK_THROWS_AS(run(p, parseConfig("_lnps_project(cycle,2)."), EngineParams{}), ConfigError);

	EngineParams noStop = smallParams();
	noStop.escalation   = Rational::parse("1");
	CHECK_THROWS_AS(run(p, parseConfig(sel_prefer), noStop), UsageError);
	CHECK_THROWS_AS(run(p, parseConfig(sel_fix), smallParams()), UsageError);

	Problem hard = generateInstance(9, 200, 1.0, 1.0);
	EngineParams tiny;
	tiny.initBudget    = Budget::conflicts(1);
	tiny.maxIterations = 1;
	CHECK_THROWS_AS(run(hard, parseConfig(sel_prefer), tiny), EngineError);
}

TEST_CASE("prioritized search proves the optimum") {
	for (std::uint64_t seed = 1; seed <= 25; ++seed) {
		Problem p = generateInstance(seed, 10 + static_cast<std::uint32_t>(seed % 8), 0.6, 0.8);
		CAPTURE(seed);
		for (bool tighten : {false, true}) {
			EngineParams params = smallParams();
			params.tightenBound = tighten;
			params.seed         = seed;
			Outcome o = run(p, parseConfig(sel_prefer), params);
			CHECK(o.provenOptimal);
			CHECK(o.best.cost == *referenceOptimum(p));
			CHECK(satisfiesClauses(p, o.best.assignment));
			CHECK(evaluateCost(p, o.best.assignment) == o.best.cost);
		}
	}
}

TEST_CASE("fixing never proves optimality") {
	int runs = 0;
	for (std::uint64_t seed = 1; seed <= 10; ++seed) {
		Problem p = generateInstance(seed, 14, 0.7, 1.0);
		EngineParams params  = smallParams();
		params.initBudget    = firstModelBudget(p);
		params.maxIterations = 30;
		if (Solver(p).solve(params.initBudget).status == SolveStatus::Optimum) continue;
		++runs;
		params.seed          = seed;
		bool sawOptimum = false;
		Outcome o = run(p, parseConfig(sel_fix), params, [&](const IterationRecord& r, const Solution*) {
			sawOptimum = sawOptimum || r.status == SolveStatus::Optimum;
		});
		CHECK_FALSE(o.provenOptimal);
		CHECK(o.iterations == 30);
		CHECK(sawOptimum);
	}
	CHECK(runs >= 5);
}

TEST_CASE("zero destruction with fixing reproduces the current solution") {
	for (std::uint64_t seed = 1; seed <= 10; ++seed) {
		Problem      p      = generateInstance(seed, 40, 0.6, 0.7);
		EngineParams params = smallParams();
		params.maxIterations   = 10;
		params.percentOverride = 0;
		std::vector<std::vector<std::string>> seen;
		Outcome o = run(p, parseConfig(sel_fix), params, [&](const IterationRecord& r, const Solution* s) {
			CHECK(r.destroyed == 0);
			if (s) seen.push_back(trueSymbols(p, s->assignment));
		});
		REQUIRE(seen.size() == o.trace.size());
		for (const auto& s : seen) CHECK(s == trueSymbols(p, o.best.assignment));
		for (const auto& r : o.trace) CHECK(r.bestCost == o.trace.front().bestCost);
	}
}

TEST_CASE("trace invariants under both policies") {
	for (std::uint64_t seed = 1; seed <= 8; ++seed) {
		Problem p = generateInstance(seed, 80, 0.5, 1.0);
		for (auto policy : {AcceptPolicy::StrictImproving, AcceptPolicy::NonWorsening}) {
			EngineParams params  = smallParams();
			params.accept        = policy;
			params.maxIterations = 40;
			params.seed          = seed;
			Outcome o = run(p, parseConfig(sel_prefer), params, [&](const IterationRecord&, const Solution* s) {
				if (s) {
					CHECK(satisfiesClauses(p, s->assignment));
					CHECK(evaluateCost(p, s->assignment) == s->cost);
				}
			});
			auditTrace(o, o.initialCost);
		}
	}
}

TEST_CASE("tightened bound admits only improvements") {
	Problem      p      = generateInstance(5, 120, 0.4, 1.0);
	EngineParams params = smallParams();
	params.tightenBound  = true;
	params.maxIterations = 40;
	run(p, parseConfig(sel_prefer), params, [&](const IterationRecord& r, const Solution* s) {
		if (s) CHECK(r.accepted);
	});
}

TEST_CASE("runs are reproducible") {
	Problem      p      = generateInstance(2, 100, 0.5, 1.0);
	EngineParams params = smallParams();
	params.maxIterations = 25;
	params.seed          = 42;
	Outcome a = run(p, parseConfig(sel_prefer), params);
	Outcome b = run(p, parseConfig(sel_prefer), params);
	CHECK(a.trace == b.trace);
	CHECK(a.best == b.best);
	params.seed = 43;
	Outcome c = run(p, parseConfig(sel_prefer), params);
	CHECK(c.trace.size() == a.trace.size());
}

TEST_CASE("destroy operator and percentage override") {
	Problem      p      = generateInstance(6, 60, 0.4, 1.0);
	LnpsConfig   cfg    = parseConfig("_lnps_project(sel,1). _lnps_destroy(sel,1,1,p(50)). _lnps_prioritize(sel,1,1,true).");
	EngineParams params = smallParams();
	params.maxIterations   = 5;
	params.percentOverride = 100;
	Outcome o = run(p, cfg, params);
	for (const auto& r : o.trace) CHECK(r.destroyed > 0);
	params.destroyOperator = DestroyOperator::Constants;
	params.percentOverride = 0;
	for (const auto& r : run(p, cfg, params).trace) CHECK(r.destroyed == 0);
}

TEST_CASE("wall clock limit stops the run") {
	Problem      p      = generateInstance(7, 150, 0.5, 1.0);
	EngineParams params = smallParams();
	params.escalation     = Rational::parse("1");
	params.wallClockLimit = std::chrono::milliseconds(100);
	auto    start = std::chrono::steady_clock::now();
	Outcome o     = run(p, parseConfig(sel_prefer), params);
	auto    took  = std::chrono::steady_clock::now() - start;
	CHECK(took < std::chrono::seconds(5));
	CHECK(satisfiesClauses(p, o.best.assignment));
}

} // TEST_SUITE

} // namespace lnps::test
