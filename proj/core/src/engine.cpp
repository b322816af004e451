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
#include <lnps/engine.h>

#include <lnps/destroy.h>
#include <lnps/error.h>
#include <lnps/heuristics.h>
#include <lnps/random.h>

#include <charconv>
#include <numeric>
#include <set>

namespace lnps {

Rational Rational::parse(std::string_view text) {
	auto bad = [&] { return UsageError("invalid rational '" + std::string(text) + "'"); };
	auto readUint = [&](std::string_view s) {
		std::uint64_t v = 0;
		auto [end, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
		if (s.empty() || ec != std::errc() || end != s.data() + s.size()) throw bad();
		return v;
	};
	Rational r;
	if (auto slash = text.find('/'); slash != std::string_view::npos) {
		r.num = readUint(text.substr(0, slash));
		r.den = readUint(text.substr(slash + 1));
		if (r.den == 0) throw bad();
	}
	else if (auto dot = text.find('.'); dot != std::string_view::npos) {
		std::string_view frac = text.substr(dot + 1);
		if (frac.empty() || frac.size() > 18) throw bad();
		r.den = 1;
		for (std::size_t i = 0; i != frac.size(); ++i) r.den *= 10;
		r.num = readUint(text.substr(0, dot)) * r.den + readUint(frac);
	}
	else {
		r.num = readUint(text);
		r.den = 1;
	}
	std::uint64_t g = std::gcd(r.num, r.den);
	if (g > 1) {
		r.num /= g;
		r.den /= g;
	}
	if (r.num > UINT32_MAX || r.den > UINT32_MAX) throw bad();
	return r;
}

std::string Rational::toString() const {
	return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view toString(AcceptPolicy p) {
	return p == AcceptPolicy::StrictImproving ? "strict" : "nonworsening";
}

std::string_view toString(DestroyOperator op) {
	switch (op) {
		case DestroyOperator::Auto:      return "auto";
		case DestroyOperator::Atoms:     return "atoms";
		case DestroyOperator::Constants: return "constants";
	}
	return "auto";
}

void EngineParams::validate() const {
	if (!escalation.atLeastOne()) throw UsageError("escalation factor must be at least 1");
	for (const Budget* b : {&initBudget, &iterBudget}) {
		if (b->maxConflicts && *b->maxConflicts == 0) throw UsageError("conflict budgets must be at least 1");
	}
	if (percentOverride && (*percentOverride < 0 || *percentOverride > 100)) throw UsageError("percentage out of range");
}

std::uint64_t Outcome::totalConflicts() const {
	std::uint64_t sum = initialConflicts;
	for (const auto& r : trace) sum += r.conflicts;
	return sum;
}

bool accept(Cost temporalCost, Cost currentCost, AcceptPolicy policy) {
	return policy == AcceptPolicy::StrictImproving ? temporalCost < currentCost : temporalCost <= currentCost;
}

Budget escalateBudget(const Budget& budget, const Rational& factor) {
	Budget out = budget;
	if (budget.maxConflicts) {
		// ceil(m * num / den) as q * num + ceil(r * num / den) with m = q * den + r.
		const std::uint64_t m = *budget.maxConflicts;
		const std::uint64_t q = m / factor.den, r = m % factor.den;
		const std::uint64_t tail = (r * factor.num + factor.den - 1) / factor.den;
		if (factor.num != 0 && q > (UINT64_MAX - tail) / factor.num) out.maxConflicts = UINT64_MAX;
		else out.maxConflicts = q * factor.num + tail;
	}
	return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Destruction {
	std::size_t               destroyed{0};
	std::vector<SymbolicAtom> undestroyed;
};

Destruction destroySolution(const Problem& problem, const LnpsConfig& cfg, const EngineParams& params,
                            const Assignment& current, Rng& rng) {
	std::set<Var> destroyed;
	for (DestroySpec spec : cfg.destroys) {
		if (params.percentOverride) spec.percent = *params.percentOverride;
		ProjectionView view = makeProjectionView(problem, current, spec.predicate, spec.arity);
		bool byAtoms = params.destroyOperator == DestroyOperator::Atoms ||
		               (params.destroyOperator == DestroyOperator::Auto && spec.isFullMask());
		DestroyOutcome out = byAtoms ? destroyRandomAtoms(view, spec, rng) : destroyRandomConstants(view, spec, rng);
		for (const auto& a : out.destroyed) destroyed.insert(a.var);
	}
	Destruction d;
	d.destroyed = destroyed.size();
	for (const auto& proj : cfg.projects) {
		for (auto& a : makeProjectionView(problem, current, proj.predicate, proj.arity).atoms) {
			if (!destroyed.count(a.var)) d.undestroyed.push_back(std::move(a));
		}
	}
	return d;
}

} // namespace

Outcome run(const Problem& problem, const LnpsConfig& config, const EngineParams& params, const IterationObserver& observer) {
	params.validate();
	validateAgainst(config, problem);
	const bool variability = checkVariability(config);
	const bool canFinish   = variability && (!params.iterBudget.bounded() || !params.escalation.isOne());
	if (!params.maxIterations && !params.wallClockLimit && !canFinish) {
		throw UsageError("run has no stop criterion: set an iteration or time limit");
	}

	const auto start = Clock::now();
	std::optional<Clock::time_point> deadline;
	if (params.wallClockLimit) deadline = start + *params.wallClockLimit;
	auto withRemaining = [&](Budget b) {
		if (deadline) {
			auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now());
			b.wallClock = std::max(left, std::chrono::milliseconds(0));
		}
		return b;
	};

	Solver  solver(problem, params.solver);
	Outcome out;

	SolveResult init = solver.solve({}, {}, withRemaining(params.initBudget));
	out.initialConflicts = init.conflicts;
	if (init.status == SolveStatus::Unsatisfiable) throw EngineError("problem is infeasible");
	if (!init.model) throw EngineError("no initial solution within the initial budget");
	out.best        = *init.model;
	out.initialCost = init.model->cost;
	if (init.status == SolveStatus::Optimum) {
		out.provenOptimal = true;
		return out;
	}

	Solution          current = *init.model;
	Rng               rng(params.seed);
	DirectiveRegistry registry;
	Budget            live     = params.iterBudget;
	bool              finished = false;
	std::uint64_t     step     = 0;

	while (!finished) {
		if (params.maxIterations && step >= *params.maxIterations) break;
		if (deadline && Clock::now() >= *deadline) break;
		++step;
		const auto t = static_cast<std::uint32_t>(step);

		Destruction  d    = destroySolution(problem, config, params, current.assignment, rng);
		auto         heu  = prioritize(d.undestroyed, config, t);
		DirectiveSet next = compileDirectives(heu);
		next.step         = t;
		if (registry.live()) registry.retire(t - 1);
		registry.install(std::move(next));

		std::optional<Cost> initialBound;
		if (params.tightenBound) initialBound = current.cost - 1;
		SolveResult res = solver.solve(registry.fixing(), registry.directives(), withRemaining(live), initialBound);
		if (res.interrupted) break;

		if (variability && res.status == SolveStatus::Optimum) finished = true;
		// Nothing better than current exists anywhere: the bound was tight and no atom was fixed.
		if (variability && params.tightenBound && res.status == SolveStatus::Unsatisfiable) finished = true;

		IterationRecord rec;
		rec.step      = step;
		rec.destroyed = d.destroyed;
		rec.status    = res.status;
		rec.conflicts = res.conflicts;
		if (res.model) {
			rec.temporalCost = res.model->cost;
			if (accept(res.model->cost, current.cost, params.accept)) {
				current      = *res.model;
				rec.accepted = true;
			}
			if (res.model->cost < out.best.cost) out.best = *res.model;
		}
		rec.currentCost = current.cost;
		rec.bestCost    = out.best.cost;
		out.trace.push_back(rec);
		if (observer) observer(rec, res.model ? &*res.model : nullptr);

		live = escalateBudget(live, params.escalation);
	}
	out.iterations    = out.trace.size();
	out.provenOptimal = finished;
	return out;
}

} // namespace lnps
