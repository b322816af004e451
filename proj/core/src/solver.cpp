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
#include <lnps/solver.h>

#include <lnps/error.h>

#include <algorithm>
#include <cassert>
#include <limits>

namespace lnps {

std::string_view toString(SolveStatus s) {
	switch (s) {
		case SolveStatus::Optimum:         return "OPTIMUM";
		case SolveStatus::Satisfiable:     return "SATISFIABLE";
		case SolveStatus::Unsatisfiable:   return "UNSATISFIABLE";
		case SolveStatus::BudgetExhausted: return "BUDGET_EXHAUSTED";
	}
	return "UNKNOWN";
}

namespace {

enum : std::uint8_t { value_false = 0, value_true = 1, value_free = 2 };

constexpr std::int32_t no_reason  = -1;
constexpr std::int32_t obj_reason = -2;

struct Clause {
	std::vector<Lit> lits;
	bool             learnt{false};
	// Derived with help of the objective bound; valid only within the current call.
	bool             tainted{false};
	bool             removed{false};
	std::uint32_t    lbd{0};
};

struct Watch {
	std::uint32_t cref;
	Lit           blocker;
};

struct Conflict {
	enum Kind : std::uint8_t { none, clause, objective } kind{none};
	std::uint32_t cref{0};
	explicit operator bool() const { return kind != none; }
};

// Finite subsequences of the Luby sequence: 1 1 2 1 1 2 4 1 1 2 ...
double luby(double y, std::uint64_t x) {
	std::uint64_t size = 1;
	int           seq  = 0;
	while (size < x + 1) {
		++seq;
		size = 2 * size + 1;
	}
	while (size - 1 != x) {
		size = (size - 1) >> 1;
		--seq;
		x = x % size;
	}
	double r = 1.0;
	for (int i = 0; i < seq; ++i) r *= y;
	return r;
}

} // namespace

struct Solver::Impl {
	Impl(const Problem& p, SolverOptions o);

	// assignment
	std::uint8_t value(Lit p) const {
		std::uint8_t a = assign[p.var()];
		return a == value_free ? std::uint8_t(value_free) : static_cast<std::uint8_t>(a ^ static_cast<std::uint8_t>(p.negative()));
	}
	std::uint32_t decisionLevel() const { return static_cast<std::uint32_t>(trailLim.size()); }
	void newDecisionLevel() { trailLim.push_back(static_cast<std::uint32_t>(trail.size())); }
	void enqueue(Lit p, std::int32_t why, bool rootTaint = false);
	void cancelUntil(std::uint32_t lvl);
	void resetTrail();

	// propagation
	Conflict propagate();
	Conflict propagateClauses(Lit p);
	Conflict propagateObjective();

	// explanations
	void explainObjective(std::uint32_t beforePos, std::vector<Lit>& out) const;
	void conflictLits(const Conflict& c, std::vector<Lit>& out) const;
	bool analyze(const Conflict& c, std::vector<Lit>& learnt);
	std::uint32_t computeLbd(const std::vector<Lit>& lits);

	// clause db
	std::uint32_t addClause(std::vector<Lit> lits, bool learnt, bool tainted, std::uint32_t lbd);
	void attach(std::uint32_t cref);
	bool locked(std::uint32_t cref) const;
	void reduceLearnts();
	void removeTainted();
	void purgeWatches();

	// heuristic
	bool heapBefore(Var a, Var b) const {
		if (dirLevel[a] != dirLevel[b]) return dirLevel[a] > dirLevel[b];
		if (activity[a] != activity[b]) return activity[a] > activity[b];
		return a < b;
	}
	void heapUp(std::size_t i);
	void heapDown(std::size_t i);
	void heapInsert(Var v);
	Var  heapPop();
	void bumpVar(Var v);
	std::optional<Lit> pickBranch();

	SolveResult solve(std::span<const Lit> assumptions, std::span<const Directive> directives, const Budget& budget,
	                  std::optional<Cost> initialBound);

	Problem       prob;
	SolverOptions opts;
	std::uint32_t numVars;

	std::vector<std::uint8_t>  assign;
	std::vector<std::uint32_t> level;
	std::vector<std::int32_t>  reason;
	std::vector<std::uint32_t> trailPos;
	std::vector<bool>          rootTainted;
	std::vector<Lit>           trail;
	std::vector<std::uint32_t> trailLim;
	std::size_t                qhead{0};

	std::vector<Clause>             clauses;
	std::vector<std::uint32_t>      freeSlots;
	std::vector<std::vector<Watch>> watches;
	std::vector<Lit>                units;
	std::size_t                     learntCount{0};
	double                          maxLearnts{0};

	std::vector<Weight> objWeight;
	std::vector<Lit>    objLits;
	Cost                lowerBound{0};
	std::optional<Cost> bound;
	bool                objDirty{true};

	std::vector<double>       activity;
	double                    varInc{1.0};
	std::vector<int>          dirLevel;
	std::vector<std::int8_t>  dirSign;
	std::vector<bool>         savedPhase;
	std::vector<Var>          heap;
	std::vector<std::int32_t> heapIndex;

	std::vector<bool> seen;
	std::vector<Lit>  scratch;

	bool               solvedOnce{false};
	bool               firstRecorded{false};
	std::optional<Lit> firstDecision;
};

Solver::Impl::Impl(const Problem& p, SolverOptions o)
	: prob(p)
	, opts(o)
	, numVars(p.numVars)
	, assign(numVars + 1, value_free)
	, level(numVars + 1, 0)
	, reason(numVars + 1, no_reason)
	, trailPos(numVars + 1, 0)
	, rootTainted(numVars + 1, false)
	, watches(2 * (numVars + 1))
	, objWeight(2 * (numVars + 1), 0)
	, activity(numVars + 1, 0.0)
	, dirLevel(numVars + 1, 0)
	, dirSign(numVars + 1, -1)
	, savedPhase(numVars + 1, opts.defaultSign)
	, heapIndex(numVars + 1, -1)
	, seen(numVars + 1, false) {
	p.validate();
	for (const auto& c : p.clauses) {
		std::vector<Lit> lits(c);
		std::sort(lits.begin(), lits.end());
		lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
		bool taut = false;
		for (std::size_t i = 1; i < lits.size(); ++i) taut = taut || lits[i] == ~lits[i - 1];
		if (taut) continue;
		if (lits.size() == 1) {
			units.push_back(lits[0]);
			continue;
		}
		addClause(std::move(lits), false, false, 0);
	}
	for (const auto& t : p.objective) objWeight[t.lit.index()] += t.weight;
	for (Var v = 1; v <= numVars; ++v) {
		for (Lit x : {Lit::pos(v), Lit::neg(v)}) {
			if (objWeight[x.index()] > 0) objLits.push_back(x);
		}
	}
	std::stable_sort(objLits.begin(), objLits.end(),
	                 [&](Lit a, Lit b) { return objWeight[a.index()] > objWeight[b.index()]; });
	maxLearnts = std::max<double>(2000.0, static_cast<double>(clauses.size()) / 2.0);
}

void Solver::Impl::enqueue(Lit p, std::int32_t why, bool rootTaint) {
	Var v = p.var();
	assert(assign[v] == value_free);
	assign[v]   = p.positive() ? value_true : value_false;
	level[v]    = decisionLevel();
	reason[v]   = why;
	trailPos[v] = static_cast<std::uint32_t>(trail.size());
	trail.push_back(p);
	if (Weight w = objWeight[p.index()]; w > 0) {
		lowerBound += w;
		objDirty = true;
	}
	if (level[v] == 0) {
		bool t = rootTaint || why == obj_reason;
		if (why >= 0) {
			const Clause& c = clauses[static_cast<std::uint32_t>(why)];
			t = t || c.tainted;
			for (std::size_t i = 1; i < c.lits.size() && !t; ++i) t = rootTainted[c.lits[i].var()];
		}
		rootTainted[v] = t;
	}
}

void Solver::Impl::cancelUntil(std::uint32_t lvl) {
	if (decisionLevel() <= lvl) return;
	for (std::size_t i = trail.size(); i-- > trailLim[lvl];) {
		Lit p = trail[i];
		Var v = p.var();
		if (Weight w = objWeight[p.index()]; w > 0) lowerBound -= w;
		if (opts.phaseSaving) savedPhase[v] = p.positive();
		assign[v] = value_free;
		reason[v] = no_reason;
		heapInsert(v);
	}
	trail.resize(trailLim[lvl]);
	trailLim.resize(lvl);
	qhead    = trail.size();
	objDirty = true;
}

void Solver::Impl::resetTrail() {
	for (Lit p : trail) {
		assign[p.var()]      = value_free;
		reason[p.var()]      = no_reason;
		rootTainted[p.var()] = false;
	}
	trail.clear();
	trailLim.clear();
	qhead      = 0;
	lowerBound = 0;
	objDirty   = true;
}

std::uint32_t Solver::Impl::addClause(std::vector<Lit> lits, bool learnt, bool tainted, std::uint32_t lbd) {
	std::uint32_t cref;
	if (!freeSlots.empty()) {
		cref = freeSlots.back();
		freeSlots.pop_back();
		clauses[cref] = Clause{std::move(lits), learnt, tainted, false, lbd};
	}
	else {
		cref = static_cast<std::uint32_t>(clauses.size());
		clauses.push_back(Clause{std::move(lits), learnt, tainted, false, lbd});
	}
	if (learnt) ++learntCount;
	attach(cref);
	return cref;
}

void Solver::Impl::attach(std::uint32_t cref) {
	const Clause& c = clauses[cref];
	watches[c.lits[0].index()].push_back({cref, c.lits[1]});
	watches[c.lits[1].index()].push_back({cref, c.lits[0]});
}

bool Solver::Impl::locked(std::uint32_t cref) const {
	const Clause& c = clauses[cref];
	Var v = c.lits[0].var();
	return reason[v] == static_cast<std::int32_t>(cref) && value(c.lits[0]) == value_true;
}

void Solver::Impl::purgeWatches() {
	for (auto& ws : watches) {
		std::erase_if(ws, [&](const Watch& w) { return clauses[w.cref].removed; });
	}
}

void Solver::Impl::reduceLearnts() {
	std::vector<std::uint32_t> cands;
	for (std::uint32_t i = 0; i != clauses.size(); ++i) {
		const Clause& c = clauses[i];
		if (c.learnt && !c.removed && c.lits.size() > 2 && !locked(i)) cands.push_back(i);
	}
	std::stable_sort(cands.begin(), cands.end(), [&](std::uint32_t a, std::uint32_t b) { return clauses[a].lbd > clauses[b].lbd; });
	cands.resize(cands.size() / 2);
	for (std::uint32_t i : cands) {
		clauses[i].removed = true;
		clauses[i].lits.clear();
		freeSlots.push_back(i);
		--learntCount;
	}
	purgeWatches();
	maxLearnts *= 1.1;
}

void Solver::Impl::removeTainted() {
	bool any = false;
	for (std::uint32_t i = 0; i != clauses.size(); ++i) {
		Clause& c = clauses[i];
		if (c.learnt && !c.removed && c.tainted) {
			c.removed = true;
			c.lits.clear();
			freeSlots.push_back(i);
			--learntCount;
			any = true;
		}
	}
	if (any) purgeWatches();
}

Conflict Solver::Impl::propagateClauses(Lit p) {
	Lit   falseLit = ~p;
	auto& ws       = watches[falseLit.index()];
	std::size_t i = 0, j = 0, end = ws.size();
	while (i != end) {
		Watch w = ws[i++];
		if (value(w.blocker) == value_true) {
			ws[j++] = w;
			continue;
		}
		Clause& c = clauses[w.cref];
		if (c.lits[0] == falseLit) std::swap(c.lits[0], c.lits[1]);
		Lit   first = c.lits[0];
		Watch nw{w.cref, first};
		if (first != w.blocker && value(first) == value_true) {
			ws[j++] = nw;
			continue;
		}
		bool moved = false;
		for (std::size_t k = 2; k < c.lits.size(); ++k) {
			if (value(c.lits[k]) != value_false) {
				std::swap(c.lits[1], c.lits[k]);
				watches[c.lits[1].index()].push_back(nw);
				moved = true;
				break;
			}
		}
		if (moved) continue;
		ws[j++] = nw;
		if (value(first) == value_false) {
			while (i != end) ws[j++] = ws[i++];
			ws.resize(j);
			return Conflict{Conflict::clause, w.cref};
		}
		enqueue(first, static_cast<std::int32_t>(w.cref));
	}
	ws.resize(j);
	return {};
}

Conflict Solver::Impl::propagateObjective() {
	if (!bound) return {};
	if (lowerBound >= *bound) return Conflict{Conflict::objective, 0};
	if (!objDirty) return {};
	objDirty = false;
	for (Lit x : objLits) {
		Weight w = objWeight[x.index()];
		if (w < *bound - lowerBound) break;
		if (value(x) == value_free) {
			enqueue(~x, obj_reason);
			if (lowerBound >= *bound) return Conflict{Conflict::objective, 0};
		}
	}
	objDirty = false;
	return {};
}

Conflict Solver::Impl::propagate() {
	for (;;) {
		if (Conflict c = propagateObjective()) return c;
		if (qhead == trail.size()) return {};
		Lit p = trail[qhead++];
		if (Conflict c = propagateClauses(p)) return c;
	}
}

// Negations of all true objective literals assigned before trail position beforePos.
void Solver::Impl::explainObjective(std::uint32_t beforePos, std::vector<Lit>& out) const {
	for (std::uint32_t i = 0; i != beforePos; ++i) {
		Lit p = trail[i];
		if (objWeight[p.index()] > 0) out.push_back(~p);
	}
}

void Solver::Impl::conflictLits(const Conflict& c, std::vector<Lit>& out) const {
	out.clear();
	if (c.kind == Conflict::clause) {
		out = clauses[c.cref].lits;
	}
	else {
		explainObjective(static_cast<std::uint32_t>(trail.size()), out);
	}
}

std::uint32_t Solver::Impl::computeLbd(const std::vector<Lit>& lits) {
	std::vector<std::uint32_t> levels;
	levels.reserve(lits.size());
	for (Lit p : lits) levels.push_back(level[p.var()]);
	std::sort(levels.begin(), levels.end());
	return static_cast<std::uint32_t>(std::unique(levels.begin(), levels.end()) - levels.begin());
}

// First-UIP analysis. Precondition: the conflict has at least one literal on the current level.
// Returns whether the learnt clause depends on the objective bound.
bool Solver::Impl::analyze(const Conflict& confl, std::vector<Lit>& learnt) {
	bool tainted = confl.kind == Conflict::objective || clauses[confl.cref].tainted;
	learnt.assign(1, Lit{});
	std::vector<Lit>& ante = scratch;
	conflictLits(confl, ante);

	int         pathC = 0;
	std::size_t index = trail.size();
	Lit         p{};
	bool        haveP = false;
	for (;;) {
		for (Lit q : ante) {
			if (haveP && q == p) continue;
			Var v = q.var();
			if (level[v] == 0) {
				tainted = tainted || rootTainted[v];
				continue;
			}
			if (seen[v]) continue;
			seen[v] = true;
			bumpVar(v);
			if (level[v] >= decisionLevel()) ++pathC;
			else learnt.push_back(q);
		}
		do { --index; } while (!seen[trail[index].var()]);
		p     = trail[index];
		haveP = true;
		seen[p.var()] = false;
		if (--pathC <= 0) break;
		ante.clear();
		std::int32_t why = reason[p.var()];
		assert(why != no_reason);
		if (why == obj_reason) {
			tainted = true;
			explainObjective(trailPos[p.var()], ante);
		}
		else {
			const Clause& c = clauses[static_cast<std::uint32_t>(why)];
			tainted = tainted || c.tainted;
			ante.assign(c.lits.begin() + 1, c.lits.end());
		}
	}
	learnt[0] = ~p;
	for (std::size_t i = 1; i < learnt.size(); ++i) seen[learnt[i].var()] = false;
	// Put the literal of the highest remaining level in position 1.
	if (learnt.size() > 1) {
		std::size_t best = 1;
		for (std::size_t i = 2; i < learnt.size(); ++i) {
			if (level[learnt[i].var()] > level[learnt[best].var()]) best = i;
		}
		std::swap(learnt[1], learnt[best]);
	}
	return tainted;
}

void Solver::Impl::heapUp(std::size_t i) {
	Var v = heap[i];
	while (i > 0) {
		std::size_t parent = (i - 1) / 2;
		if (!heapBefore(v, heap[parent])) break;
		heap[i]            = heap[parent];
		heapIndex[heap[i]] = static_cast<std::int32_t>(i);
		i                  = parent;
	}
	heap[i]      = v;
	heapIndex[v] = static_cast<std::int32_t>(i);
}

void Solver::Impl::heapDown(std::size_t i) {
	Var v = heap[i];
	for (;;) {
		std::size_t child = 2 * i + 1;
		if (child >= heap.size()) break;
		if (child + 1 < heap.size() && heapBefore(heap[child + 1], heap[child])) ++child;
		if (!heapBefore(heap[child], v)) break;
		heap[i]            = heap[child];
		heapIndex[heap[i]] = static_cast<std::int32_t>(i);
		i                  = child;
	}
	heap[i]      = v;
	heapIndex[v] = static_cast<std::int32_t>(i);
}

void Solver::Impl::heapInsert(Var v) {
	if (heapIndex[v] >= 0) return;
	heap.push_back(v);
	heapUp(heap.size() - 1);
}

Var Solver::Impl::heapPop() {
	Var top = heap.front();
	heapIndex[top] = -1;
	Var last = heap.back();
	heap.pop_back();
	if (!heap.empty()) {
		heap[0] = last;
		heapDown(0);
	}
	return top;
}

void Solver::Impl::bumpVar(Var v) {
	if ((activity[v] += varInc) > 1e100) {
		for (auto& a : activity) a *= 1e-100;
		varInc *= 1e-100;
	}
	if (heapIndex[v] >= 0) heapUp(static_cast<std::size_t>(heapIndex[v]));
}

std::optional<Lit> Solver::Impl::pickBranch() {
	while (!heap.empty()) {
		Var v = heap.front();
		if (assign[v] != value_free) {
			heapPop();
			continue;
		}
		heapPop();
		bool sign = dirSign[v] >= 0 ? dirSign[v] == 1 : (opts.phaseSaving ? savedPhase[v] : opts.defaultSign);
		return sign ? Lit::pos(v) : Lit::neg(v);
	}
	return std::nullopt;
}

SolveResult Solver::Impl::solve(std::span<const Lit> assumptions, std::span<const Directive> directives,
                                const Budget& budget, std::optional<Cost> initialBound) {
	for (Lit p : assumptions) {
		if (p.var() == 0 || p.var() > numVars) throw UsageError("assumption on unknown variable " + std::to_string(p.var()));
	}
	for (const auto& d : directives) {
		if (d.level < 1) throw UsageError("directive level must be at least 1");
		if (d.var == 0 || d.var > numVars) throw UsageError("directive on unknown variable " + std::to_string(d.var));
	}
	if (budget.maxConflicts && *budget.maxConflicts == 0) throw UsageError("conflict budget must be at least 1");

	using clock = std::chrono::steady_clock;
	std::optional<clock::time_point> deadline;
	if (budget.wallClock) deadline = clock::now() + *budget.wallClock;

	// per-call state
	resetTrail();
	std::fill(dirLevel.begin(), dirLevel.end(), 0);
	std::fill(dirSign.begin(), dirSign.end(), std::int8_t(-1));
	for (const auto& d : directives) {
		if (d.level >= dirLevel[d.var]) {
			dirLevel[d.var] = d.level;
			dirSign[d.var]  = d.sign ? 1 : 0;
		}
	}
	heap.clear();
	std::fill(heapIndex.begin(), heapIndex.end(), -1);
	for (Var v = 1; v <= numVars; ++v) heapInsert(v);
	bound         = initialBound ? std::optional<Cost>(*initialBound + 1) : std::nullopt;
	solvedOnce    = true;
	firstRecorded = false;
	firstDecision.reset();

	SolveResult res;
	bool exhausted   = false;
	std::uint64_t restartIdx = 0;
	std::uint64_t nextRestart = static_cast<std::uint64_t>(luby(2.0, restartIdx) * opts.restartBase);
	std::uint64_t sinceRestart = 0;
	std::uint64_t steps = 0;
	std::vector<Lit> learnt;

	for (Lit u : units) {
		if (value(u) == value_false) exhausted = true;
		else if (value(u) == value_free) enqueue(u, no_reason);
	}

	while (!exhausted) {
		if (deadline && (++steps & 255u) == 0 && clock::now() >= *deadline) {
			res.interrupted = true;
			break;
		}
		Conflict confl = propagate();
		if (confl) {
			conflictLits(confl, scratch);
			std::uint32_t maxLevel = 0;
			for (Lit q : scratch) maxLevel = std::max(maxLevel, level[q.var()]);
			if (maxLevel == 0) {
				exhausted = true;
				break;
			}
			++res.conflicts;
			++sinceRestart;
			cancelUntil(maxLevel);
			bool tainted = analyze(confl, learnt);
			std::uint32_t bt = learnt.size() > 1 ? level[learnt[1].var()] : 0;
			cancelUntil(bt);
			if (learnt.size() == 1) {
				if (!tainted) units.push_back(learnt[0]);
				enqueue(learnt[0], no_reason, tainted);
			}
			else {
				std::uint32_t lbd  = computeLbd(learnt);
				std::uint32_t cref = addClause(learnt, true, tainted, lbd);
				enqueue(clauses[cref].lits[0], static_cast<std::int32_t>(cref));
			}
			varInc /= opts.varDecay;
			if (budget.maxConflicts && res.conflicts >= *budget.maxConflicts) break;
			if (deadline && clock::now() >= *deadline) {
				res.interrupted = true;
				break;
			}
			if (sinceRestart >= nextRestart) {
				sinceRestart = 0;
				nextRestart  = static_cast<std::uint64_t>(luby(2.0, ++restartIdx) * opts.restartBase);
				cancelUntil(0);
			}
			if (static_cast<double>(learntCount) >= maxLearnts) reduceLearnts();
			continue;
		}
		if (decisionLevel() < assumptions.size()) {
			Lit p = assumptions[decisionLevel()];
			if (value(p) == value_false) {
				exhausted = true;
				break;
			}
			newDecisionLevel();
			if (value(p) == value_free) enqueue(p, no_reason);
			continue;
		}
		std::optional<Lit> next = pickBranch();
		if (!next) {
			Solution sol;
			sol.assignment = Assignment(numVars);
			for (Var v = 1; v <= numVars; ++v) sol.assignment.set(v, assign[v] == value_true);
			sol.cost = lowerBound;
			assert(sol.cost == evaluateCost(prob, sol.assignment));
			res.modelCosts.push_back(sol.cost);
			res.model = std::move(sol);
			bound     = lowerBound;
			objDirty  = true;
			continue;
		}
		if (!firstRecorded && !res.model) {
			firstRecorded = true;
			firstDecision = *next;
		}
		newDecisionLevel();
		enqueue(*next, no_reason);
	}

	if (exhausted) res.status = res.model ? SolveStatus::Optimum : SolveStatus::Unsatisfiable;
	else           res.status = res.model ? SolveStatus::Satisfiable : SolveStatus::BudgetExhausted;

	resetTrail();
	removeTainted();
	std::fill(dirLevel.begin(), dirLevel.end(), 0);
	std::fill(dirSign.begin(), dirSign.end(), std::int8_t(-1));
	bound.reset();
	return res;
}

Solver::Solver(const Problem& problem, SolverOptions opts) : impl_(std::make_unique<Impl>(problem, opts)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

SolveResult Solver::solve(std::span<const Lit> assumptions, std::span<const Directive> directives, const Budget& budget,
                          std::optional<Cost> initialBound) {
	return impl_->solve(assumptions, directives, budget, initialBound);
}

std::optional<Lit> Solver::firstDecision() const {
	if (!impl_->solvedOnce) throw UsageError("firstDecision() called before solve()");
	return impl_->firstDecision;
}

const Problem& Solver::problem() const { return impl_->prob; }
std::size_t    Solver::numLearnts() const { return impl_->learntCount; }

} // namespace lnps
