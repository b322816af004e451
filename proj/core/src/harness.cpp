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

#include <lnps/error.h>
#include <lnps/random.h>
#include <lnps/solver.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lnps {

namespace {

struct MaskClause {
	std::uint32_t pos{0};
	std::uint32_t neg{0};
};

struct MaskProblem {
	std::vector<MaskClause>                          clauses;
	std::vector<std::pair<Weight, MaskClause>>       terms;
};

MaskProblem toMasks(const Problem& p) {
	if (p.numVars > oracle_max_vars) {
		throw UsageError("enumeration limited to " + std::to_string(oracle_max_vars) + " variables, got " + std::to_string(p.numVars));
	}
	auto bit = [](Lit x) { return std::uint32_t(1) << (x.var() - 1); };
	MaskProblem mp;
	for (const auto& c : p.clauses) {
		MaskClause mc;
		for (Lit x : c) (x.negative() ? mc.neg : mc.pos) |= bit(x);
		mp.clauses.push_back(mc);
	}
	for (const auto& t : p.objective) {
		MaskClause mc;
		(t.lit.negative() ? mc.neg : mc.pos) |= bit(t.lit);
		mp.terms.emplace_back(t.weight, mc);
	}
	return mp;
}

template <class F>
void forEachModel(const Problem& p, F&& f) {
	MaskProblem   mp  = toMasks(p);
	std::uint64_t end = std::uint64_t(1) << p.numVars;
	for (std::uint64_t x = 0; x != end; ++x) {
		auto a  = static_cast<std::uint32_t>(x);
		bool ok = true;
		for (const auto& c : mp.clauses) {
			if (((a & c.pos) | (~a & c.neg)) == 0) {
				ok = false;
				break;
			}
		}
		if (ok) f(a, mp);
	}
}

} // namespace

OracleResult bruteForceOptimum(const Problem& p) {
	OracleResult res;
	forEachModel(p, [&](std::uint32_t a, const MaskProblem& mp) {
		Cost c = 0;
		for (const auto& [w, m] : mp.terms) {
			if (((a & m.pos) | (~a & m.neg)) != 0) c += w;
		}
		if (!res.satisfiable || c < res.cost) res.cost = c;
		res.satisfiable = true;
	});
	return res;
}

std::uint64_t countModels(const Problem& p) {
	std::uint64_t n = 0;
	forEachModel(p, [&](std::uint32_t, const MaskProblem&) { ++n; });
	return n;
}

Problem generateInstance(std::uint64_t seed, std::uint32_t numVars, double clauseDensity, double objectiveDensity) {
	if (numVars == 0) throw UsageError("number of variables must be positive");
	if (!(clauseDensity > 0 && clauseDensity <= 1) || !(objectiveDensity > 0 && objectiveDensity <= 1)) {
		throw UsageError("densities must be in (0, 1]");
	}
	constexpr int max_attempts = 1000;
	Rng rng(seed);
	const auto numClauses = static_cast<std::size_t>(std::ceil(clauseDensity * 4.26 * numVars));
	const auto width      = std::min<std::uint32_t>(3, numVars);
	for (int attempt = 0; attempt != max_attempts; ++attempt) {
		Problem p;
		p.numVars = numVars;
		for (std::size_t i = 0; i != numClauses; ++i) {
			std::vector<Lit> clause;
			for (std::size_t k : rng.sample(numVars, width)) {
				Var v = static_cast<Var>(k + 1);
				clause.push_back(rng.chance(0.5) ? Lit::pos(v) : Lit::neg(v));
			}
			p.clauses.push_back(std::move(clause));
		}
		for (Var v = 1; v <= numVars; ++v) {
			if (rng.chance(objectiveDensity)) p.objective.push_back({static_cast<Weight>(1 + rng.below(9)), Lit::pos(v)});
			p.atoms.push_back(SymbolicAtom{v, "sel", {std::int64_t(v)}});
		}
		bool sat = false;
		if (numVars <= 20) {
			sat = bruteForceOptimum(p).satisfiable;
		}
		else {
			Solver s(p);
			sat = s.solve(Budget::conflicts(100000)).model.has_value();
		}
		if (sat) return p;
	}
	throw Error("no satisfiable instance after " + std::to_string(max_attempts) + " attempts");
}

Problem makeTourInstance(const std::vector<std::vector<Weight>>& dist) {
	const auto n = static_cast<std::uint32_t>(dist.size());
	if (n < 3 || n > 5) throw UsageError("tour instances support 3 to 5 cities");
	Problem p;
	std::vector<std::vector<Var>> arc(n, std::vector<Var>(n, 0));
	for (std::uint32_t i = 0; i != n; ++i) {
		if (dist[i].size() != n) throw UsageError("distance matrix must be square");
		for (std::uint32_t j = 0; j != n; ++j) {
			if (i == j) continue;
			arc[i][j] = ++p.numVars;
			p.atoms.push_back(SymbolicAtom{arc[i][j], "cycle", {std::int64_t(i + 1), std::int64_t(j + 1)}});
		}
	}
	auto exactlyOne = [&](const std::vector<Var>& vs) {
		std::vector<Lit> some;
		for (Var v : vs) some.push_back(Lit::pos(v));
		p.clauses.push_back(some);
		for (std::size_t a = 0; a != vs.size(); ++a) {
			for (std::size_t b = a + 1; b != vs.size(); ++b) p.clauses.push_back({Lit::neg(vs[a]), Lit::neg(vs[b])});
		}
	};
	for (std::uint32_t i = 0; i != n; ++i) {
		std::vector<Var> out, in;
		for (std::uint32_t j = 0; j != n; ++j) {
			if (i == j) continue;
			out.push_back(arc[i][j]);
			in.push_back(arc[j][i]);
		}
		exactlyOne(out);
		exactlyOne(in);
	}
	for (std::uint32_t i = 0; i != n; ++i) {
		for (std::uint32_t j = i + 1; j != n; ++j) p.clauses.push_back({Lit::neg(arc[i][j]), Lit::neg(arc[j][i])});
	}
	for (std::uint32_t i = 0; i != n; ++i) {
		for (std::uint32_t j = 0; j != n; ++j) {
			if (i != j && dist[i][j] > 0) p.objective.push_back({dist[i][j], Lit::pos(arc[i][j])});
		}
	}
	p.validate();
	return p;
}

std::optional<std::uint64_t> plannedConflicts(const EngineParams& params) {
	if (!params.maxIterations || !params.initBudget.maxConflicts || !params.iterBudget.maxConflicts) return std::nullopt;
	std::uint64_t total = *params.initBudget.maxConflicts;
	Budget        live  = params.iterBudget;
	for (std::uint64_t i = 0; i != *params.maxIterations; ++i) {
		total += *live.maxConflicts;
		live = escalateBudget(live, params.escalation);
	}
	return total;
}

namespace {

SeedRun runSeed(const Problem& problem, const LnpsConfig& config, EngineParams params, std::uint64_t seed) {
	SeedRun r;
	r.seed      = seed;
	params.seed = seed;
	auto start  = std::chrono::steady_clock::now();
	try {
		Outcome out     = run(problem, config, params);
		r.cost          = out.best.cost;
		r.initialCost   = out.initialCost;
		r.provenOptimal = out.provenOptimal;
		r.iterations    = out.iterations;
		r.conflicts     = out.totalConflicts();
		r.trace         = std::move(out.trace);
	}
	catch (const Error& e) {
		r.error = "seed " + std::to_string(seed) + ": " + e.what();
	}
	r.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return r;
}

} // namespace

void summarize(RunReport& rep) {
	rep.avg.reset();
	rep.min.reset();
	rep.max.reset();
	rep.rate.reset();
	rep.provenRuns = rep.failedRuns = 0;
	double      sum = 0;
	std::size_t ok  = 0;
	for (const auto& r : rep.runs) {
		if (!r.cost) {
			++rep.failedRuns;
			continue;
		}
		++ok;
		sum += static_cast<double>(*r.cost);
		rep.min = rep.min ? std::min(*rep.min, *r.cost) : *r.cost;
		rep.max = rep.max ? std::max(*rep.max, *r.cost) : *r.cost;
		rep.provenRuns += r.provenOptimal;
	}
	if (ok) rep.avg = sum / static_cast<double>(ok);
	if (rep.avg && rep.plainCost) {
		rep.rate = *rep.plainCost > 0 ? *rep.avg / static_cast<double>(*rep.plainCost)
		                              : (*rep.avg == 0 ? 1.0 : HUGE_VAL);
	}
}

RunReport runSuite(const std::string& name, const Problem& problem, const LnpsConfig& config, const EngineParams& params,
                   std::span<const std::uint64_t> seeds, unsigned threads) {
	auto      start = std::chrono::steady_clock::now();
	RunReport rep;
	rep.instance = name;
	if (threads <= 1) {
		for (auto s : seeds) rep.runs.push_back(runSeed(problem, config, params, s));
	}
	else {
		std::vector<std::future<SeedRun>> pending;
		for (std::size_t i = 0; i < seeds.size(); i += threads) {
			for (std::size_t k = i; k < std::min(seeds.size(), i + threads); ++k) {
				pending.push_back(std::async(std::launch::async, runSeed, std::cref(problem), std::cref(config), params, seeds[k]));
			}
			for (auto& f : pending) rep.runs.push_back(f.get());
			pending.clear();
		}
	}
	std::stable_sort(rep.runs.begin(), rep.runs.end(), [](const SeedRun& a, const SeedRun& b) { return a.seed < b.seed; });

	std::uint64_t actual = 0;
	for (const auto& r : rep.runs) actual = std::max(actual, r.conflicts);
	rep.plainBudget = plannedConflicts(params).value_or(std::max<std::uint64_t>(actual, 1));
	Solver      plain(problem, params.solver);
	SolveResult res  = plain.solve(Budget::conflicts(rep.plainBudget));
	rep.plainStatus  = res.status;
	if (res.model) rep.plainCost = res.model->cost;
	summarize(rep);
	rep.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return rep;
}

std::string readFile(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw Error("cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

RunReport runSuite(const RunSpec& spec) {
	Problem    problem = parseInstance(readFile(spec.instancePath));
	LnpsConfig config  = parseConfig(readFile(spec.configPath));
	return runSuite(spec.instancePath, problem, config, spec.params, spec.seeds, spec.threads);
}

namespace {

template <class T>
std::string optStr(const std::optional<T>& x, int precision = -1) {
	if (!x) return "";
	std::ostringstream os;
	if (precision >= 0) os << std::fixed << std::setprecision(precision);
	os << *x;
	return os.str();
}

} // namespace

void writeCsv(std::ostream& os, std::span<const RunReport> reports) {
	os << "instance,plain,plain_status,avg,min,max,rate,optimal_runs,failed_runs,runs\n";
	double      rateSum = 0;
	std::size_t rated   = 0;
	for (const auto& r : reports) {
		os << r.instance << ',' << optStr(r.plainCost) << ',' << toString(r.plainStatus) << ',' << optStr(r.avg, 1) << ','
		   << optStr(r.min) << ',' << optStr(r.max) << ',' << optStr(r.rate, 3) << ',' << r.provenRuns << ','
		   << r.failedRuns << ',' << r.runs.size() << '\n';
		if (r.rate) {
			rateSum += *r.rate;
			++rated;
		}
	}
	os << "Average rate,,,,,,";
	if (rated) os << std::fixed << std::setprecision(3) << rateSum / static_cast<double>(rated) << std::defaultfloat;
	os << ",,,\n";
}

void writeTrace(std::ostream& os, const std::string& instance, std::uint64_t seed, std::span<const IterationRecord> trace) {
	for (const auto& rec : trace) {
		nlohmann::ordered_json j;
		j["instance"]      = instance;
		j["seed"]          = seed;
		j["step"]          = rec.step;
		j["status"]        = toString(rec.status);
		j["destroyed"]     = rec.destroyed;
		j["temporal_cost"] = rec.temporalCost ? nlohmann::ordered_json(*rec.temporalCost) : nlohmann::ordered_json(nullptr);
		j["accepted"]      = rec.accepted;
		j["current_cost"]  = rec.currentCost;
		j["best_cost"]     = rec.bestCost;
		j["conflicts"]     = rec.conflicts;
		os << j.dump() << '\n';
	}
}

void writeTrace(std::ostream& os, const RunReport& report) {
	for (const auto& r : report.runs) writeTrace(os, report.instance, r.seed, r.trace);
}

} // namespace lnps
