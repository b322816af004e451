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
#include <lnps/heuristics.h>

#include <lnps/error.h>

#include <map>

namespace lnps {

std::vector<HeuristicAtom> prioritize(std::span<const SymbolicAtom> undestroyed, const LnpsConfig& cfg, std::uint32_t step) {
	std::vector<HeuristicAtom> out;
	for (const auto& atom : undestroyed) {
		for (const auto& spec : cfg.prioritizes) {
			if (atom.matches(spec.predicate, spec.arity)) out.push_back({atom, spec.weight, spec.sign, step});
		}
	}
	return out;
}

DirectiveSet compileDirectives(std::span<const HeuristicAtom> atoms) {
	DirectiveSet set;
	if (!atoms.empty()) set.step = atoms.front().step;

	std::map<Var, bool>      fixed;
	std::map<Var, Directive> directed;
	std::vector<Var>         order;
	for (const auto& h : atoms) {
		if (h.step != set.step) throw UsageError("heuristic atoms of different steps");
		Var v = h.atom.var;
		if (!fixed.count(v) && !directed.count(v)) order.push_back(v);
		if (h.weight.isInf()) {
			auto [it, inserted] = fixed.emplace(v, h.sign);
			if (!inserted && it->second != h.sign) throw ConfigError("contradictory fixing of " + h.atom.symbol());
			continue;
		}
		Directive d{v, h.weight.level(), h.sign};
		auto [it, inserted] = directed.emplace(v, d);
		if (!inserted && d.level >= it->second.level) it->second = d;
	}
	for (Var v : order) {
		if (auto f = fixed.find(v); f != fixed.end()) set.fixing.push_back(f->second ? Lit::pos(v) : Lit::neg(v));
		else set.directives.push_back(directed.at(v));
	}
	return set;
}

void DirectiveRegistry::install(DirectiveSet set) {
	if (live_) throw UsageError("step " + std::to_string(live_->step) + " is still live");
	live_ = std::move(set);
}

void DirectiveRegistry::retire(std::uint32_t step) {
	if (!live_ || live_->step != step) throw UsageError("step " + std::to_string(step) + " is not live");
	live_.reset();
}

std::span<const Directive> DirectiveRegistry::directives() const {
	return live_ ? std::span<const Directive>(live_->directives) : std::span<const Directive>{};
}

std::span<const Lit> DirectiveRegistry::fixing() const {
	return live_ ? std::span<const Lit>(live_->fixing) : std::span<const Lit>{};
}

} // namespace lnps
