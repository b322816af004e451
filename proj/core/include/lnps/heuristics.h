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
#ifndef LNPS_HEURISTICS_H_INCLUDED
#define LNPS_HEURISTICS_H_INCLUDED

#include <lnps/config.h>
#include <lnps/model.h>
#include <lnps/solver.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lnps {

//! The quadruple heuristic(atom, weight, modifier, step).
struct HeuristicAtom {
	SymbolicAtom   atom;
	PriorityWeight weight{PriorityWeight::level(1)};
	bool           sign{true};
	std::uint32_t  step{1};
	bool operator==(const HeuristicAtom&) const = default;
};

//! Branching directives and fixing assumptions of one iteration.
struct DirectiveSet {
	std::vector<Directive> directives;
	std::vector<Lit>       fixing;
	std::uint32_t          step{0};
};

//! One heuristic atom per (undestroyed atom, matching prioritize spec).
std::vector<HeuristicAtom> prioritize(std::span<const SymbolicAtom> undestroyed, const LnpsConfig& cfg, std::uint32_t step);

/*!
 * Finite weights become directives, INF weights become fixing assumptions
 * (+a for sign true, -a for sign false). Per variable a fixing dominates any
 * directive and among directives the highest level wins (ties: last one).
 *
 * Throws ConfigError on opposite INF fixings of one variable and UsageError
 * if the atoms do not share one step.
 */
DirectiveSet compileDirectives(std::span<const HeuristicAtom> atoms);

//! Holds the directive set of the single live step.
class DirectiveRegistry {
public:
	//! Throws UsageError if another step is still live.
	void install(DirectiveSet set);
	//! Throws UsageError unless \p step is the live step.
	void retire(std::uint32_t step);

	const DirectiveSet* live() const { return live_ ? &*live_ : nullptr; }
	std::span<const Directive> directives() const;
	std::span<const Lit>       fixing() const;
private:
	std::optional<DirectiveSet> live_;
};

} // namespace lnps
#endif
