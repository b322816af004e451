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
#ifndef LNPS_RANDOM_H_INCLUDED
#define LNPS_RANDOM_H_INCLUDED

#include <cstdint>
#include <random>
#include <vector>

namespace lnps {

/*!
 * Seeded random source.
 *
 * Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
 * derives bounded integers itself because the standard distributions are
 * implementation-defined. Runs are therefore reproducible across toolchains.
 */
class Rng {
public:
	explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

	std::uint64_t next() { return gen_(); }
	//! Uniform integer in [0, n). Requires n > 0.
	std::uint64_t below(std::uint64_t n);
	//! Uniform real in [0, 1).
	double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
	bool   chance(double p) { return uniform01() < p; }
	//! k distinct indices drawn uniformly from [0, n), in draw order.
	std::vector<std::size_t> sample(std::size_t n, std::size_t k);

private:
	std::mt19937_64 gen_;
};

} // namespace lnps
#endif
