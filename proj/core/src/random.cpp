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
#include <lnps/random.h>

#include <cassert>
#include <numeric>
#include <utility>

namespace lnps {

std::uint64_t Rng::below(std::uint64_t n) {
	assert(n > 0);
	// Rejection sampling: discard the top partial bucket to avoid modulo bias.
	const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
	std::uint64_t x;
	do { x = next(); } while (x >= limit);
	return x % n;
}

std::vector<std::size_t> Rng::sample(std::size_t n, std::size_t k) {
	assert(k <= n);
	std::vector<std::size_t> idx(n);
	std::iota(idx.begin(), idx.end(), std::size_t{0});
	for (std::size_t i = 0; i != k; ++i) {
		std::size_t j = i + static_cast<std::size_t>(below(n - i));
		std::swap(idx[i], idx[j]);
	}
	idx.resize(k);
	return idx;
}

} // namespace lnps
