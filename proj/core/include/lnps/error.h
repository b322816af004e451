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
#ifndef LNPS_ERROR_H_INCLUDED
#define LNPS_ERROR_H_INCLUDED

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnps {

//! Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

//! Malformed instance or configuration text.
class ParseError : public Error {
public:
	ParseError(std::size_t line, const std::string& msg)
		: Error("line " + std::to_string(line) + ": " + msg), line_(line), detail_(msg) {}
	std::size_t        line()   const { return line_; }
	const std::string& detail() const { return detail_; }
private:
	std::size_t line_;
	std::string detail_;
};

//! An API was called in a state or with arguments that violate its contract.
class UsageError : public Error {
public:
	using Error::Error;
};

//! A configuration is inconsistent in itself or with the problem it is applied to.
class ConfigError : public Error {
public:
	using Error::Error;
};

//! The engine could not produce a starting solution.
class EngineError : public Error {
public:
	using Error::Error;
};

} // namespace lnps
#endif
