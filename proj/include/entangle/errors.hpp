/*
 * Copyright 2026 The Entangle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entangle {

/** Base of every exception thrown by the library. */
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** Malformed textual input (edge lists, graph6). */
class ParseError : public Error
{
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line)
    {
    }

    /** 1-based line number of the offending input, 0 when not line oriented. */
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/** Operand outside the domain of an operation (missing vertex or edge, bad k). */
class DomainError : public Error
{
public:
    using Error::Error;
};

/** Operation not defined for this kind of graph (e.g. contracting an arc). */
class UnsupportedOperation : public Error
{
public:
    using Error::Error;
};

/** Input exceeds a search-space guard. */
class SizeLimitError : public Error
{
public:
    using Error::Error;
};

/** Caller broke an API contract (wrong turn marker, mismatched arena). */
class ContractViolation : public Error
{
public:
    using Error::Error;
};

/** The strategy transfer simulation broke one of its invariants. */
class TransferError : public Error
{
public:
    using Error::Error;
};

} // namespace entangle
