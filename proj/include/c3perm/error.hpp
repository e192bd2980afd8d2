// Copyright 2026 The c3perm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace c3perm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class NotInvertible : public Error {
   public:
    NotInvertible() : Error("matrix is not invertible over F2") {}
};

class PreconditionViolated : public Error {
   public:
    using Error::Error;
};

class BadLength : public Error {
   public:
    using Error::Error;
};

class NotBijective : public Error {
   public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};

class NotStaircaseError : public Error {
   public:
    using Error::Error;
};

class NotAssociative : public Error {
   public:
    using Error::Error;
};

class NotStaircaseC3 : public Error {
   public:
    using Error::Error;
};

class NotInC3 : public Error {
   public:
    NotInC3(std::string generator, const std::string& reason)
        : Error("not in C3: conjugate of " + generator + " " + reason), generator_(std::move(generator)) {}
    const std::string& generator() const { return generator_; }

   private:
    std::string generator_;
};

class NotSemiClifford : public Error {
   public:
    using Error::Error;
};

/// Raised when a step that the underlying theory guarantees fails anyway.
class InternalContradiction : public Error {
   public:
    using Error::Error;
};

class TooLarge : public Error {
   public:
    using Error::Error;
};

class HasMismatch : public Error {
   public:
    HasMismatch(int first, int second)
        : Error("gates " + std::to_string(first) + " and " + std::to_string(second) + " mismatch"),
          first_(first),
          second_(second) {}
    int first() const { return first_; }
    int second() const { return second_; }

   private:
    int first_;
    int second_;
};

class ParseError : public Error {
   public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

   private:
    int line_;
};

class UnknownGate : public ParseError {
   public:
    using ParseError::ParseError;
};

class BadShardSpec : public Error {
   public:
    using Error::Error;
};

class CorruptCheckpoint : public Error {
   public:
    using Error::Error;
};

}  // namespace c3perm
