/*
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

namespace skyline {

/// Base class for all errors raised by the engine. `exit_code()` is the
/// process exit code the CLI maps the error class to.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string &msg) : std::runtime_error(msg) {}
  virtual int exit_code() const { return 1; }
};

/// Lexer or parser rejected the query text. Carries the byte offset of the
/// offending position in the original query string.
class ParseError : public EngineError {
 public:
  ParseError(const std::string &msg, size_t offset)
      : EngineError(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  size_t offset() const { return offset_; }
  int exit_code() const override { return 2; }

 private:
  size_t offset_;
};

/// Query is syntactically valid but does not resolve against the schema
/// (unknown column, type mismatch, invalid skyline spec, ...).
class AnalysisError : public EngineError {
 public:
  using EngineError::EngineError;
  int exit_code() const override { return 3; }
};

/// Physical planning rejected the requested configuration, e.g. forcing a
/// complete-only algorithm onto nullable skyline dimensions.
class PlanError : public EngineError {
 public:
  using EngineError::EngineError;
  int exit_code() const override { return 3; }
};

/// Input data could not be ingested (malformed CSV, arity mismatch,
/// unparsable literal, NaN float, nullability violation).
class IngestError : public EngineError {
 public:
  using EngineError::EngineError;
  int exit_code() const override { return 4; }
};

/// Runtime failure during query execution or I/O.
class ExecError : public EngineError {
 public:
  using EngineError::EngineError;
  int exit_code() const override { return 4; }
};

/// A run exceeded its wall-clock budget and was abandoned cooperatively.
class TimeoutError : public ExecError {
 public:
  using ExecError::ExecError;
};

/// Internal contract violation. User input can never trigger this through a
/// correctly working planner; if it surfaces, it is a bug in the engine (or a
/// false COMPLETE assertion in the query, which bypasses the planner's
/// routing of nullable data to the incomplete path).
class EngineDefect : public std::logic_error {
 public:
  explicit EngineDefect(const std::string &msg) : std::logic_error("engine defect: " + msg) {}
};

}  // namespace skyline
