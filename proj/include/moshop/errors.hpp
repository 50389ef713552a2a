#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moshop {

// Base for every error raised by the library. Each subclass maps to one
// failure class callers are expected to distinguish (CLI exit codes, HTTP
// statuses).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller.
class ContractError : public Error {
public:
  using Error::Error;
};

// Gene string is not a permutation with repetition of the instance's jobs.
class GenotypeError : public ContractError {
public:
  GenotypeError(const std::string& what, int job) : ContractError(what), job_(job) {}
  int job() const noexcept { return job_; }

private:
  int job_;
};

// Objective selection cannot be evaluated on the given instance.
class SpecError : public ContractError {
public:
  using ContractError::ContractError;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class SchemaError : public Error {
public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

class NotFoundError : public Error {
public:
  using Error::Error;
};

class IntegrityError : public Error {
public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the caller's limit.
class RefusalError : public Error {
public:
  explicit RefusalError(unsigned long long count)
      : Error("enumeration refused: " + std::to_string(count) + " sequences exceed the limit"),
        count_(count) {}
  unsigned long long count() const noexcept { return count_; }

private:
  unsigned long long count_;
};

// Raised by aspiration-level finalization unless exactly one candidate remains.
class NotConvergedError : public Error {
public:
  explicit NotConvergedError(std::size_t count)
      : Error("aspiration set holds " + std::to_string(count) + " solutions, expected 1"),
        count_(count) {}
  std::size_t count() const noexcept { return count_; }

private:
  std::size_t count_;
};

} // namespace moshop
