#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mvis {

/// A request above a documented size ceiling (solver, oracles, graph width).
class CeilingError : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/// Reading or decoding an external graph representation failed.
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph-construction expression, with the byte offset of the problem.
class ParseError : public std::invalid_argument
{
public:
  ParseError(const std::string &message, std::size_t offset, std::vector<std::string> expected = {})
      : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset),
        expected_(std::move(expected))
  {
  }

  auto offset() const -> std::size_t { return offset_; }
  auto expected() const -> const std::vector<std::string> & { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A well-formed expression that cannot be evaluated (e.g. line graph of an edgeless graph).
class EvalError : public std::invalid_argument
{
public:
  EvalError(const std::string &message, std::size_t offset)
      : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset)
  {
  }

  auto offset() const -> std::size_t { return offset_; }

private:
  std::size_t offset_;
};

} // namespace mvis
