#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "scatter/graph.hpp"

namespace scatter {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised for disconnected input; the two vertices lie in different components.
class NotConnected : public Error {
 public:
  NotConnected(Vertex a, Vertex b)
      : Error("graph is not connected"), first(a), second(b) {}
  explicit NotConnected(const std::string& what) : Error(what) {}
  Vertex first = -1;
  Vertex second = -1;
};

/// Raised when the input has a chordless cycle of length >= 4 (given in cycle order).
class NotChordal : public Error {
 public:
  explicit NotChordal(std::vector<Vertex> chordless_cycle)
      : Error("graph is not chordal"), cycle(std::move(chordless_cycle)) {}
  std::vector<Vertex> cycle;
};

/// Two distinct minimal vertex separators sharing `shared`.
class NotStrictlyChordal : public Error {
 public:
  NotStrictlyChordal(Vertex v, VertexSet a, VertexSet b)
      : Error("graph is chordal but not strictly chordal"),
        shared(v),
        first(std::move(a)),
        second(std::move(b)) {}
  Vertex shared;
  VertexSet first;
  VertexSet second;
};

class CompleteGraph : public Error {
 public:
  CompleteGraph() : Error("graph is complete") {}
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t size, std::size_t cap)
      : Error("instance size " + std::to_string(size) + " exceeds cap " +
              std::to_string(cap)) {}
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace scatter
