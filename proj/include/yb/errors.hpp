#pragma once

#include <stdexcept>
#include <string>

namespace yb {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input lies outside an operation's domain of definition.  Verification
// suites treat these as trial rejections rather than failures.
struct DomainError : Error {
  using Error::Error;
};

struct DivisionByZero : DomainError {
  DivisionByZero() : DomainError("division by zero") {}
};

struct SingularMatrix : DomainError {
  SingularMatrix() : DomainError("matrix is singular") {}
};

struct SingularB : DomainError {
  SingularB() : DomainError("matrix B is singular") {}
};

struct SingularP1 : DomainError {
  SingularP1() : DomainError("det P1(X,Y) = 0: input outside the map domain") {}
};

struct SingularDifference : DomainError {
  SingularDifference() : DomainError("det(U-Y) = 0") {}
};

struct NonGenericTriple : DomainError {
  NonGenericTriple() : DomainError("det N = 0: non-generic triple") {}
};

struct ChartSingular : DomainError {
  ChartSingular() : DomainError("point outside the chart domain") {}
};

struct BranchCut : DomainError {
  BranchCut() : DomainError("square-root radicand on the branch boundary") {}
};

struct PoleEncountered : DomainError {
  PoleEncountered() : DomainError("map evaluated at a pole") {}
};

struct SqueezeViolated : DomainError {
  SqueezeViolated() : DomainError("squeeze condition y1 = x2 violated") {}
};

struct ParseError : Error {
  using Error::Error;
};

struct SamplingExhausted : Error {
  SamplingExhausted() : Error("sampling rejected 1000 consecutive candidates") {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

struct UnknownMap : Error {
  explicit UnknownMap(const std::string& name) : Error("unknown map: " + name) {}
};

struct UnknownChart : Error {
  explicit UnknownChart(const std::string& name) : Error("unknown chart: " + name) {}
};

}  // namespace yb
