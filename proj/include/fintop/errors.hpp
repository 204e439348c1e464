#pragma once

#include <stdexcept>
#include <string>

#include "fintop/mask.hpp"

namespace fintop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The given family is not a topology. Carries the first violation found.
struct NotATopologyError : Error {
  enum class Kind { MissingEmpty, MissingFull, Union, Intersection, OutOfRange };
  Kind kind;
  Mask a = 0;
  Mask b = 0;

  NotATopologyError(Kind k, Mask a_, Mask b_, const std::string& what)
      : Error(what), kind(k), a(a_), b(b_) {}
};

struct SizeCapExceededError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

struct NotContinuousError : Error {
  using Error::Error;
};

struct CodomainNotT0Error : Error {
  using Error::Error;
};

struct NotOpenError : Error {
  using Error::Error;
};

struct NoSeparationError : Error {
  using Error::Error;
};

struct NotACongruenceError : Error {
  int u = -1;
  int v = -1;
  NotACongruenceError(int u_, int v_, const std::string& what)
      : Error(what), u(u_), v(v_) {}
};

struct NotAnIsomorphismError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct NotAHomeomorphismError : Error {
  int piece_a = -1;
  int piece_b = -1;
  NotAHomeomorphismError(int a, int b, const std::string& what)
      : Error(what), piece_a(a), piece_b(b) {}
};

// A gluing datum broke one of the compatibility laws; carries the witness
// triple of piece indices and the failed clause.
struct CocycleViolationError : Error {
  enum class Clause { SelfOverlap, SelfMap, OverlapTransport, Composition, Inverse };
  Clause clause;
  int alpha = -1;
  int beta = -1;
  int gamma = -1;

  CocycleViolationError(Clause c, int a, int b, int g, const std::string& what)
      : Error(what), clause(c), alpha(a), beta(b), gamma(g) {}
};

struct UnknownPropositionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace fintop
