#pragma once

#include <stdexcept>
#include <string>

namespace paramedial {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

// Arithmetic between residues or matrices over different moduli.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public NotInvertible {
 public:
  using NotInvertible::NotInvertible;
};

// An affine form whose automorphisms violate phi^2 = psi^2.
class NotParamedial : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// Order whose abelian groups fall outside the implemented classification.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

// Exhaustive search asked to go beyond its configured size limit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace paramedial
