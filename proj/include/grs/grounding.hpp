#pragma once

#include <stdexcept>

#include "grs/program.hpp"

namespace grs {

class GroundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instantiates variables that occur only in a rule body over the declared
/// domain. Head variables are untouched; constraints between constants are
/// evaluated (instances with a false constraint are dropped, satisfied
/// constant constraints are removed). The result satisfies
/// vars(body) subseteq vars(head) for every rule.
///
/// Throws GroundingError if body-only variables exist but the domain is
/// empty.
Program instantiate_body_only_variables(const Program& p);

/// Fully grounds a program: body-only instantiation followed by head
/// variable instantiation over the domain. Intended for the semantics
/// oracle, which requires a ground program.
Program fully_ground(const Program& p);

}  // namespace grs
