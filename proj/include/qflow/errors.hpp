#pragma once

#include <stdexcept>
#include <string>

namespace qflow {

// Evaluation requested on the polar axis where the local u_phi direction is
// undefined and the field has no finite limit.
class pole_error : public std::domain_error {
public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Velocity requested at (or too near) a node of the probability density.
class node_error : public std::domain_error {
public:
  explicit node_error(const std::string& what) : std::domain_error(what) {}
};

// A quadrature or finite-difference evaluation produced a non-finite value
// or failed its convergence check.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qflow
