#pragma once

#include <Eigen/Core>

#include "asymgauge/rational.hpp"

namespace asymgauge {

using Eigen::Index;

using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

using Vector2d = Eigen::Vector2d;
using Vector3d = Eigen::Vector3d;
using VectorXd = Eigen::VectorXd;

inline RatVector rat_vector(std::initializer_list<long> entries) {
  RatVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v[i++] = Rational(e);
  return v;
}

inline RatVector from_double_vector(const VectorXd& x) {
  RatVector v(x.size());
  for (Index i = 0; i < x.size(); ++i) v[i] = Rational::from_double(x[i]);
  return v;
}

inline VectorXd to_double_vector(const RatVector& x) {
  VectorXd v(x.size());
  for (Index i = 0; i < x.size(); ++i) v[i] = x[i].to_double();
  return v;
}

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace asymgauge
