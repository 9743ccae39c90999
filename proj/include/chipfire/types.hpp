#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace chipfire {

using Int = std::int64_t;
using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Int>;
using IntVector = VectorX<Int>;

// Chip counts per vertex, indexed in graph order.
using Divisor = IntVector;
// Net lending moves per vertex; negative entries are borrowing moves.
using FiringScript = IntVector;
// Column j holds the chips gained by each vertex when vertex j lends once,
// with -val(v_j) on the diagonal. Not symmetric for weighted graphs.
using LaplacianMatrix = IntMatrix;

inline Int degree(const Divisor& d) { return d.sum(); }

inline bool is_effective(const Divisor& d) {
  return d.size() == 0 || d.minCoeff() >= 0;
}

// D(v) >= 0 for every v != q.
inline bool is_q_effective(const Divisor& d, Index q) {
  for (Index v = 0; v < d.size(); ++v) {
    if (v != q && d(v) < 0) return false;
  }
  return true;
}

// Pointwise a >= b.
inline bool dominates(const Divisor& a, const Divisor& b) {
  return (a.array() >= b.array()).all();
}

// a >= b pointwise with at least one strict coordinate.
inline bool strictly_dominates(const Divisor& a, const Divisor& b) {
  return dominates(a, b) && (a.array() > b.array()).any();
}

}  // namespace chipfire
