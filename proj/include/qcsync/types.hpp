#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qcsync {

template <typename Scalar>
using Complex = std::complex<Scalar>;

// Dense column of the 2^n computational-basis amplitudes of an n-qubit state.
template <typename Scalar>
using AmplitudeVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <typename Scalar>
using Matrix4c = Eigen::Matrix<Complex<Scalar>, 4, 4>;

// Single-qubit readout frame: the computational pair {|0>,|1>} or the
// rotated pair {|+>,|->} obtained by rotate_to_measurement_basis.
enum class Basis { computational, plusminus };

// Outcome of a measurement-basis readout. plus corresponds to reading 0
// after the rotation, minus to reading 1.
enum class PlusMinus : int { plus = 0, minus = 1 };

inline const char* to_string(PlusMinus outcome) {
  return outcome == PlusMinus::plus ? "plus" : "minus";
}

// Thrown when a request would exceed the dense-amplitude register cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcsync
