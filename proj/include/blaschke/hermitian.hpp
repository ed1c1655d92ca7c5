/*
Copyright 2026 The Blaschke Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


#ifndef BLASCHKE_HERMITIAN_HPP_
#define BLASCHKE_HERMITIAN_HPP_

#include <Eigen/Dense>

namespace blaschke {

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors;  // columns match values
  int sweeps = 0;
};

// Cyclic complex Jacobi. Off-diagonal mass is driven below 1e-14 of the
// Frobenius norm; throws Error(kEigensolverFailure) after 100 sweeps or on
// non-finite input.
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& h);

}  // namespace blaschke

#endif  // BLASCHKE_HERMITIAN_HPP_
