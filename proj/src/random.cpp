#include "qcf/random.hpp"

#include <stdexcept>

namespace qcf {

namespace {

Complex gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  const double re = n(rng);
  return {re, n(rng)};
}

}  // namespace

QubitOperator random_state(std::mt19937_64& rng, bool mixed) {
  if (!mixed) {
    const Complex c0 = gaussian_complex(rng);
    Eigen::Vector2cd v(c0, gaussian_complex(rng));
    v.normalize();
    return v * v.adjoint();
  }
  const QubitOperator g = random_operator(rng);
  const QubitOperator rho = g * g.adjoint();
  return rho / rho.trace().real();
}

QubitOperator random_operator(std::mt19937_64& rng) {
  QubitOperator g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = gaussian_complex(rng);
  }
  return g;
}

KrausSet random_kraus(std::mt19937_64& rng, int rank) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("Kraus rank must be between 1 and 4");
  Eigen::MatrixXcd g(2 * rank, 2);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = gaussian_complex(rng);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  const Eigen::MatrixXcd v = qr.householderQ() * Eigen::MatrixXcd::Identity(2 * rank, 2);
  KrausSet k;
  for (int r = 0; r < rank; ++r) k.operators.emplace_back(v.block(2 * r, 0, 2, 2));
  return k;
}

}  // namespace qcf
