#pragma once

// Dense-matrix ground truth for qubit channels. Nothing in here touches the
// Grassmann machinery.
//
// Joint system-environment vectors use the ordering {|00>, |10>, |01>, |11>}
// with |jk> = |j>_S ⊗ |k>_E, i.e. flat index j + 2k.

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

#include "qcf/hybrid.hpp"

namespace qcf {

using Matrix4 = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, double min_eigenvalue = 0.0)
      : std::invalid_argument(what), min_eigenvalue_(min_eigenvalue) {}
  [[nodiscard]] double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

inline constexpr double kKrausCompletenessTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kChoiRankThreshold = 1e-12;
inline constexpr double kEntropyZero = 1e-14;

struct KrausSet {
  std::vector<QubitOperator> operators;

  // max |sum M^† M - 1|
  [[nodiscard]] double completeness_defect() const;
  void validate(double tol = kKrausCompletenessTolerance) const;
};

struct ChoiMatrix {
  // sum_ij |i><j| ⊗ N(|i><j|), trace 2 for trace-preserving N.
  Matrix4 matrix;
};

struct AffineChannelData {
  Vector3 t = Vector3::Zero();
  Matrix3 T = Matrix3::Identity();
};

struct CpCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

QubitOperator apply_channel(const KrausSet& k, const QubitOperator& rho);

ChoiMatrix choi(const KrausSet& k);
KrausSet kraus_from_choi(const ChoiMatrix& c);
CpCheck cp_check(const ChoiMatrix& c, double tol = kPsdTolerance);

AffineChannelData tT_from_kraus(const KrausSet& k);
ChoiMatrix choi_from_tT(const AffineChannelData& d);
KrausSet kraus_from_tT(const AffineChannelData& d);

// K2 ∘ K1: apply K1 first.
KrausSet compose_kraus(const KrausSet& k2, const KrausSet& k1);

// Largest entry difference of the two channels' action on |i><j|.
double channel_distance(const KrausSet& a, const KrausSet& b);

double unitarity_defect(const Matrix4& u);

// Tr_E[U (rho ⊗ rho_E) U^†]
KrausSet kraus_from_dilation(const Matrix4& u, const QubitOperator& rho_env);

// Tr_S[U (rho ⊗ rho_E) U^†]. rho_E is purified in its eigenbasis with the
// first nonzero component of every eigenvector made real and positive.
KrausSet weak_complementary(const Matrix4& u, const QubitOperator& rho_env);

// Standard complementary channel of a Kraus set with at most two operators.
KrausSet complementary_of_kraus(const KrausSet& k);

// max over |i><j| of |(Kx ∘ Kn)(E_ij) - Kt(E_ij)|
double verify_degradation(const KrausSet& kn, const KrausSet& kt, const KrausSet& kx);

double von_neumann_entropy(const Eigen::MatrixXcd& rho);

// J(N, rho) = S(N(rho)) - S((N ⊗ I)(|psi><psi|)) in bits, psi purifying rho.
// Operators may map the qubit to any output dimension.
double coherent_information(const std::vector<Eigen::MatrixXcd>& kraus, const QubitOperator& rho);
double coherent_information(const KrausSet& k, const QubitOperator& rho);

bool is_density_matrix(const QubitOperator& rho, double tol = kPsdTolerance);

}  // namespace qcf
