#include "qcf/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace qcf {

namespace {

QubitOperator unit(int i, int j) {
  QubitOperator e = QubitOperator::Zero();
  e(i, j) = 1.0;
  return e;
}

const QubitOperator& pauli_at(int i) {
  static const QubitOperator p[3] = {pauli::x(), pauli::y(), pauli::z()};
  return p[i];
}

struct EnvDecomposition {
  std::vector<double> weights;
  std::vector<Eigen::Vector2cd> states;
};

EnvDecomposition purify_environment(const QubitOperator& rho_env) {
  if (!is_density_matrix(rho_env)) throw ValidationError("environment state is not a density matrix");
  Eigen::SelfAdjointEigenSolver<QubitOperator> es(0.5 * (rho_env + rho_env.adjoint()));
  EnvDecomposition d;
  for (int m = 1; m >= 0; --m) {
    const double w = es.eigenvalues()(m);
    if (w <= kEntropyZero) continue;
    Eigen::Vector2cd v = es.eigenvectors().col(m);
    const int lead = std::abs(v(0)) > kChoiRankThreshold ? 0 : 1;
    v *= std::conj(v(lead)) / std::abs(v(lead));
    d.weights.push_back(w);
    d.states.push_back(v);
  }
  return d;
}

void require_unitary(const Matrix4& u) {
  if (unitarity_defect(u) > kKrausCompletenessTolerance) throw ValidationError("dilation matrix is not unitary");
}

}  // namespace

double KrausSet::completeness_defect() const {
  QubitOperator sum = QubitOperator::Zero();
  for (const auto& m : operators) sum += m.adjoint() * m;
  return (sum - QubitOperator::Identity()).cwiseAbs().maxCoeff();
}

void KrausSet::validate(double tol) const {
  if (operators.empty()) throw ValidationError("empty Kraus set");
  const double defect = completeness_defect();
  if (defect > tol) {
    throw ValidationError("Kraus set is not trace preserving (completeness defect " + std::to_string(defect) +
                          ")");
  }
}

QubitOperator apply_channel(const KrausSet& k, const QubitOperator& rho) {
  QubitOperator out = QubitOperator::Zero();
  for (const auto& m : k.operators) out += m * rho * m.adjoint();
  return out;
}

ChoiMatrix choi(const KrausSet& k) {
  ChoiMatrix c{Matrix4::Zero()};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c.matrix.block<2, 2>(2 * i, 2 * j) = apply_channel(k, unit(i, j));
  }
  return c;
}

KrausSet kraus_from_choi(const ChoiMatrix& c) {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (c.matrix + c.matrix.adjoint()));
  KrausSet k;
  for (int n = 3; n >= 0; --n) {
    const double lambda = es.eigenvalues()(n);
    if (lambda <= kChoiRankThreshold) continue;
    const Eigen::Vector4cd v = es.eigenvectors().col(n) * std::sqrt(lambda);
    QubitOperator m;
    for (int i = 0; i < 2; ++i) {
      for (int o = 0; o < 2; ++o) m(o, i) = v(2 * i + o);
    }
    k.operators.push_back(m);
  }
  return k;
}

CpCheck cp_check(const ChoiMatrix& c, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (c.matrix + c.matrix.adjoint()), Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  return {lo >= -tol, lo};
}

AffineChannelData tT_from_kraus(const KrausSet& k) {
  AffineChannelData d;
  const QubitOperator image_of_one = apply_channel(k, QubitOperator::Identity());
  for (int i = 0; i < 3; ++i) {
    d.t(i) = 0.5 * (pauli_at(i) * image_of_one).trace().real();
    for (int j = 0; j < 3; ++j) d.T(i, j) = 0.5 * (pauli_at(i) * apply_channel(k, pauli_at(j))).trace().real();
  }
  return d;
}

ChoiMatrix choi_from_tT(const AffineChannelData& d) {
  auto image = [&](const Eigen::Vector4cd& coeffs) {
    // coeffs over (1, sx, sy, sz)
    QubitOperator out = coeffs(0) * QubitOperator::Identity();
    for (int i = 0; i < 3; ++i) {
      out += coeffs(0) * d.t(i) * pauli_at(i);
      for (int j = 0; j < 3; ++j) out += coeffs(j + 1) * d.T(i, j) * pauli_at(i);
    }
    return out;
  };
  const Complex I(0.0, 1.0);
  ChoiMatrix c{Matrix4::Zero()};
  c.matrix.block<2, 2>(0, 0) = image(Eigen::Vector4cd(0.5, 0.0, 0.0, 0.5));
  c.matrix.block<2, 2>(2, 2) = image(Eigen::Vector4cd(0.5, 0.0, 0.0, -0.5));
  c.matrix.block<2, 2>(0, 2) = image(Eigen::Vector4cd(0.0, 0.5, 0.5 * I, 0.0));
  c.matrix.block<2, 2>(2, 0) = image(Eigen::Vector4cd(0.0, 0.5, -0.5 * I, 0.0));
  return c;
}

KrausSet kraus_from_tT(const AffineChannelData& d) {
  const auto c = choi_from_tT(d);
  const auto cp = cp_check(c);
  if (!cp.psd) {
    throw ValidationError("affine channel is not completely positive (min Choi eigenvalue " +
                              std::to_string(cp.min_eigenvalue) + ")",
                          cp.min_eigenvalue);
  }
  return kraus_from_choi(c);
}

KrausSet compose_kraus(const KrausSet& k2, const KrausSet& k1) {
  KrausSet out;
  for (const auto& b : k2.operators) {
    for (const auto& a : k1.operators) out.operators.push_back(b * a);
  }
  return out;
}

double channel_distance(const KrausSet& a, const KrausSet& b) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst, (apply_channel(a, unit(i, j)) - apply_channel(b, unit(i, j))).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double unitarity_defect(const Matrix4& u) {
  return (u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

KrausSet kraus_from_dilation(const Matrix4& u, const QubitOperator& rho_env) {
  require_unitary(u);
  const auto env = purify_environment(rho_env);
  KrausSet k;
  for (std::size_t m = 0; m < env.weights.size(); ++m) {
    for (int ke = 0; ke < 2; ++ke) {
      QubitOperator op = QubitOperator::Zero();
      for (int jo = 0; jo < 2; ++jo) {
        for (int ji = 0; ji < 2; ++ji) {
          for (int l = 0; l < 2; ++l) op(jo, ji) += u(jo + 2 * ke, ji + 2 * l) * env.states[m](l);
        }
      }
      k.operators.push_back(std::sqrt(env.weights[m]) * op);
    }
  }
  return k;
}

KrausSet weak_complementary(const Matrix4& u, const QubitOperator& rho_env) {
  require_unitary(u);
  const auto env = purify_environment(rho_env);
  KrausSet k;
  for (std::size_t m = 0; m < env.weights.size(); ++m) {
    for (int js = 0; js < 2; ++js) {
      QubitOperator op = QubitOperator::Zero();
      for (int ko = 0; ko < 2; ++ko) {
        for (int ji = 0; ji < 2; ++ji) {
          for (int l = 0; l < 2; ++l) op(ko, ji) += u(js + 2 * ko, ji + 2 * l) * env.states[m](l);
        }
      }
      k.operators.push_back(std::sqrt(env.weights[m]) * op);
    }
  }
  return k;
}

KrausSet complementary_of_kraus(const KrausSet& k) {
  const KrausSet minimal = kraus_from_choi(choi(k));
  if (minimal.operators.size() > 2) {
    throw ValidationError("channel has Choi rank " + std::to_string(minimal.operators.size()) +
                          "; its complementary does not act on a qubit environment");
  }
  KrausSet out;
  for (int j = 0; j < 2; ++j) {
    QubitOperator r = QubitOperator::Zero();
    for (std::size_t kk = 0; kk < minimal.operators.size(); ++kk) {
      for (int i = 0; i < 2; ++i) r(static_cast<int>(kk), i) = minimal.operators[kk](j, i);
    }
    out.operators.push_back(r);
  }
  return out;
}

double verify_degradation(const KrausSet& kn, const KrausSet& kt, const KrausSet& kx) {
  return channel_distance(compose_kraus(kx, kn), kt);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > kEntropyZero) s -= l * std::log2(l);
  }
  return s;
}

double coherent_information(const std::vector<Eigen::MatrixXcd>& kraus, const QubitOperator& rho) {
  if (kraus.empty()) throw ValidationError("empty Kraus set");
  const Eigen::Index dout = kraus.front().rows();
  Eigen::SelfAdjointEigenSolver<QubitOperator> es(0.5 * (rho + rho.adjoint()));
  // |psi> = sum_i sqrt(l_i) |e_i>_S |i>_R, flat index s*2 + r
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  for (int i = 0; i < 2; ++i) {
    const double l = std::max(0.0, es.eigenvalues()(i));
    for (int s = 0; s < 2; ++s) psi(s * 2 + i) = std::sqrt(l) * es.eigenvectors()(s, i);
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dout, dout);
  Eigen::MatrixXcd joint = Eigen::MatrixXcd::Zero(2 * dout, 2 * dout);
  for (const auto& k : kraus) {
    out += k * rho * k.adjoint();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * dout);
    for (Eigen::Index o = 0; o < dout; ++o) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) v(o * 2 + r) += k(o, s) * psi(s * 2 + r);
      }
    }
    joint += v * v.adjoint();
  }
  return von_neumann_entropy(out) - von_neumann_entropy(joint);
}

double coherent_information(const KrausSet& k, const QubitOperator& rho) {
  std::vector<Eigen::MatrixXcd> ops(k.operators.begin(), k.operators.end());
  return coherent_information(ops, rho);
}

bool is_density_matrix(const QubitOperator& rho, double tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<QubitOperator> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol;
}

}  // namespace qcf
