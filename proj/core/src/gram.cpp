#include "singcbf/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace singcbf {

GramMatrix gram_matrix(const Eigen::MatrixXd& phi) {
  if (!phi.allFinite())
    throw ContractViolation("gram_matrix: phi has non-finite entries");
  GramMatrix m;
  m.source_rows = static_cast<int>(phi.rows());
  m.source_cols = static_cast<int>(phi.cols());
  if (phi.rows() < phi.cols())
    m.values = phi * phi.transpose();
  else
    m.values = phi.transpose() * phi;
  return m;
}

EigenSpectrum symmetric_eigen(const Eigen::MatrixXd& S) {
  if (S.rows() != S.cols())
    throw ContractViolation("symmetric_eigen: matrix is not square");
  const int k = static_cast<int>(S.rows());
  const double scale = std::max(1.0, S.cwiseAbs().maxCoeff());
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ContractViolation("symmetric_eigen: matrix is not symmetric");

  Eigen::MatrixXd A = 0.5 * (S + S.transpose());
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(k, k);

  const double frob = std::max(1.0, A.norm());
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < k; ++p)
      for (int q = p + 1; q < k; ++q) off += A(p, q) * A(p, q);
    if (std::sqrt(2.0 * off) <= 1e-13 * frob) break;

    for (int p = 0; p < k; ++p) {
      for (int q = p + 1; q < k; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = A(p, p);
        const double aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int r = 0; r < k; ++r) {
          if (r != p && r != q) {
            const double arp = A(r, p);
            const double arq = A(r, q);
            A(r, p) = A(p, r) = arp - s * (arq + tau * arp);
            A(r, q) = A(q, r) = arq + s * (arp - tau * arq);
          }
          const double vrp = V(r, p);
          const double vrq = V(r, q);
          V(r, p) = vrp - s * (vrq + tau * vrp);
          V(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return A(a, a) < A(b, b); });

  EigenSpectrum out;
  out.eigenvalues.resize(k);
  out.eigenvectors.resize(k, k);
  for (int i = 0; i < k; ++i) {
    out.eigenvalues[i] = A(order[i], order[i]);
    Eigen::VectorXd v = V.col(order[i]);
    int imax = 0;
    for (int r = 1; r < k; ++r)
      if (std::abs(v[r]) > std::abs(v[imax])) imax = r;
    if (v[imax] < 0.0) v = -v;
    out.eigenvectors.col(i) = v;
  }
  return out;
}

double smallest_singular_value(const Eigen::MatrixXd& phi) {
  const EigenSpectrum es = eigen_spectrum(gram_matrix(phi));
  const double lmin = es.eigenvalues[0];
  return lmin <= 0.0 ? 0.0 : std::sqrt(lmin);
}

}  // namespace singcbf
