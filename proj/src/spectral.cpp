#include "graphcrit/spectral.hpp"

#include <cmath>

#include "graphcrit/error.hpp"

namespace graphcrit {

namespace {

void check_square_symmetric(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + " must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError(std::string(what) + " must be symmetric");
}

void check_size(Eigen::Index n) {
  if (static_cast<std::size_t>(n) > kMaxDenseNodes)
    throw InputError("graph has " + std::to_string(n) + " nodes; dense spectral analysis is limited to " +
                     std::to_string(kMaxDenseNodes) + " (subsample the graph first)");
}

}  // namespace

Eigen::MatrixXd normalized_laplacian(const Eigen::MatrixXd& adjacency, const Eigen::VectorXd& degrees) {
  check_square_symmetric(adjacency, "adjacency");
  const Eigen::Index n = adjacency.rows();
  if (degrees.size() != n) throw InputError("degree vector size does not match adjacency");
  if (n > 0 && adjacency.minCoeff() < 0.0) throw InputError("adjacency has negative entries");
  if (n > 0 && degrees.minCoeff() < 0.0) throw InputError("negative degree");

  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sqrt(i) = degrees(i) > 0.0 ? 1.0 / std::sqrt(degrees(i)) : 0.0;

  Eigen::MatrixXd l = -(inv_sqrt.asDiagonal() * adjacency * inv_sqrt.asDiagonal());
  for (Eigen::Index i = 0; i < n; ++i) l(i, i) = degrees(i) > 0.0 ? 1.0 + l(i, i) : 0.0;
  // Restore exact symmetry lost to operation order.
  return 0.5 * (l + l.transpose());
}

Eigen::MatrixXd normalized_laplacian(const Eigen::MatrixXd& adjacency) {
  return normalized_laplacian(adjacency, adjacency.rowwise().sum());
}

SpectrumResult spectrum_entropy(Eigen::VectorXd eigenvalues) {
  SpectrumResult r;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    double& v = eigenvalues(i);
    if (!std::isfinite(v)) throw InvariantError("non-finite eigenvalue");
    if (v < -kEigenClamp)
      throw InvariantError("eigenvalue " + std::to_string(v) + " below clamp tolerance; matrix is not PSD");
    if (v < 0.0) v = 0.0;
  }
  const double total = eigenvalues.sum();
  r.eigenvalues = std::move(eigenvalues);
  r.weights = Eigen::VectorXd::Zero(r.eigenvalues.size());
  if (!(total > 0.0)) {
    r.degenerate = true;
    return r;
  }
  r.weights = r.eigenvalues / total;
  double h = 0.0;
  for (Eigen::Index i = 0; i < r.weights.size(); ++i) {
    const double w = r.weights(i);
    if (w > 0.0) h -= w * std::log(w);
  }
  r.entropy_nats = std::max(0.0, h);
  return r;
}

SpectrumResult von_neumann_entropy(const Eigen::MatrixXd& laplacian) {
  check_square_symmetric(laplacian, "Laplacian");
  check_size(laplacian.rows());
  if (laplacian.rows() == 0) return spectrum_entropy(Eigen::VectorXd());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InvariantError("symmetric eigensolver did not converge");
  return spectrum_entropy(es.eigenvalues());
}

SpectrumResult structural_entropy(const GraphSnapshot& g) {
  check_size(static_cast<Eigen::Index>(g.node_count()));
  const auto m = adjacency_and_degrees(g);
  return von_neumann_entropy(normalized_laplacian(m.adjacency, m.degrees));
}

Eigen::MatrixXd semantic_adjacency_from_cosines(const Eigen::MatrixXd& cosines) {
  Eigen::MatrixXd a = cosines.unaryExpr([](double c) { return scale_cosine(std::clamp(c, -1.0, 1.0)); });
  a.diagonal().setZero();
  return a;
}

Eigen::MatrixXd semantic_adjacency(const EmbeddingTable& embeddings,
                                   std::span<const std::string> node_order) {
  embeddings.require_all(node_order, "semantic adjacency");
  check_size(static_cast<Eigen::Index>(node_order.size()));
  return semantic_adjacency_from_cosines(cosine_matrix(embeddings.rows(node_order)));
}

SpectrumResult semantic_entropy(const Eigen::MatrixXd& a_sem) {
  check_square_symmetric(a_sem, "semantic adjacency");
  if (a_sem.size() > 0) {
    if (a_sem.minCoeff() < 0.0 || a_sem.maxCoeff() > 1.0)
      throw InputError("semantic adjacency entries must lie in [0, 1]");
    if (a_sem.diagonal().cwiseAbs().maxCoeff() != 0.0)
      throw InputError("semantic adjacency must have a zero diagonal");
  }
  return von_neumann_entropy(normalized_laplacian(a_sem));
}

std::optional<double> discovery_parameter(double s_struct, double s_sem) {
  if (!(s_struct >= 0.0) || !(s_sem >= 0.0)) throw InputError("entropies must be non-negative");
  const double total = s_struct + s_sem;
  if (!(total > 0.0)) return std::nullopt;
  return std::clamp((s_struct - s_sem) / total, -1.0, 1.0);
}

}  // namespace graphcrit
