#pragma once

#include <optional>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "graphcrit/embeddings.hpp"
#include "graphcrit/graph.hpp"

namespace graphcrit {

/// Largest matrix handed to the dense eigensolver.
inline constexpr std::size_t kMaxDenseNodes = 5000;
/// Eigenvalues in [-kEigenClamp, 0) are rounding noise and clamp to 0.
inline constexpr double kEigenClamp = 1e-10;

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // ascending, clamped
  Eigen::VectorXd weights;      // eigenvalues / sum; all zero when degenerate
  double entropy_nats = 0.0;
  /// Spectrum sums to zero (edgeless graph); entropy is defined as 0.
  bool degenerate = false;
};

/// L = I - D^-1/2 A D^-1/2 with the rows and columns of zero-degree nodes left at 0.
Eigen::MatrixXd normalized_laplacian(const Eigen::MatrixXd& adjacency, const Eigen::VectorXd& degrees);
/// Same, with degrees taken as row sums (weighted degrees).
Eigen::MatrixXd normalized_laplacian(const Eigen::MatrixXd& adjacency);

/// Shannon entropy (nats) of an eigenvalue list rescaled to sum to one.
SpectrumResult spectrum_entropy(Eigen::VectorXd eigenvalues);

/// Von Neumann entropy of a symmetric PSD matrix via a dense eigensolve.
SpectrumResult von_neumann_entropy(const Eigen::MatrixXd& laplacian);

/// Structural entropy of a snapshot.
SpectrumResult structural_entropy(const GraphSnapshot& g);

/// Maps a cosine in [-1, 1] to a similarity weight in [0, 1].
inline double scale_cosine(double c) { return 0.5 * (c + 1.0); }

/// Dense similarity graph: (cos + 1) / 2 off the diagonal, zero diagonal, no thresholding.
Eigen::MatrixXd semantic_adjacency(const EmbeddingTable& embeddings,
                                   std::span<const std::string> node_order);
/// Same, from a precomputed cosine matrix.
Eigen::MatrixXd semantic_adjacency_from_cosines(const Eigen::MatrixXd& cosines);

/// Von Neumann entropy of the weighted normalized Laplacian of `a_sem`.
SpectrumResult semantic_entropy(const Eigen::MatrixXd& a_sem);

/// (s_struct - s_sem) / (s_struct + s_sem); nullopt when both are zero.
std::optional<double> discovery_parameter(double s_struct, double s_sem);

struct EntropySample {
  Iteration iteration = 0;
  double s_struct = 0.0;
  double s_sem = 0.0;
  std::optional<double> d_param;
};

}  // namespace graphcrit
