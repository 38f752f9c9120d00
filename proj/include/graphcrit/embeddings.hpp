#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace graphcrit {

inline constexpr int kDefaultEmbeddingDim = 384;

/// Label -> semantic vector map with a fixed dimension and no zero vectors.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dim);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool contains(std::string_view label) const;
  const Eigen::VectorXd& at(std::string_view label) const;
  /// Insertion order.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws InputError on duplicate label, wrong dimension, zero or non-finite vector.
  void insert(std::string label, Eigen::VectorXd vec);

  /// Labels from `wanted` with no vector, in the given order.
  std::vector<std::string> missing(std::span<const std::string> wanted) const;
  /// Throws InputError naming (up to 10) missing labels.
  void require_all(std::span<const std::string> wanted, std::string_view context = {}) const;

  /// Row i holds the vector of labels[i].
  Eigen::MatrixXd rows(std::span<const std::string> labels) const;

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Eigen::VectorXd> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Format: "#dim <d>" header, then "label<TAB>v1,v2,...,vd" per line.
EmbeddingTable parse_embeddings(std::istream& in, const std::string& source_name);
EmbeddingTable load_embeddings(const std::filesystem::path& path);
void write_embeddings(std::ostream& out, const EmbeddingTable& table);
void write_embeddings(const std::filesystem::path& path, const EmbeddingTable& table);

/// Deterministic unit vector for a label: standard-normal coordinates from a
/// counter-based stream keyed by (label, seed), then normalized.
Eigen::VectorXd fallback_embed(std::string_view label, int dim, std::uint64_t seed);
EmbeddingTable fallback_table(std::span<const std::string> labels, int dim, std::uint64_t seed);

/// Cosine similarity clamped to [-1, 1]. Throws InputError on a zero vector.
double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// Pairwise cosine matrix of the rows of `vectors` (rows need not be unit length).
Eigen::MatrixXd cosine_matrix(const Eigen::MatrixXd& vectors);

struct PcaProjection {
  std::vector<std::string> labels;
  Eigen::MatrixX2d coordinates;            // row i -> labels[i]
  std::array<double, 2> explained_variance{};  // fractions of total variance
  Eigen::MatrixX2d axes;                    // dim x 2 principal directions

  Eigen::Vector2d at(std::string_view label) const;
};

/// Projection of the centered vectors onto the top two covariance eigenvectors.
/// Each axis is oriented so its largest-magnitude loading is positive.
PcaProjection pca_2d(const EmbeddingTable& table, std::span<const std::string> labels);

}  // namespace graphcrit
