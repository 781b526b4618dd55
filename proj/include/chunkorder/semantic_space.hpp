#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace chunkorder {

struct EmbeddingEntry {
  std::string id;
  std::vector<std::string> tags;
  Eigen::VectorXd vec;
};

/// Fixed-dimension vectors keyed by unique ids; entry order follows the
/// input file so downstream output is deterministic.
struct EmbeddingSet {
  Eigen::Index dim = 0;
  std::vector<EmbeddingEntry> entries;

  /// Sorted unique tags across all entries.
  std::vector<std::string> tag_universe() const;
};

/// Reads JSON-lines records {"id": ..., "tags": [...], "vec": [...]}.
/// Rejects mixed dimensions, non-finite components, duplicate ids and
/// schema violations.
EmbeddingSet load_embeddings(const std::filesystem::path& path);

/// Componentwise mean over the entries carrying `tag`; EmptySelection when
/// nothing matches.
Eigen::VectorXd centroid(const EmbeddingSet& es, std::string_view tag);

/// u.v / (|u||v|); ZeroNorm when either vector has zero norm.
double cosine_similarity(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

struct Projection {
  std::vector<std::string> ids;
  Eigen::MatrixXd coords;                  // entries x k, mean-centered scores
  std::vector<double> component_variance;  // eigenvalues of the sample covariance
  int rank = 0;                            // usable components
  bool rank_deficient = false;
};

/// Principal-component projection onto the top-k covariance eigenvectors.
/// Eigenpairs come from power iteration with deflation (tolerance 1e-10);
/// each eigenvector is oriented so its largest-magnitude component is
/// positive. With fewer than k positive eigenvalues the remaining
/// coordinates are zero and the result is flagged rank deficient.
Projection pca_project(const EmbeddingSet& es, int k = 2);

}  // namespace chunkorder
