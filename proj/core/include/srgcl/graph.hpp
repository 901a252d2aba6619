#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srgcl {

/// Unordered node pair, stored as (min, max).
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Undirected attributed graph: n nodes, simple edge set, n x d feature rows,
/// optional class label.
struct Graph {
  int node_count = 0;
  std::vector<Edge> edges;  // sorted, unique, no self-loops, endpoints in [0, n)
  Eigen::MatrixXd features; // node_count rows
  std::optional<int> label;

  int feature_dim() const { return static_cast<int>(features.cols()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  /// Throws std::invalid_argument on any broken invariant.
  void validate() const;
};

/// Orders endpoints, sorts, deduplicates. Self-loops are rejected.
void normalize_edges(std::vector<Edge>& edges);

struct GraphDataset {
  std::string name;
  std::vector<Graph> graphs;
  int num_classes = 0;
  int d_feat = 0;

  int size() const { return static_cast<int>(graphs.size()); }
  void validate() const;
};

struct FoldSplit {
  int fold_count = 0;
  std::vector<int> assignments;  // per-graph fold index

  std::vector<std::vector<int>> fold_indices() const;
};

/// Labeled points in R^dim; doubles as the synthetic selector test bed and the
/// linear-probe input.
struct LabeledEmbeddingSet {
  Eigen::MatrixXd points;  // N x dim
  std::vector<int> labels;
  int num_classes = 0;

  int size() const { return static_cast<int>(labels.size()); }
};

/// One-hot of min(degree, cap) for datasets with d_feat = 0.
GraphDataset synthesize_degree_features(const GraphDataset& dataset, int max_degree_cap);

/// Label-stratified split: fold sizes within 1 of each other, per-fold class
/// counts within 1 of proportional. Deterministic per seed.
FoldSplit stratified_kfold(const GraphDataset& dataset, int folds, std::uint64_t seed);

/// per_class points per class from isotropic Gaussians with adjacent means one
/// unit apart and standard deviation `spread`.
LabeledEmbeddingSet synth_latent_clusters(int classes, int per_class, int dim, double spread,
                                          std::uint64_t seed);

}  // namespace srgcl
