#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "geofd/pairwise.hpp"
#include "geofd/types.hpp"

namespace geofd {

// Shortest decimal representation that round-trips the exact double.
std::string fmt_double(double v);

// Strict parse of a full cell; throws ValidationError on trailing junk.
double parse_double(const std::string& cell, const std::string& context);

// Dataset CSV: one observation per row, optional header row of grid values,
// optional trailing `label` column with 0/1 flags.
FunctionalDataset load_csv(const std::string& path, bool has_header,
                           const std::optional<std::string>& label_column);
void write_csv(const FunctionalDataset& ds, const std::string& path);

// Square distance-matrix CSV, no header.
void write_matrix_csv(const Eigen::MatrixXd& mat, const std::string& path);
Eigen::MatrixXd load_matrix_csv(const std::string& path);
DistanceMatrix load_distance_csv(const std::string& path, const std::string& tag);

// Embedding CSV: header y1..yd plus optional `label` column.
void write_embedding_csv(const Eigen::MatrixXd& coords,
                         const std::optional<LabelVector>& labels,
                         const std::string& path);
struct EmbeddingCsv {
    Eigen::MatrixXd coords;
    std::optional<LabelVector> labels;
};
EmbeddingCsv load_embedding_csv(const std::string& path);

// Score CSV: header index,score plus optional `label` column.
void write_scores_csv(const std::vector<double>& scores,
                      const std::optional<LabelVector>& labels,
                      const std::string& path);
std::vector<double> load_scores_csv(const std::string& path);

} // namespace geofd
