#include "geofd/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace geofd {

std::string fmt_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(const std::string& cell, const std::string& context) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ValidationError("non-numeric cell '" + cell + "' " + context);
    return v;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_line(line));
    }
    if (rows.empty()) throw ValidationError("empty file: " + path);
    return rows;
}

bool is_numeric(const std::string& cell) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    return ec == std::errc{} && ptr == cell.data() + cell.size();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    return out;
}

} // namespace

FunctionalDataset load_csv(const std::string& path, bool has_header,
                           const std::optional<std::string>& label_column) {
    auto rows = read_rows(path);

    std::vector<std::string> header;
    std::size_t first_data = 0;
    if (has_header) {
        header = rows[0];
        first_data = 1;
        if (rows.size() == 1) throw ValidationError("no data rows in " + path);
    } else if (label_column) {
        throw ValidationError("label column '" + *label_column +
                              "' named but file has no header");
    }

    const std::size_t n_cols = rows[first_data].size();
    for (std::size_t r = first_data; r < rows.size(); ++r)
        if (rows[r].size() != n_cols)
            throw ValidationError("ragged rows in " + path + ": row " +
                                  std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " cells, expected " +
                                  std::to_string(n_cols));
    if (has_header && header.size() != n_cols)
        throw ValidationError("header/data column count mismatch in " + path);

    std::optional<std::size_t> label_idx;
    if (label_column) {
        for (std::size_t c = 0; c < header.size(); ++c)
            if (header[c] == *label_column) label_idx = c;
        if (!label_idx)
            throw ValidationError("label column '" + *label_column +
                                  "' not found in " + path);
    }

    std::vector<std::size_t> value_cols;
    for (std::size_t c = 0; c < n_cols; ++c)
        if (!label_idx || c != *label_idx) value_cols.push_back(c);
    const auto m = static_cast<int>(value_cols.size());
    const auto n = static_cast<int>(rows.size() - first_data);
    if (m < 2) throw ValidationError("need at least 2 value columns in " + path);

    // Numeric header cells become the grid, otherwise indices 0..m-1.
    std::vector<double> grid_pts(static_cast<std::size_t>(m));
    bool header_numeric = has_header;
    if (has_header)
        for (std::size_t k = 0; k < value_cols.size(); ++k)
            header_numeric = header_numeric && is_numeric(header[value_cols[k]]);
    for (std::size_t k = 0; k < value_cols.size(); ++k)
        grid_pts[k] = header_numeric
                          ? parse_double(header[value_cols[k]], "in header of " + path)
                          : static_cast<double>(k);

    CurveMatrix values(n, m);
    std::optional<LabelVector> labels;
    if (label_idx) labels = LabelVector(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[first_data + static_cast<std::size_t>(i)];
        const std::string ctx = "at row " + std::to_string(i + 1) + " of " + path;
        for (int k = 0; k < m; ++k) {
            const double v = parse_double(row[value_cols[static_cast<std::size_t>(k)]], ctx);
            if (!std::isfinite(v)) throw ValidationError("non-finite value " + ctx);
            values(i, k) = v;
        }
        if (label_idx) {
            const std::string& cell = row[*label_idx];
            if (cell == "0")
                (*labels)[static_cast<std::size_t>(i)] = 0;
            else if (cell == "1")
                (*labels)[static_cast<std::size_t>(i)] = 1;
            else
                throw ValidationError("label cell must be 0 or 1, got '" + cell +
                                      "' " + ctx);
        }
    }

    return FunctionalDataset(Grid(std::move(grid_pts)), std::move(values),
                             std::move(labels));
}

void write_csv(const FunctionalDataset& ds, const std::string& path) {
    auto out = open_out(path);
    for (int k = 0; k < ds.m(); ++k) {
        if (k) out << ',';
        out << fmt_double(ds.grid[k]);
    }
    if (ds.labels) out << ",label";
    out << '\n';
    for (int i = 0; i < ds.n(); ++i) {
        for (int k = 0; k < ds.m(); ++k) {
            if (k) out << ',';
            out << fmt_double(ds.values(i, k));
        }
        if (ds.labels)
            out << ',' << static_cast<int>((*ds.labels)[static_cast<std::size_t>(i)]);
        out << '\n';
    }
}

void write_matrix_csv(const Eigen::MatrixXd& mat, const std::string& path) {
    auto out = open_out(path);
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            if (j) out << ',';
            out << fmt_double(mat(i, j));
        }
        out << '\n';
    }
}

Eigen::MatrixXd load_matrix_csv(const std::string& path) {
    auto rows = read_rows(path);
    const std::size_t n_cols = rows[0].size();
    Eigen::MatrixXd mat(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(n_cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n_cols)
            throw ValidationError("ragged rows in " + path);
        for (std::size_t j = 0; j < n_cols; ++j)
            mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                parse_double(rows[i][j], "at row " + std::to_string(i + 1) + " of " + path);
    }
    return mat;
}

DistanceMatrix load_distance_csv(const std::string& path, const std::string& tag) {
    DistanceMatrix dm{load_matrix_csv(path), tag};
    validate(dm);
    return dm;
}

void write_embedding_csv(const Eigen::MatrixXd& coords,
                         const std::optional<LabelVector>& labels,
                         const std::string& path) {
    if (labels && static_cast<Eigen::Index>(labels->size()) != coords.rows())
        throw ValidationError("label vector length does not match embedding rows");
    auto out = open_out(path);
    for (Eigen::Index k = 0; k < coords.cols(); ++k) {
        if (k) out << ',';
        out << 'y' << (k + 1);
    }
    if (labels) out << ",label";
    out << '\n';
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index k = 0; k < coords.cols(); ++k) {
            if (k) out << ',';
            out << fmt_double(coords(i, k));
        }
        if (labels)
            out << ',' << static_cast<int>((*labels)[static_cast<std::size_t>(i)]);
        out << '\n';
    }
}

EmbeddingCsv load_embedding_csv(const std::string& path) {
    auto rows = read_rows(path);
    if (rows.size() < 2) throw ValidationError("no data rows in " + path);
    const auto& header = rows[0];
    const bool has_label = !header.empty() && header.back() == "label";
    const std::size_t d = header.size() - (has_label ? 1 : 0);
    if (d < 1) throw ValidationError("no coordinate columns in " + path);

    const auto n = static_cast<Eigen::Index>(rows.size() - 1);
    EmbeddingCsv res;
    res.coords.resize(n, static_cast<Eigen::Index>(d));
    if (has_label) res.labels = LabelVector(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i) + 1];
        if (row.size() != header.size())
            throw ValidationError("ragged rows in " + path);
        const std::string ctx = "at row " + std::to_string(i + 2) + " of " + path;
        for (std::size_t k = 0; k < d; ++k) {
            const double v = parse_double(row[k], ctx);
            if (!std::isfinite(v)) throw ValidationError("non-finite value " + ctx);
            res.coords(i, static_cast<Eigen::Index>(k)) = v;
        }
        if (has_label) {
            if (row.back() != "0" && row.back() != "1")
                throw ValidationError("label cell must be 0 or 1, got '" +
                                      row.back() + "' " + ctx);
            (*res.labels)[static_cast<std::size_t>(i)] = row.back() == "1" ? 1 : 0;
        }
    }
    return res;
}

void write_scores_csv(const std::vector<double>& scores,
                      const std::optional<LabelVector>& labels,
                      const std::string& path) {
    if (labels && labels->size() != scores.size())
        throw ValidationError("label vector length does not match score count");
    auto out = open_out(path);
    out << "index,score";
    if (labels) out << ",label";
    out << '\n';
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out << i << ',' << fmt_double(scores[i]);
        if (labels) out << ',' << static_cast<int>((*labels)[i]);
        out << '\n';
    }
}

std::vector<double> load_scores_csv(const std::string& path) {
    auto rows = read_rows(path);
    if (rows.size() < 2 || rows[0].size() < 2 || rows[0][1] != "score")
        throw ValidationError("not a score CSV: " + path);
    std::vector<double> scores;
    scores.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i)
        scores.push_back(parse_double(rows[i][1],
                                      "at row " + std::to_string(i + 1) + " of " + path));
    return scores;
}

} // namespace geofd
