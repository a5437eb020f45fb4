#include "geofd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "geofd/stats.hpp"

namespace geofd {

namespace {

constexpr double panel = 150.0;
constexpr double pad = 12.0;
constexpr double margin = 30.0;

std::string gray(double q) {
    // q in [0,1] -> #dd..dd (low) to #20..20 (high).
    const int level = static_cast<int>(std::lround(0xdd - q * (0xdd - 0x20)));
    std::ostringstream s;
    s << '#' << std::hex;
    for (int i = 0; i < 3; ++i) {
        if (level < 16) s << '0';
        s << level;
    }
    return s.str();
}

} // namespace

void write_scatter_matrix_svg(const Eigen::MatrixXd& coords,
                              const std::optional<std::vector<double>>& scores,
                              const std::optional<LabelVector>& labels,
                              const std::string& path) {
    const auto n = coords.rows();
    const auto d = coords.cols();
    if (n < 1 || d < 1) throw ValidationError("empty embedding");
    if (scores && static_cast<Eigen::Index>(scores->size()) != n)
        throw ValidationError("score length does not match embedding rows");
    if (labels && static_cast<Eigen::Index>(labels->size()) != n)
        throw ValidationError("label length does not match embedding rows");

    // Score quantiles for shading.
    std::vector<double> shade(static_cast<std::size_t>(n), 0.5);
    if (scores) {
        const auto ranks = midranks(*scores);
        for (std::size_t i = 0; i < shade.size(); ++i)
            shade[i] = (ranks[i] - 1.0) / std::max(1.0, static_cast<double>(n) - 1.0);
    }

    // Per-dimension ranges.
    std::vector<double> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) {
        lo[static_cast<std::size_t>(k)] = coords.col(k).minCoeff();
        hi[static_cast<std::size_t>(k)] = coords.col(k).maxCoeff();
        if (lo[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) {
            lo[static_cast<std::size_t>(k)] -= 0.5;
            hi[static_cast<std::size_t>(k)] += 0.5;
        }
    }
    auto sx = [&](Eigen::Index k, double v) {
        const auto ku = static_cast<std::size_t>(k);
        return pad + (v - lo[ku]) / (hi[ku] - lo[ku]) * (panel - 2 * pad);
    };

    const double total = margin + static_cast<double>(d) * panel + margin;
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total
        << "\" height=\"" << total << "\" viewBox=\"0 0 " << total << ' ' << total
        << "\">\n";
    out << "<rect width=\"" << total << "\" height=\"" << total
        << "\" fill=\"white\"/>\n";

    for (Eigen::Index row = 0; row < d; ++row) {
        for (Eigen::Index col = 0; col < d; ++col) {
            const double ox = margin + static_cast<double>(col) * panel;
            const double oy = margin + static_cast<double>(row) * panel;
            out << "<g transform=\"translate(" << ox << ',' << oy << ")\">\n";
            out << "<rect x=\"0\" y=\"0\" width=\"" << panel << "\" height=\"" << panel
                << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
            if (row == col) {
                out << "<text x=\"" << panel / 2 << "\" y=\"" << panel / 2
                    << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
                       "font-family=\"sans-serif\" font-size=\"16\">dim "
                    << (row + 1) << "</text>\n";
            } else {
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double x = sx(col, coords(i, col));
                    // SVG y axis points down.
                    const double y = panel - sx(row, coords(i, row));
                    const auto iu = static_cast<std::size_t>(i);
                    const std::string fill = gray(shade[iu]);
                    const bool outlier = labels && (*labels)[iu] != 0;
                    if (outlier) {
                        out << "<polygon points=\"" << x << ',' << y - 4.0 << ' '
                            << x - 3.5 << ',' << y + 3.0 << ' ' << x + 3.5 << ','
                            << y + 3.0 << "\" fill=\"" << fill << "\"/>\n";
                    } else {
                        out << "<circle cx=\"" << x << "\" cy=\"" << y
                            << "\" r=\"2.5\" fill=\"" << fill << "\"/>\n";
                    }
                }
            }
            out << "</g>\n";
        }
    }
    out << "</svg>\n";
}

} // namespace geofd
