#include "gabfield/serialize.hpp"

#include <algorithm>

namespace gabfield {

nlohmann::json matrix_to_json(const KMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json lvector_to_json(std::span<const LElement> v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const LElement& e : v) arr.push_back(e.to_string());
    return arr;
}

std::string to_text_grid(const std::vector<std::vector<std::string>>& cells) {
    if (cells.empty()) return "";
    std::size_t cols = cells[0].size();
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j < cols; ++j) width[j] = std::max(width[j], row[j].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < cols; ++j) {
            out += row[j];
            if (j + 1 < cols) out += std::string(width[j] - row[j].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string to_text_grid(const KMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cells[i][j] = m.at(i, j).to_string();
    return to_text_grid(cells);
}

std::string generator_grid(const GabCode& code) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(code.k());
    for (const auto& row : code.generator()) {
        std::vector<std::string> line;
        line.reserve(row.size());
        for (const LElement& e : row) line.push_back(e.to_string());
        cells.push_back(std::move(line));
    }
    return to_text_grid(cells);
}

}  // namespace gabfield
