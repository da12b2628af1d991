#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qconc/errors.hpp"
#include "qconc/state.hpp"

namespace qconc::cli {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return std::move(buffer).str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

/// 12 significant digits, locale-independent.
inline std::string fmt12(double value) {
    if (std::isnan(value)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

/// 4x4 density-matrix text file: 16 row-major "re im" pairs, '#' comments.
inline DensityMatrix read_matrix4(const std::string& text) {
    std::vector<double> numbers;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '#') {
            const std::size_t eol = text.find('\n', pos);
            pos = eol == std::string::npos ? text.size() : eol + 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
               text[end] != '#') {
            ++end;
        }
        double value = 0.0;
        const auto result = std::from_chars(text.data() + pos, text.data() + end, value);
        if (result.ec != std::errc{} || result.ptr != text.data() + end) {
            throw SyntaxError("at byte " + std::to_string(pos) + ": expected a number", pos);
        }
        numbers.push_back(value);
        pos = end;
    }
    if (numbers.size() != 32) {
        throw SyntaxError("matrix file needs 16 're im' pairs, found " +
                              std::to_string(numbers.size()) + " numbers",
                          text.size());
    }
    Eigen::MatrixXcd m(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const std::size_t at = 2 * static_cast<std::size_t>(4 * r + c);
            m(r, c) = Complex{numbers[at], numbers[at + 1]};
        }
    }
    return DensityMatrix(2, std::move(m));
}

} // namespace qconc::cli
