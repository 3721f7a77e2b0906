#include "lrrsc/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lrrsc {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool parse_double(const std::string& tok, double& value) {
    // strtod instead of stod: subnormals must parse, not throw out_of_range
    const char* begin = tok.c_str();
    char* end = nullptr;
    value = std::strtod(begin, &end);
    return end == begin + tok.size() && !tok.empty();
}

bool is_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#' || c == '%';
    }
    return true; // blank
}

Eigen::MatrixXd read_matrix_market(std::istream& in, const std::string& path) {
    std::string banner;
    std::getline(in, banner);
    std::istringstream hdr(banner);
    std::string tag, object, format, field, symmetry;
    hdr >> tag >> object >> format >> field >> symmetry;
    if (object != "matrix" || (format != "array" && format != "coordinate") ||
        (field != "real" && field != "integer") ||
        (symmetry != "general" && symmetry != "symmetric"))
        throw io_error(path + ": unsupported Matrix Market header: " + banner);

    std::string line;
    auto next_data_line = [&]() {
        while (std::getline(in, line))
            if (!is_comment(line)) return true;
        return false;
    };
    if (!next_data_line()) throw io_error(path + ": missing Matrix Market size line");

    std::istringstream sizes(line);
    Eigen::Index rows = 0, cols = 0;
    long long nnz = 0;
    if (!(sizes >> rows >> cols) || rows < 1 || cols < 1)
        throw io_error(path + ": bad Matrix Market size line");
    if (format == "coordinate" && !(sizes >> nnz))
        throw io_error(path + ": coordinate format needs an entry count");
    if (symmetry == "symmetric" && rows != cols)
        throw io_error(path + ": symmetric Matrix Market file must be square");

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
    if (format == "array") {
        // column-major; symmetric files store the lower triangle only
        for (Eigen::Index j = 0; j < cols; ++j) {
            for (Eigen::Index i = (symmetry == "symmetric" ? j : 0); i < rows; ++i) {
                if (!next_data_line()) throw io_error(path + ": truncated Matrix Market data");
                const auto fields = split_fields(line);
                double v = 0.0;
                if (fields.size() != 1 || !parse_double(fields[0], v))
                    throw io_error(path + ": bad Matrix Market value: " + line);
                m(i, j) = v;
                if (symmetry == "symmetric") m(j, i) = v;
            }
        }
    } else {
        for (long long e = 0; e < nnz; ++e) {
            if (!next_data_line()) throw io_error(path + ": truncated Matrix Market data");
            std::istringstream entry(line);
            Eigen::Index i = 0, j = 0;
            double v = 0.0;
            if (!(entry >> i >> j >> v) || i < 1 || j < 1 || i > rows || j > cols)
                throw io_error(path + ": bad Matrix Market entry: " + line);
            m(i - 1, j - 1) = v;
            if (symmetry == "symmetric") m(j - 1, i - 1) = v;
        }
    }
    return m;
}

} // namespace

Eigen::MatrixXd read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path + ": cannot open for reading");

    if (in.peek() == '%') {
        std::string first;
        std::getline(in, first);
        if (first.rfind("%%MatrixMarket", 0) == 0) {
            in.seekg(0);
            return read_matrix_market(in, path);
        }
        in.seekg(0); // plain '%' comment: fall through to text parsing
    }

    std::vector<std::vector<double>> rows;
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        if (is_comment(line)) continue;
        const auto fields = split_fields(line);
        std::vector<double> row(fields.size());
        bool ok = true;
        for (std::size_t t = 0; t < fields.size(); ++t)
            if (!parse_double(fields[t], row[t])) {
                ok = false;
                break;
            }
        if (!ok) {
            if (first_content) { // optional one-line header
                first_content = false;
                continue;
            }
            throw io_error(path + ": non-numeric matrix line: " + line);
        }
        first_content = false;
        if (!rows.empty() && row.size() != rows.front().size())
            throw io_error(path + ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) throw io_error(path + ": no matrix data");

    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

void write_matrix(const std::string& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw io_error(path + ": cannot open for writing");
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            if (j > 0) out << ' ';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw io_error(path + ": write failed");
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error(path + ": cannot open for reading");
    std::vector<int> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (is_comment(line)) continue;
        const auto fields = split_fields(line);
        double v = 0.0;
        if (fields.size() != 1 || !parse_double(fields[0], v) || v != static_cast<int>(v))
            throw io_error(path + ": bad label line: " + line);
        labels.push_back(static_cast<int>(v));
    }
    if (labels.empty()) throw io_error(path + ": no labels");
    return labels;
}

void write_labels(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path);
    if (!out) throw io_error(path + ": cannot open for writing");
    for (int v : labels) out << v << '\n';
    if (!out) throw io_error(path + ": write failed");
}

} // namespace lrrsc
