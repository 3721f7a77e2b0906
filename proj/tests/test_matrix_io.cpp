#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <Eigen/Dense>

#include "lrrsc/matrix_io.hpp"
#include "lrrsc/rng.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

// fresh scratch directory per test case, removed on destruction
struct ScratchDir {
    fs::path path;
    ScratchDir() {
        path = fs::temp_directory_path() /
               ("lrrsc_io_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~ScratchDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_SUITE("matrix_io") {

TEST_CASE("matrix text round-trips bitwise") {
    ScratchDir dir;
    lrrsc::Rng rng(19);
    Eigen::MatrixXd m = oracles::random_matrix(7, 5, rng);
    m(0, 0) = 1.0 / 3.0;
    m(1, 1) = 1e-300;
    m(2, 2) = -0.0;
    m(3, 3) = 1.7976931348623157e308;
    m(4, 4) = 5e-324; // smallest subnormal
    const std::string path = dir.file("m.txt");
    lrrsc::write_matrix(path, m);
    const Eigen::MatrixXd back = lrrsc::read_matrix(path);
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            CHECK(back(i, j) == m(i, j));
}

TEST_CASE("text parsing skips comments, headers, and accepts commas") {
    ScratchDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path,
               "# comment line\n"
               "col_a col_b col_c\n"
               "1, 2, 3\n"
               "% another comment\n"
               "4 5 6\n"
               "\n");
    const Eigen::MatrixXd m = lrrsc::read_matrix(path);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    CHECK(m(0, 0) == 1.0);
    CHECK(m(1, 2) == 6.0);
}

TEST_CASE("malformed text is rejected") {
    ScratchDir dir;
    const std::string ragged = dir.file("ragged.txt");
    write_file(ragged, "1 2 3\n4 5\n");
    CHECK_THROWS_AS(lrrsc::read_matrix(ragged), lrrsc::io_error);

    const std::string midway = dir.file("midway.txt");
    write_file(midway, "1 2\n3 oops\n");
    CHECK_THROWS_AS(lrrsc::read_matrix(midway), lrrsc::io_error);

    const std::string empty = dir.file("empty.txt");
    write_file(empty, "");
    CHECK_THROWS_AS(lrrsc::read_matrix(empty), lrrsc::io_error);

    CHECK_THROWS_AS(lrrsc::read_matrix(dir.file("missing.txt")), lrrsc::io_error);
}

TEST_CASE("matrix market array format, general and symmetric") {
    ScratchDir dir;
    const std::string general = dir.file("g.mtx");
    write_file(general,
               "%%MatrixMarket matrix array real general\n"
               "% comment\n"
               "2 3\n"
               "1\n4\n2\n5\n3\n6\n");
    const Eigen::MatrixXd g = lrrsc::read_matrix(general);
    REQUIRE(g.rows() == 2);
    REQUIRE(g.cols() == 3);
    CHECK(g(0, 0) == 1.0);
    CHECK(g(1, 0) == 4.0);
    CHECK(g(0, 2) == 3.0);

    const std::string symmetric = dir.file("s.mtx");
    write_file(symmetric,
               "%%MatrixMarket matrix array real symmetric\n"
               "3 3\n"
               "1\n2\n3\n4\n5\n6\n"); // lower triangle by column
    const Eigen::MatrixXd s = lrrsc::read_matrix(symmetric);
    CHECK(s(0, 0) == 1.0);
    CHECK(s(1, 0) == 2.0);
    CHECK(s(0, 1) == 2.0);
    CHECK(s(2, 1) == 5.0);
    CHECK(s(1, 2) == 5.0);
    CHECK(s(2, 2) == 6.0);
    CHECK((s - s.transpose()).norm() == 0.0);
}

TEST_CASE("matrix market coordinate format, general and symmetric") {
    ScratchDir dir;
    const std::string general = dir.file("g.mtx");
    write_file(general,
               "%%MatrixMarket matrix coordinate real general\n"
               "3 4 3\n"
               "1 1 2.5\n"
               "3 4 -1\n"
               "2 2 7\n");
    const Eigen::MatrixXd g = lrrsc::read_matrix(general);
    REQUIRE(g.rows() == 3);
    REQUIRE(g.cols() == 4);
    CHECK(g(0, 0) == 2.5);
    CHECK(g(2, 3) == -1.0);
    CHECK(g(1, 1) == 7.0);
    CHECK(g(0, 1) == 0.0);

    const std::string symmetric = dir.file("s.mtx");
    write_file(symmetric,
               "%%MatrixMarket matrix coordinate integer symmetric\n"
               "3 3 2\n"
               "2 1 4\n"
               "3 3 9\n");
    const Eigen::MatrixXd s = lrrsc::read_matrix(symmetric);
    CHECK(s(1, 0) == 4.0);
    CHECK(s(0, 1) == 4.0);
    CHECK(s(2, 2) == 9.0);
}

TEST_CASE("matrix market rejects unsupported or damaged files") {
    ScratchDir dir;
    const std::string pattern = dir.file("p.mtx");
    write_file(pattern,
               "%%MatrixMarket matrix coordinate pattern general\n"
               "2 2 1\n"
               "1 1\n");
    CHECK_THROWS_AS(lrrsc::read_matrix(pattern), lrrsc::io_error);

    const std::string truncated = dir.file("t.mtx");
    write_file(truncated,
               "%%MatrixMarket matrix array real general\n"
               "2 2\n"
               "1\n2\n3\n");
    CHECK_THROWS_AS(lrrsc::read_matrix(truncated), lrrsc::io_error);

    const std::string rect_sym = dir.file("r.mtx");
    write_file(rect_sym,
               "%%MatrixMarket matrix coordinate real symmetric\n"
               "2 3 1\n"
               "1 1 1\n");
    CHECK_THROWS_AS(lrrsc::read_matrix(rect_sym), lrrsc::io_error);

    const std::string bad_entry = dir.file("b.mtx");
    write_file(bad_entry,
               "%%MatrixMarket matrix coordinate real general\n"
               "2 2 1\n"
               "5 5 1\n"); // out of range
    CHECK_THROWS_AS(lrrsc::read_matrix(bad_entry), lrrsc::io_error);
}

TEST_CASE("labels round-trip and reject damage") {
    ScratchDir dir;
    const std::string path = dir.file("labels.txt");
    const std::vector<int> labels = {0, 2, 1, 1, 0};
    lrrsc::write_labels(path, labels);
    CHECK(lrrsc::read_labels(path) == labels);

    const std::string with_comments = dir.file("c.txt");
    write_file(with_comments, "# header\n0\n\n1\n");
    CHECK(lrrsc::read_labels(with_comments) == std::vector<int>{0, 1});

    const std::string fractional = dir.file("f.txt");
    write_file(fractional, "0\n1.5\n");
    CHECK_THROWS_AS(lrrsc::read_labels(fractional), lrrsc::io_error);

    const std::string wordy = dir.file("w.txt");
    write_file(wordy, "0\nabc\n");
    CHECK_THROWS_AS(lrrsc::read_labels(wordy), lrrsc::io_error);

    const std::string empty = dir.file("e.txt");
    write_file(empty, "");
    CHECK_THROWS_AS(lrrsc::read_labels(empty), lrrsc::io_error);

    CHECK_THROWS_AS(lrrsc::read_labels(dir.file("missing.txt")), lrrsc::io_error);
}

TEST_CASE("unwritable destinations raise io errors") {
    CHECK_THROWS_AS(lrrsc::write_matrix("/nonexistent_dir_zz/m.txt", Eigen::MatrixXd::Zero(2, 2)),
                    lrrsc::io_error);
    CHECK_THROWS_AS(lrrsc::write_labels("/nonexistent_dir_zz/l.txt", {0, 1}), lrrsc::io_error);
}

} // TEST_SUITE
