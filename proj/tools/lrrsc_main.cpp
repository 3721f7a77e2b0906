#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrrsc/affinity.hpp"
#include "lrrsc/datagen.hpp"
#include "lrrsc/errors.hpp"
#include "lrrsc/evaluation.hpp"
#include "lrrsc/matrix_io.hpp"
#include "lrrsc/solver.hpp"
#include "lrrsc/spectral.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_partial = 1;   // batch finished with failed sequences
constexpr int exit_io = 2;        // unreadable/unwritable/malformed files
constexpr int exit_numeric = 3;   // divergence or other numeric failure
constexpr int exit_usage = 4;     // bad arguments or dimensions

// Ordered key = value record, emitted as flat text and optionally as JSON.
class MetricsRecord {
public:
    void add(const std::string& key, nlohmann::ordered_json value) {
        items_.emplace_back(key, std::move(value));
    }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [key, value] : items_) {
            out << key << " = ";
            if (value.is_string()) {
                out << value.get<std::string>();
            } else if (value.is_number_float()) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.12g", value.get<double>());
                out << buf;
            } else if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i)
                    out << (i ? " " : "") << value[i].dump();
            } else {
                out << value.dump();
            }
            out << '\n';
        }
        return out.str();
    }

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        for (const auto& [key, value] : items_) j[key] = value;
        return j;
    }

private:
    std::vector<std::pair<std::string, nlohmann::ordered_json>> items_;
};

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw lrrsc::io_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw lrrsc::io_error(path + ": write failed");
}

// metrics.txt -> metrics.json (never the metrics path itself)
std::string json_sibling(const std::string& path) {
    std::filesystem::path p(path);
    p.replace_extension(".json");
    if (p == std::filesystem::path(path)) p += ".json";
    return p.string();
}

struct PipelineParams {
    int k = 0;
    double lambda = 0.0;
    int alpha = 2;
    std::string variant = "symmetric";
    std::uint64_t seed = 0;
    double mu0 = 1e-2;
    double mu_max = 1e10;
    double rho = 1.1;
    double epsilon = 1e-6;
    int max_iter = 1000;

    lrrsc::SolverConfig solver_config() const {
        lrrsc::SolverConfig cfg;
        cfg.lambda = lambda;
        cfg.mu0 = mu0;
        cfg.mu_max = mu_max;
        cfg.rho = rho;
        cfg.epsilon = epsilon;
        cfg.max_iter = max_iter;
        cfg.variant = variant == "plain" ? lrrsc::Variant::plain : lrrsc::Variant::symmetric;
        return cfg;
    }
};

struct PipelineOutput {
    std::vector<int> labels;
    lrrsc::SolverResult solver;
    lrrsc::AffinityGraph graph;
    Eigen::Index rank = 0;
    double seconds = 0.0;
};

// solve -> skinny SVD -> angular affinity -> normalized spectral clustering
PipelineOutput run_pipeline(const Eigen::MatrixXd& X, const PipelineParams& p) {
    if (p.k < 1 || static_cast<Eigen::Index>(p.k) > X.cols())
        throw lrrsc::argument_error("cluster: k must satisfy 1 <= k <= sample count");

    const auto t0 = std::chrono::steady_clock::now();
    PipelineOutput out;
    out.solver = lrrsc::solve(X, p.solver_config());
    const lrrsc::PrincipalFactors factors = lrrsc::skinny_svd(out.solver.Z);
    out.rank = factors.rank;
    out.graph = lrrsc::build_affinity(factors, p.alpha);

    lrrsc::SpectralConfig sc;
    sc.k = p.k;
    sc.seed = p.seed;
    out.labels = lrrsc::spectral_cluster(out.graph.W, sc);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

void add_pipeline_options(CLI::App* sub, PipelineParams& p) {
    sub->add_option("--k", p.k, "number of clusters")->required();
    sub->add_option("--lambda", p.lambda, "noise trade-off (data-dependent, no default)")->required();
    sub->add_option("--alpha", p.alpha, "affinity exponent (W_ij = cos^(2*alpha))")->capture_default_str();
    sub->add_option("--variant", p.variant, "solver variant")->capture_default_str()
        ->check(CLI::IsMember({"symmetric", "plain"}));
    sub->add_option("--seed", p.seed, "spectral clustering seed")->capture_default_str();
    sub->add_option("--mu0", p.mu0, "initial penalty")->capture_default_str();
    sub->add_option("--mu-max", p.mu_max, "penalty cap")->capture_default_str();
    sub->add_option("--rho", p.rho, "penalty growth factor")->capture_default_str();
    sub->add_option("--epsilon", p.epsilon, "stopping tolerance")->capture_default_str();
    sub->add_option("--max-iter", p.max_iter, "iteration cap")->capture_default_str();
}

void emit_record(const MetricsRecord& m, const std::string& out_path, bool json) {
    std::cout << m.text();
    if (!out_path.empty()) {
        write_text_file(out_path, m.text());
        if (json) write_text_file(json_sibling(out_path), m.json().dump(2) + "\n");
    }
}

struct ClusterCli {
    std::string input, truth, labels_out, metrics_out, dump_z, dump_w;
    PipelineParams params;
    bool json = false;
};

int do_cluster(const ClusterCli& c) {
    const Eigen::MatrixXd X = lrrsc::read_matrix(c.input);
    std::vector<int> truth;
    if (!c.truth.empty()) {
        truth = lrrsc::read_labels(c.truth);
        if (static_cast<Eigen::Index>(truth.size()) != X.cols())
            throw lrrsc::argument_error("cluster: truth labels do not match sample count");
    }

    const PipelineOutput run = run_pipeline(X, c.params);

    MetricsRecord m;
    m.add("command", "cluster");
    m.add("input", c.input);
    m.add("features", X.rows());
    m.add("n", X.cols());
    m.add("k", c.params.k);
    m.add("lambda", c.params.lambda);
    m.add("alpha", c.params.alpha);
    m.add("variant", c.params.variant);
    m.add("seed", c.params.seed);
    m.add("iterations", run.solver.iterations);
    m.add("converged", run.solver.converged);
    m.add("residual_constraint", run.solver.residual_constraint);
    m.add("residual_gap", run.solver.residual_gap);
    m.add("representation_rank", run.rank);
    m.add("elapsed_seconds", run.seconds);
    if (!truth.empty()) {
        const lrrsc::LabelMatching match = lrrsc::match_labels(run.labels, truth);
        m.add("error", 1.0 - static_cast<double>(match.agreement) / static_cast<double>(truth.size()));
        m.add("matching", match.map);
    }

    if (!c.labels_out.empty()) lrrsc::write_labels(c.labels_out, run.labels);
    if (!c.dump_z.empty()) lrrsc::write_matrix(c.dump_z, run.solver.Z);
    if (!c.dump_w.empty()) lrrsc::write_matrix(c.dump_w, run.graph.W);
    emit_record(m, c.metrics_out, c.json);
    return exit_ok;
}

struct SynthCli {
    lrrsc::SynthSpec spec;
    std::string out_x, out_truth, out_corrupted;
};

int do_synth(const SynthCli& s) {
    const lrrsc::SynthData data = lrrsc::generate(s.spec);
    lrrsc::write_matrix(s.out_x, data.X);
    lrrsc::write_labels(s.out_truth, data.labels);
    if (!s.out_corrupted.empty()) lrrsc::write_labels(s.out_corrupted, data.corrupted);

    MetricsRecord m;
    m.add("command", "synth");
    m.add("features", data.X.rows());
    m.add("n", data.X.cols());
    m.add("k", s.spec.k);
    m.add("corrupted_columns", static_cast<std::int64_t>(data.corrupted.size()));
    m.add("out_x", s.out_x);
    m.add("out_truth", s.out_truth);
    std::cout << m.text();
    return exit_ok;
}

struct EvalCli {
    std::string pred, truth, metrics_out;
    bool json = false;
};

int do_eval(const EvalCli& e) {
    const std::vector<int> pred = lrrsc::read_labels(e.pred);
    const std::vector<int> truth = lrrsc::read_labels(e.truth);
    const lrrsc::LabelMatching match = lrrsc::match_labels(pred, truth);

    MetricsRecord m;
    m.add("command", "eval");
    m.add("n", static_cast<std::int64_t>(pred.size()));
    m.add("agreement", match.agreement);
    m.add("error", 1.0 - static_cast<double>(match.agreement) / static_cast<double>(pred.size()));
    m.add("matching", match.map);
    emit_record(m, e.metrics_out, e.json);
    return exit_ok;
}

struct BatchCli {
    std::string dir, report;
    PipelineParams params;
    bool json = false;
};

int do_batch(const BatchCli& b) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(b.dir)) throw lrrsc::io_error(b.dir + ": not a directory");

    // sequences are <name>.x.txt with ground truth <name>.truth.txt
    static const std::string x_suffix = ".x.txt";
    std::vector<std::string> stems;
    for (const auto& entry : fs::directory_iterator(b.dir)) {
        const std::string name = entry.path().filename().string();
        if (name.size() > x_suffix.size() &&
            name.compare(name.size() - x_suffix.size(), x_suffix.size(), x_suffix) == 0)
            stems.push_back(name.substr(0, name.size() - x_suffix.size()));
    }
    std::sort(stems.begin(), stems.end());
    if (stems.empty()) throw lrrsc::io_error(b.dir + ": no <name>.x.txt sequences found");

    struct Record {
        std::string name, message;
        bool ok = false;
        double error = 0.0, seconds = 0.0;
        int iterations = 0;
        bool converged = false;
    };
    std::vector<Record> records;
    for (const std::string& stem : stems) {
        Record rec;
        rec.name = stem;
        try {
            const Eigen::MatrixXd X = lrrsc::read_matrix((fs::path(b.dir) / (stem + x_suffix)).string());
            const std::vector<int> truth =
                lrrsc::read_labels((fs::path(b.dir) / (stem + ".truth.txt")).string());
            if (static_cast<Eigen::Index>(truth.size()) != X.cols())
                throw lrrsc::argument_error(stem + ": truth labels do not match sample count");
            const PipelineOutput run = run_pipeline(X, b.params);
            rec.error = lrrsc::clustering_error(run.labels, truth);
            rec.seconds = run.seconds;
            rec.iterations = run.solver.iterations;
            rec.converged = run.solver.converged;
            rec.ok = true;
        } catch (const std::exception& ex) {
            rec.message = ex.what();
        }
        records.push_back(std::move(rec));
    }

    std::vector<double> errors;
    double total_seconds = 0.0;
    for (const Record& rec : records)
        if (rec.ok) {
            errors.push_back(rec.error);
            total_seconds += rec.seconds;
        }

    MetricsRecord m;
    m.add("command", "batch");
    m.add("sequences", static_cast<std::int64_t>(records.size()));
    m.add("completed", static_cast<std::int64_t>(errors.size()));
    m.add("failed", static_cast<std::int64_t>(records.size() - errors.size()));
    if (!errors.empty()) {
        const lrrsc::ErrorAggregate agg = lrrsc::aggregate_errors(errors);
        m.add("mean_error", agg.mean);
        m.add("median_error", agg.median);
        m.add("std_error", agg.stddev);
        m.add("max_error", agg.max);
        m.add("mean_seconds", total_seconds / static_cast<double>(errors.size()));
    }
    for (const Record& rec : records) {
        if (rec.ok) {
            m.add("seq." + rec.name + ".status", "ok");
            m.add("seq." + rec.name + ".error", rec.error);
            m.add("seq." + rec.name + ".iterations", rec.iterations);
            m.add("seq." + rec.name + ".converged", rec.converged);
            m.add("seq." + rec.name + ".seconds", rec.seconds);
        } else {
            m.add("seq." + rec.name + ".status", "failed");
            m.add("seq." + rec.name + ".message", rec.message);
        }
    }
    emit_record(m, b.report, b.json);
    return errors.size() == records.size() ? exit_ok : exit_partial;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subspace clustering via symmetric low-rank representation"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key = value defaults in a [subcommand] section (flags win)");
    app.allow_config_extras(CLI::config_extras_mode::error);

    ClusterCli c;
    CLI::App* cluster = app.add_subcommand("cluster", "cluster one sample matrix");
    cluster->fallthrough();
    cluster->add_option("--input", c.input, "sample matrix (rows = features, columns = samples)")
        ->required();
    add_pipeline_options(cluster, c.params);
    cluster->add_option("--truth", c.truth, "ground-truth labels for scoring");
    cluster->add_option("--labels-out", c.labels_out, "write predicted labels here");
    cluster->add_option("--metrics-out", c.metrics_out, "write the metrics record here");
    cluster->add_option("--dump-z", c.dump_z, "write the representation Z* here");
    cluster->add_option("--dump-w", c.dump_w, "write the affinity W here");
    cluster->add_flag("--json", c.json, "also write the metrics record as JSON")
        ->needs(cluster->get_option("--metrics-out"));

    SynthCli s;
    CLI::App* synth = app.add_subcommand("synth", "generate a union-of-subspaces instance");
    synth->fallthrough();
    synth->add_option("--k", s.spec.k, "number of subspaces")->required();
    synth->add_option("--dsub", s.spec.d_sub, "dimension of each subspace")->required();
    synth->add_option("--ambient", s.spec.ambient, "ambient dimension")->required();
    synth->add_option("--nper", s.spec.n_per, "samples per subspace")->required();
    synth->add_option("--noise-sigma", s.spec.noise_sigma, "entrywise noise scale")->capture_default_str();
    synth->add_option("--corrupt-frac", s.spec.corrupt_frac, "fraction of corrupted columns")->capture_default_str();
    synth->add_option("--seed", s.spec.seed, "generator seed")->required();
    synth->add_option("--out-x", s.out_x, "sample matrix output path")->required();
    synth->add_option("--out-truth", s.out_truth, "label output path")->required();
    synth->add_option("--out-corrupted", s.out_corrupted, "corrupted column indices output path");

    EvalCli e;
    CLI::App* eval = app.add_subcommand("eval", "score predicted labels against ground truth");
    eval->fallthrough();
    eval->add_option("--pred", e.pred, "predicted labels")->required();
    eval->add_option("--truth", e.truth, "ground-truth labels")->required();
    eval->add_option("--metrics-out", e.metrics_out, "write the metrics record here");
    eval->add_flag("--json", e.json, "also write the metrics record as JSON")
        ->needs(eval->get_option("--metrics-out"));

    BatchCli b;
    CLI::App* batch = app.add_subcommand("batch", "cluster every sequence in a directory");
    batch->fallthrough();
    batch->add_option("--dir", b.dir, "directory of <name>.x.txt / <name>.truth.txt pairs")
        ->required();
    add_pipeline_options(batch, b.params);
    batch->add_option("--report", b.report, "aggregate report output path")->required();
    batch->add_flag("--json", b.json, "also write the report as JSON");

    try {
        app.parse(argc, argv);
        if (cluster->parsed()) return do_cluster(c);
        if (synth->parsed()) return do_synth(s);
        if (eval->parsed()) return do_eval(e);
        if (batch->parsed()) return do_batch(b);
        return exit_usage;
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const lrrsc::io_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_io;
    } catch (const lrrsc::numeric_error& ex) { // includes divergence
        std::cerr << "error: " << ex.what() << '\n';
        return exit_numeric;
    } catch (const lrrsc::degenerate_representation_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_numeric;
    } catch (const lrrsc::argument_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_usage;
    }
}
