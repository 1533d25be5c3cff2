// graphsee: spectral node embedding and node classification estimated from
// full graphs or from sample graphs (snowball sampling, targeted random
// walks), with CSV/JSON reports for external plotting.

#include "graphsee/eigen_system.hpp"
#include "graphsee/enf.hpp"
#include "graphsee/graph.hpp"
#include "graphsee/operators.hpp"
#include "graphsee/rng.hpp"
#include "graphsee/sampling.hpp"
#include "graphsee/see.hpp"
#include "graphsee/snle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace graphsee;
using nlohmann::json;

namespace {

std::string fmt9(double v) {
    if (std::isnan(v)) return "";  // missing value
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json summary;
};

void write_report(const Report& rep, const std::string& out_path,
                  const std::string& summary_path) {
    std::ostream* out = &std::cout;
    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw DataError("cannot write to '" + out_path + "'");
        out = &out_file;
    }
    for (std::size_t c = 0; c < rep.columns.size(); ++c)
        *out << (c ? "," : "") << rep.columns[c];
    *out << "\n";
    for (const auto& row : rep.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) *out << (c ? "," : "") << row[c];
        *out << "\n";
    }
    out->flush();

    const std::string summary_text = rep.summary.dump();
    if (summary_path.empty()) {
        std::cerr << summary_text << "\n";
    } else {
        std::ofstream sf(summary_path);
        if (!sf) throw DataError("cannot write to '" + summary_path + "'");
        sf << summary_text << "\n";
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GRAPHSEE_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw DataError("GRAPHSEE_SEED must be a nonnegative integer");
        return v;
    }
    return 20250801ull;
}

void warn_if_disconnected(const Graph& g) {
    if (!g.connected())
        std::cerr << "warning: graph is disconnected; spectral quantities refer to the "
                     "tolerance-based decomposition\n";
}

Vector signed_fiedler(const EigenSystem& es, const Vector* labels) {
    Vector z0 = es.eigenvectors.col(es.fiedler_index);
    if (labels) {
        const Vector yc = labels->array() - labels->mean();
        const Vector zc = z0.array() - z0.mean();
        if (yc.norm() > 0.0 && zc.dot(yc) < 0.0) z0 = -z0;
    }
    return z0;
}

// ---------------------------------------------------------------- graph-info

int cmd_graph_info(const std::string& edges_path, const std::string& labels_path,
                   const std::string& out_path, const std::string& summary_path) {
    const Graph g = load_edge_list_file(edges_path);
    warn_if_disconnected(g);
    std::optional<Vector> labels;
    if (!labels_path.empty()) labels = load_labels_file(labels_path, g.node_count());

    const EigenSystem es = eigensystem(normalized_laplacian(g));
    const Vector z0 = signed_fiedler(es, labels ? &*labels : nullptr);

    Report rep;
    rep.columns = {"node_id", "degree", "z0"};
    for (int i = 0; i < g.node_count(); ++i)
        rep.rows.push_back({std::to_string(i + 1), std::to_string(g.degree(i)), fmt9(z0[i])});

    const Vector d = g.degree_vector();
    rep.summary = {{"command", "graph-info"},
                   {"n_nodes", g.node_count()},
                   {"n_edges", g.edge_count()},
                   {"degree_min", static_cast<int>(d.minCoeff())},
                   {"degree_max", static_cast<int>(d.maxCoeff())},
                   {"degree_mean", d.mean()},
                   {"connected", g.connected()},
                   {"lambda0", es.eigenvalues[es.fiedler_index]}};
    write_report(rep, out_path, summary_path);
    return 0;
}

// ----------------------------------------------------------------------- enf

int cmd_enf(const std::string& edges_path, const std::string& labels_path,
            const std::string& link_name, bool normalize, int sample_size, long replicates,
            std::uint64_t seed, int threads, const std::string& out_path,
            const std::string& summary_path) {
    const Graph g = load_edge_list_file(edges_path);
    warn_if_disconnected(g);
    const Vector y = load_labels_file(labels_path, g.node_count());
    const Link link = link_name == "tanh" ? Link::Tanh : Link::Logistic;

    const double xi0 = fit_xi(g, y);
    const Vector x = embed(g, y, xi0, normalize);
    const Eigen::Vector2d psi = fit_psi(x, y, link);
    const Vector pred = classify(x, psi, link);

    int miss1 = 0, miss0 = 0;
    for (int i = 0; i < g.node_count(); ++i) {
        if (y[i] == 1.0 && pred[i] == 0.0) ++miss1;
        if (y[i] == 0.0 && pred[i] == 1.0) ++miss0;
    }

    Report rep;
    rep.columns = {"node_id", "y", "x", "p", "yhat"};
    std::optional<EnfSbsStudy> study;
    if (sample_size > 0) {
        study = enf_sbs_study(g, y, sample_size, replicates, seed, threads);
        rep.columns.push_back("xhat_mean");
        rep.columns.push_back("inclusion_count");
    }
    for (int i = 0; i < g.node_count(); ++i) {
        std::vector<std::string> row{std::to_string(i + 1), fmt9(y[i]), fmt9(x[i]),
                                     fmt9(link_probability(link, psi[0] + psi[1] * x[i])),
                                     fmt9(pred[i])};
        if (study) {
            row.push_back(fmt9(study->xhat_mean[i]));
            row.push_back(std::to_string(study->xi_hats.size()));
        }
        rep.rows.push_back(std::move(row));
    }

    rep.summary = {{"command", "enf"},
                   {"link", link_name},
                   {"normalized", normalize},
                   {"xi0", xi0},
                   {"psi0", {psi[0], psi[1]}},
                   {"misclassified_ones", miss1},
                   {"misclassified_zeros", miss0},
                   {"misclassified_total", miss1 + miss0}};
    if (study) {
        rep.summary["sample"] = {{"seed_size", sample_size},
                                 {"replicates", replicates},
                                 {"excluded", study->excluded},
                                 {"xi_hat_mean", study->xi_mean},
                                 {"xi_hat_se", study->xi_se}};
        rep.summary["rng_seed"] = seed;
    }
    write_report(rep, out_path, summary_path);
    return 0;
}

// ---------------------------------------------------------------------- snle

PVariant parse_variant(const std::string& name) {
    if (name == "plain") return PVariant::PlainM;
    if (name == "looped") return PVariant::LoopedM;
    throw DataError("unknown variant '" + name + "' (expected plain or looped)");
}

/// Unit-norm scaling aligned with the labels, and the between-class gap
/// min over 1-nodes minus max over 0-nodes.
double class_margin(Vector x, const Vector& y) {
    x /= x.norm();
    const Vector yc = y.array() - y.mean();
    const Vector xc = x.array() - x.mean();
    if (yc.norm() > 0.0 && xc.dot(yc) < 0.0) x = -x;
    double min1 = 1e300, max0 = -1e300;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (y[i] == 1.0) min1 = std::min(min1, x[i]);
        else max0 = std::max(max0, x[i]);
    }
    return min1 - max0;
}

int cmd_snle(const std::string& edges_path, const std::string& labels_path, double lambda,
             double gamma, const std::string& variant_name, int sample_size, long replicates,
             const std::string& sweep_spec, std::uint64_t seed, int threads,
             const std::string& out_path, const std::string& summary_path) {
    const Graph g = load_edge_list_file(edges_path);
    warn_if_disconnected(g);
    const Vector y = load_labels_file(labels_path, g.node_count());
    const PVariant variant = parse_variant(variant_name);

    Report rep;
    rep.summary = {{"command", "snle"}, {"gamma", gamma}, {"variant", variant_name}};

    if (!sweep_spec.empty()) {
        double lo = 0, hi = 0, step = 0;
        if (std::sscanf(sweep_spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
            throw DataError("--sweep expects lo:hi:step with a positive step");
        std::vector<double> lambdas;
        for (double l = lo; l <= hi + 1e-12; l += step) lambdas.push_back(l);
        const auto rows = rank_sweep(g, y, lambdas, gamma, variant);
        rep.columns = {"lambda", "rank", "correlation"};
        for (const auto& r : rows)
            rep.rows.push_back({fmt9(r.lambda), std::to_string(r.rank), fmt9(r.correlation)});
        rep.summary["sweep"] = {{"lo", lo}, {"hi", hi}, {"step", step}};
        write_report(rep, out_path, summary_path);
        return 0;
    }

    const SnleConfig cfg{lambda, gamma, variant};
    const Vector x0 = snle_full(g, y, cfg);
    const EigenSystem es = eigensystem(normalized_laplacian(g));
    const Vector z0 = signed_fiedler(es, &y);
    rep.summary["lambda"] = lambda;
    rep.summary["corr_x0_z0"] = pearson(x0, z0);

    if (sample_size > 0) {
        const ExpectedEmbedding ee =
            snle_expected(g, y, cfg, sample_size, replicates, seed, threads);
        rep.columns = {"node_id", "y", "x0", "xhat_mean", "inclusion_count"};
        int missing = 0;
        for (int i = 0; i < g.node_count(); ++i) {
            missing += ee.inclusion_count[i] == 0;
            rep.rows.push_back({std::to_string(i + 1), fmt9(y[i]), fmt9(x0[i]),
                                fmt9(ee.mean[i]), std::to_string(ee.inclusion_count[i])});
        }
        Vector ehat = ee.mean;
        const bool complete = missing == 0;
        rep.summary["sample"] = {{"seed_size", sample_size},
                                 {"replicates", replicates},
                                 {"missing_nodes", missing},
                                 {"margin_x0", class_margin(x0, y)}};
        if (complete) rep.summary["sample"]["margin_xhat_mean"] = class_margin(ehat, y);
        rep.summary["rng_seed"] = seed;
    } else {
        rep.columns = {"node_id", "y", "x0", "z0"};
        for (int i = 0; i < g.node_count(); ++i)
            rep.rows.push_back({std::to_string(i + 1), fmt9(y[i]), fmt9(x0[i]), fmt9(z0[i])});
    }
    write_report(rep, out_path, summary_path);
    return 0;
}

// ----------------------------------------------------------------------- trw

int cmd_trw(const std::string& edges_path, const std::string& labels_path, double r,
            int states, long burnin, int spacing, int walks, std::uint64_t seed,
            const std::string& out_path, const std::string& summary_path) {
    const Graph g = load_edge_list_file(edges_path);
    const Vector y = load_labels_file(labels_path, g.node_count());
    if (walks < 1) throw DataError("need at least one walk");

    WalkConfig cfg;
    cfg.r = r;
    cfg.burn_in = burnin;
    cfg.spacing = spacing;
    cfg.n_states = states;

    Report rep;
    rep.columns = {"walk", "xi_hat", "states"};
    std::vector<Vector> estimates;
    Vector pooled_counts = Vector::Zero(g.node_count());
    long pooled_states = 0;
    for (int l = 0; l < walks; ++l) {
        cfg.rng_seed = seed + static_cast<std::uint64_t>(l);
        const WalkTrace trace = run_trw(g, cfg, 0);
        const WeightedNodeSample ws = trw_weights(trace, g);
        const double xi_hat = solve_xi_see(g, y, ws);
        Vector e(1);
        e << xi_hat;
        estimates.push_back(e);
        for (int i = 0; i < g.node_count(); ++i) pooled_counts[i] += trace.visit_counts[i];
        pooled_states += trace.states.size();
        rep.rows.push_back({std::to_string(l), fmt9(xi_hat), std::to_string(trace.states.size())});
    }

    const ReplicateSet rs = combine_replicates(estimates);
    const Vector d = g.degree_vector();
    const Vector stationary = (d.array() + r) / (d.sum() + r * g.node_count());
    double chi2 = 0.0, max_rel = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        const double expect = pooled_states * stationary[i];
        chi2 += (pooled_counts[i] - expect) * (pooled_counts[i] - expect) / expect;
        max_rel = std::max(max_rel, std::abs(pooled_counts[i] / pooled_states - stationary[i]) /
                                        stationary[i]);
    }

    rep.summary = {{"command", "trw"},
                   {"r", r},
                   {"walks", walks},
                   {"states_per_walk", states},
                   {"spacing", spacing},
                   {"burn_in", burnin >= 0 ? burnin : 50L * g.node_count()},
                   {"xi_combined", rs.combined[0]},
                   {"stationary_chi2", chi2},
                   {"stationary_max_rel_err", max_rel},
                   {"rng_seed", seed}};
    if (walks >= 2) {
        rep.summary["xi_variance"] = rs.covariance()(0, 0);
        rep.summary["xi_se"] = std::sqrt(rs.covariance()(0, 0));
    }
    write_report(rep, out_path, summary_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-sampling node embedding experiments"};
    app.require_subcommand(1);

    std::string edges, labels, out_path, summary_path;
    std::string link_name = "logistic", variant_name = "plain", sweep_spec;
    bool normalize = false;
    int sample_size = 0, threads = 1, spacing = 5, states = 100, walks = 1;
    long replicates = 1000, burnin = -1;
    double lambda = 0.1, gamma = 0.0, r = 2.0;
    std::uint64_t seed = 0;
    bool seed_given = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
        cmd->add_option("--summary", summary_path, "summary JSON path (default: stderr)");
    };
    const auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG base seed (default: GRAPHSEE_SEED or built-in)")
            ->each([&](const std::string&) { seed_given = true; });
        cmd->add_option("--threads", threads, "replicate-level worker threads")
            ->check(CLI::PositiveNumber);
    };

    auto* info = app.add_subcommand("graph-info", "graph summary and fiedler column");
    info->add_option("edgelist", edges)->required();
    info->add_option("--labels", labels, "optional labels CSV for sign alignment");
    add_common(info);

    auto* enf = app.add_subcommand("enf", "eigen-neighbour-function embedding and classifier");
    enf->add_option("edgelist", edges)->required();
    enf->add_option("labels", labels)->required();
    enf->add_option("--link", link_name)->check(CLI::IsMember({"logistic", "tanh"}));
    enf->add_flag("--normalize", normalize, "unit-norm embedding before the classifier fit");
    enf->add_option("--sample", sample_size, "run replicated 1-wave snowball estimation");
    enf->add_option("--replicates", replicates);
    add_seed(enf);
    add_common(enf);

    auto* snle = app.add_subcommand("snle", "supervised normalized-Laplacian embedding");
    snle->add_option("edgelist", edges)->required();
    snle->add_option("labels", labels)->required();
    snle->add_option("--lambda", lambda);
    snle->add_option("--gamma", gamma);
    snle->add_option("--variant", variant_name)->check(CLI::IsMember({"plain", "looped"}));
    snle->add_option("--sample", sample_size, "seed size for replicated sample embedding");
    snle->add_option("--replicates", replicates);
    snle->add_option("--sweep", sweep_spec, "lambda sweep lo:hi:step emitting rank rows");
    add_seed(snle);
    add_common(snle);

    auto* trw = app.add_subcommand("trw", "targeted-random-walk estimation");
    trw->add_option("edgelist", edges)->required();
    trw->add_option("labels", labels)->required();
    trw->add_option("--r", r, "random-jump tuning constant");
    trw->add_option("--states", states, "extracted states per walk");
    trw->add_option("--burnin", burnin, "burn-in steps (-1: 50N default)");
    trw->add_option("--spacing", spacing, "steps between extracted states");
    trw->add_option("--walks", walks, "independent walks");
    add_seed(trw);
    add_common(trw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!seed_given) seed = default_seed();
        if (info->parsed()) return cmd_graph_info(edges, labels, out_path, summary_path);
        if (enf->parsed())
            return cmd_enf(edges, labels, link_name, normalize, sample_size, replicates, seed,
                           threads, out_path, summary_path);
        if (snle->parsed()) {
            if (!sweep_spec.empty() && sample_size > 0) {
                std::cerr << "error: --sweep and --sample are mutually exclusive\n";
                return 2;
            }
            return cmd_snle(edges, labels, lambda, gamma, variant_name, sample_size, replicates,
                            sweep_spec, seed, threads, out_path, summary_path);
        }
        if (trw->parsed())
            return cmd_trw(edges, labels, r, states, burnin, spacing, walks, seed, out_path,
                           summary_path);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
