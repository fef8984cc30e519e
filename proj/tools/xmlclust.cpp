#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "xmlclust/experiment.hpp"
#include "xmlclust/synthetic.hpp"

namespace {

int do_run(const std::string& config_path, const CLI::Option* experiment_opt,
           const std::string& experiment_id, const std::vector<int>& k_values,
           const CLI::Option* seed_opt, std::uint64_t seed,
           const std::string& out_dir) {
    auto config = xmlclust::parse_config_file(config_path);
    if (experiment_opt->count() > 0) {
        if (xmlclust::is_preset(experiment_id)) {
            xmlclust::apply_preset(config, experiment_id);
        } else if (experiment_id == "custom") {
            config.experiment = "custom";
        } else {
            throw xmlclust::ConfigError("unknown experiment '" + experiment_id +
                                        "'");
        }
    }
    if (!k_values.empty()) config.k_values = k_values;
    if (seed_opt->count() > 0) config.seed = seed;
    if (!out_dir.empty()) config.out_dir = out_dir;
    xmlclust::validate_config(config);

    const auto report = xmlclust::run_experiment(config);
    for (const auto& issue : report.issues) {
        std::cerr << "warning: " << issue.file << ":" << issue.line << ": "
                  << issue.reason << '\n';
    }
    xmlclust::write_report_files(report, config);
    xmlclust::write_report(std::cout, report);
    return 0;
}

int do_gen(const xmlclust::SyntheticSpec& spec, const std::string& out_dir) {
    const auto corpus = xmlclust::generate_synthetic(spec, out_dir);
    std::cout << "generated " << corpus.labels.size() << " documents in "
              << out_dir << '\n';
    return 0;
}

int do_eval(const std::string& assignments_path, const std::string& reference_path) {
    xmlclust::Partition partition;
    xmlclust::ReferenceLabeling reference;
    try {
        partition = xmlclust::load_assignments_csv(assignments_path);
        reference = xmlclust::load_reference_csv(reference_path);
    } catch (const std::exception& e) {
        throw xmlclust::ConfigError(e.what());
    }
    const auto result = xmlclust::evaluate(partition, reference);
    xmlclust::write_metric_report(std::cout, {result});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"XML document clustering toolkit"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run an experiment from a config file");
    std::string config_path, experiment_id, run_out;
    std::vector<int> k_values;
    std::uint64_t seed = 0;
    run->add_option("--config", config_path, "experiment config file")->required();
    auto* experiment_opt = run->add_option(
        "--experiment", experiment_id, "preset override (K-F, K-all, T-P, T-PF, T-C)");
    run->add_option("--k", k_values, "cluster counts, e.g. 2,4")->delimiter(',');
    auto* seed_opt = run->add_option("--seed", seed, "RNG seed override");
    run->add_option("--out", run_out, "output directory override");

    auto* gen = app.add_subcommand("gen-synth", "Generate a planted synthetic corpus");
    xmlclust::SyntheticSpec spec;
    std::string gen_out;
    gen->add_option("--k", spec.k, "number of planted clusters");
    gen->add_option("--docs-per-cluster", spec.docs_per_cluster, "documents per cluster");
    gen->add_option("--vocab", spec.topic_vocab_size, "words per topic vocabulary");
    gen->add_option("--overlap", spec.overlap, "shared-word fraction in [0,1)");
    gen->add_option("--seed", spec.seed, "RNG seed");
    gen->add_option("--out", gen_out, "output directory")->required();

    auto* eval = app.add_subcommand("eval", "Score assignments against a reference labeling");
    std::string assignments_path, reference_path;
    eval->add_option("--assignments", assignments_path, "doc_id,cluster_id CSV")->required();
    eval->add_option("--reference", reference_path, "doc_id,class_id CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            return do_run(config_path, experiment_opt, experiment_id, k_values,
                          seed_opt, seed, run_out);
        }
        if (gen->parsed()) return do_gen(spec, gen_out);
        if (eval->parsed()) return do_eval(assignments_path, reference_path);
    } catch (const xmlclust::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
