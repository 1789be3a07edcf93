// Copyright 2026 The Lingua Atlas Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lingua_atlas/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "lingua_atlas/error.hpp"
#include "lingua_atlas/log.hpp"
#include "lingua_atlas/pipeline.hpp"

namespace lingua_atlas {

namespace {

// Exit code for failures outside the documented stages.
constexpr int kInternalError = 6;

struct RunFlags {
    std::string config_path;
    std::optional<std::string> embedding;
    std::optional<std::size_t> n_neighbors;
    std::optional<double> min_dist;
    std::optional<std::size_t> epochs;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output_dir;
    bool line_per_sentence = false;
};

int execute_run(const RunFlags& flags) {
    RunConfig config = load_config(flags.config_path);
    if (flags.embedding) config.embedding = parse_embedding(*flags.embedding);
    if (flags.n_neighbors) config.umap.n_neighbors = *flags.n_neighbors;
    if (flags.min_dist) config.umap.min_dist = *flags.min_dist;
    if (flags.epochs) config.umap.n_epochs = *flags.epochs;
    if (flags.seed) config.seed = *flags.seed;
    if (flags.output_dir) config.output_dir = *flags.output_dir;
    if (flags.line_per_sentence) config.line_per_sentence = true;

    const PipelineResult result = run_pipeline(config);
    const auto& report = result.analysis.report;
    std::cout << "wrote " << (config.output_dir / kCoordsFile).string() << " (" << result.analysis.projection.size()
              << " points)\n";
    std::cout << "silhouette " << report.silhouette << "\n";
    for (const auto& [label, p] : report.purity) std::cout << "purity " << label << " " << p << "\n";
    for (const auto& op : report.overlapping_pairs) {
        std::cout << "overlap " << op.first << " " << op.second << " " << op.pair_purity << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Project multilingual corpora into 2-D and measure how the languages cluster", "lingua-atlas"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    RunFlags flags;
    auto* run = app.add_subcommand("run", "Run the corpus -> embedding -> UMAP -> report pipeline");
    run->add_option("--config", flags.config_path, "Config file of key = value lines")->required();
    run->add_option("--embedding", flags.embedding, "bow, tfidf or word2vec");
    run->add_option("--n-neighbors", flags.n_neighbors, "UMAP neighbourhood size");
    run->add_option("--min-dist", flags.min_dist, "UMAP minimum embedded distance");
    run->add_option("--epochs", flags.epochs, "UMAP optimisation epochs");
    run->add_option("--seed", flags.seed, "Run seed");
    run->add_option("--output-dir", flags.output_dir, "Directory for the outputs");
    run->add_flag("--line-per-sentence", flags.line_per_sentence, "Treat every input line as one sentence");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(Stage::config);
    }

    try {
        return execute_run(flags);
    } catch (const Error& e) {
        log::error(std::string(stage_name(e.stage())) + " stage failed: " + e.what());
        return e.exit_code();
    } catch (const std::filesystem::filesystem_error& e) {
        log::error(std::string("io stage failed: ") + e.what());
        return static_cast<int>(Stage::io);
    } catch (const std::exception& e) {
        log::error(std::string("internal error: ") + e.what());
        return kInternalError;
    }
}

}  // namespace lingua_atlas
