// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "braidq/runner.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Braid a product state, track its stabilizers, and classify which qubits end up entangled."};
    braidq::RunOptions opts;
    std::string word, batch;
    std::uint64_t seed = 0;

    app.add_option("--qubits", opts.qubits, "Number of qubits / strands (N >= 2)")->required();
    auto *word_opt = app.add_option("--word", word, "Braid word, e.g. \"s1 s2^-1 s1\"");
    auto *batch_opt = app.add_option("--batch", batch, "File with one braid word per line");
    word_opt->excludes(batch_opt);
    app.add_flag("--verify", opts.verify, "Cross-check against the dense state-vector oracle");
    app.add_option("--format", opts.format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, braidq::OutputFormat>{{"text", braidq::OutputFormat::kText},
                                                        {"json", braidq::OutputFormat::kJson}},
            CLI::ignore_case));
    app.add_flag("--emit-stabilizers", opts.emit_stabilizers, "Print the final stabilizer generators");
    app.add_option("--oracle-limit", opts.oracle_limit, "Largest N accepted by --verify")->capture_default_str();
    auto *seed_opt = app.add_option("--seed", seed, "Seed for randomized self-tests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : braidq::kExitUsage;
    }
    if (*word_opt) {
        opts.word = word;
    }
    if (*batch_opt) {
        opts.batch_path = batch;
    }
    if (*seed_opt) {
        opts.seed = seed;
    }
    return braidq::run(opts, std::cout, std::cerr);
}
