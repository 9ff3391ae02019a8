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

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidq/braid.hpp"
#include "braidq/classifier.hpp"
#include "braidq/dense.hpp"
#include "braidq/error.hpp"
#include "braidq/partition.hpp"
#include "braidq/stabilizer.hpp"

namespace braidq {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitDisagreement = 3,
    kExitResource = 4,
};

enum class OutputFormat { kText, kJson };

struct RunOptions {
    std::size_t qubits = 0;
    std::optional<std::string> word;
    std::optional<std::string> batch_path;
    bool verify = false;
    OutputFormat format = OutputFormat::kText;
    bool emit_stabilizers = false;
    std::size_t oracle_limit = dense::kDefaultStateLimit;
    std::optional<std::uint64_t> seed;  // reserved for randomized self-tests
};

struct OracleRecord {
    EntanglementPartition partition;
    bool agreement = false;
    double max_stabilizer_residual = 0;

    bool operator==(const OracleRecord &) const = default;
};

struct RunReport {
    std::string word_text;
    std::size_t n_qubits = 0;
    std::vector<std::size_t> permutation;  // 1-based image array
    std::vector<std::vector<std::size_t>> cycles;
    EntanglementPartition predicted_partition;
    std::vector<std::string> stabilizers;
    std::optional<OracleRecord> oracle;

    bool operator==(const RunReport &) const = default;
};

/// Runs the full pipeline on one word. Throws ParseError / RangeError on a bad word and
/// ResourceError when verification is requested above the oracle limit.
inline RunReport make_report(const std::string &word_text, std::size_t n_qubits, bool verify,
                             std::size_t oracle_limit = dense::kDefaultStateLimit) {
    const BraidWord word = parse_word(word_text, n_qubits);
    if (verify && n_qubits > oracle_limit) {
        throw ResourceError("--verify on " + std::to_string(n_qubits) + " qubits exceeds oracle limit " +
                            std::to_string(oracle_limit));
    }
    RunReport report;
    report.word_text = word_text;
    report.n_qubits = n_qubits;
    const Permutation perm = permutation_of(word);
    report.permutation = perm.image();
    const CycleDecomposition decomposition = cycles(perm);
    report.cycles = decomposition.cycles;
    report.predicted_partition = predict_partition(decomposition);
    const StabilizerSet final_set = conjugate_by_word(initial_stabilizers(n_qubits), word);
    for (const auto &g : final_set.generators()) {
        report.stabilizers.push_back(g.str());
    }
    if (verify) {
        const dense::StateVector state = dense::apply_word(word, n_qubits, oracle_limit);
        OracleRecord oracle;
        oracle.partition = dense::finest_product_partition(state, oracle_limit);
        oracle.agreement = oracle.partition == report.predicted_partition;
        oracle.max_stabilizer_residual = dense::stabilizer_residual(state, final_set);
        report.oracle = std::move(oracle);
    }
    return report;
}

inline nlohmann::json to_json(const RunReport &r) {
    nlohmann::json j;
    j["word"] = r.word_text;
    j["n"] = r.n_qubits;
    j["permutation"] = r.permutation;
    j["cycles"] = r.cycles;
    j["partition"] = r.predicted_partition.blocks();
    j["stabilizers"] = r.stabilizers;
    if (r.oracle) {
        j["oracle"] = {
            {"partition", r.oracle->partition.blocks()},
            {"agreement", r.oracle->agreement},
            {"max_stabilizer_residual", r.oracle->max_stabilizer_residual},
        };
    } else {
        j["oracle"] = nullptr;
    }
    return j;
}

inline RunReport report_from_json(const nlohmann::json &j) {
    RunReport r;
    r.word_text = j.at("word").get<std::string>();
    r.n_qubits = j.at("n").get<std::size_t>();
    r.permutation = j.at("permutation").get<std::vector<std::size_t>>();
    r.cycles = j.at("cycles").get<std::vector<std::vector<std::size_t>>>();
    r.predicted_partition =
        EntanglementPartition(r.n_qubits, j.at("partition").get<std::vector<std::vector<std::size_t>>>());
    r.stabilizers = j.at("stabilizers").get<std::vector<std::string>>();
    if (const auto &o = j.at("oracle"); !o.is_null()) {
        OracleRecord rec;
        rec.partition = EntanglementPartition(r.n_qubits, o.at("partition").get<std::vector<std::vector<std::size_t>>>());
        rec.agreement = o.at("agreement").get<bool>();
        rec.max_stabilizer_residual = o.at("max_stabilizer_residual").get<double>();
        r.oracle = std::move(rec);
    }
    return r;
}

namespace detail {

inline std::string join_image(const std::vector<std::size_t> &image) {
    std::string out = "[";
    for (std::size_t k = 0; k < image.size(); ++k) {
        out += (k ? "," : "") + std::to_string(image[k]);
    }
    return out + "]";
}

inline std::string format_residual(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

}  // namespace detail

inline void write_text(std::ostream &out, const RunReport &r, bool emit_stabilizers) {
    out << "word: " << r.word_text << "\n";
    out << "qubits: " << r.n_qubits << "\n";
    out << "permutation: " << detail::join_image(r.permutation) << "\n";
    out << "cycles: " << render(CycleDecomposition{r.n_qubits, r.cycles}) << "\n";
    out << "partition: " << render(r.predicted_partition) << "\n";
    if (emit_stabilizers) {
        out << "stabilizers:\n";
        for (const auto &s : r.stabilizers) {
            out << "  " << s << "\n";
        }
    }
    if (r.oracle) {
        out << "oracle partition: " << render(r.oracle->partition) << "\n";
        out << "oracle agreement: " << (r.oracle->agreement ? "true" : "false") << "\n";
        out << "oracle max stabilizer residual: " << detail::format_residual(r.oracle->max_stabilizer_residual) << "\n";
    }
}

/// Outcome of one batch line.
struct BatchItem {
    std::size_t line_number = 0;
    std::optional<RunReport> report;
    std::string diagnostic;  // set when report is empty
    int error_code = kExitOk;
};

namespace detail {

/// Batch exit status: disagreement > resource error > parse error > ok.
inline int worse(int current, int code) {
    auto rank = [](int c) {
        switch (c) {
            case kExitDisagreement: return 3;
            case kExitResource: return 2;
            case kExitParse: return 1;
            default: return 0;
        }
    };
    return rank(code) > rank(current) ? code : current;
}

inline BatchItem run_one(std::size_t line_number, const std::string &text, const RunOptions &opts) {
    BatchItem item;
    item.line_number = line_number;
    try {
        item.report = make_report(text, opts.qubits, opts.verify, opts.oracle_limit);
    } catch (const ResourceError &e) {
        item.diagnostic = e.what();
        item.error_code = kExitResource;
    } catch (const ParseError &e) {
        item.diagnostic = e.what();
        item.error_code = kExitParse;
    } catch (const RangeError &e) {
        item.diagnostic = e.what();
        item.error_code = kExitParse;
    }
    if (item.report && item.report->oracle && !item.report->oracle->agreement) {
        item.error_code = kExitDisagreement;
    }
    return item;
}

}  // namespace detail

/// Executes a parsed command line, writing the report(s) to `out` and diagnostics to `err`.
/// Returns the process exit code.
inline int run(const RunOptions &opts, std::ostream &out, std::ostream &err) {
    if (opts.qubits < 2) {
        err << "error: --qubits must be at least 2\n";
        return kExitUsage;
    }
    if (opts.word.has_value() == opts.batch_path.has_value()) {
        err << "error: exactly one of --word and --batch is required\n";
        return kExitUsage;
    }

    if (opts.word) {
        BatchItem item = detail::run_one(0, *opts.word, opts);
        if (!item.report) {
            err << "error: " << item.diagnostic << "\n";
            return item.error_code;
        }
        if (opts.format == OutputFormat::kJson) {
            out << to_json(*item.report).dump(2) << "\n";
        } else {
            write_text(out, *item.report, opts.emit_stabilizers);
        }
        return item.error_code;
    }

    std::ifstream file(*opts.batch_path);
    if (!file) {
        err << "error: cannot open batch file '" << *opts.batch_path << "'\n";
        return kExitUsage;
    }
    const std::vector<BatchLine> lines = read_batch(file);
    std::vector<BatchItem> items;
    items.reserve(lines.size());
    for (const auto &line : lines) {
        items.push_back(detail::run_one(line.line_number, line.text, opts));
    }

    int code = kExitOk;
    std::size_t words = 0, agreements = 0, disagreements = 0, errors = 0;
    nlohmann::json reports = nlohmann::json::array(), diagnostics = nlohmann::json::array();
    for (const auto &item : items) {
        code = detail::worse(code, item.error_code);
        if (!item.report) {
            ++errors;
            err << *opts.batch_path << ":" << item.line_number << ": error: " << item.diagnostic << "\n";
            diagnostics.push_back({{"line", item.line_number}, {"message", item.diagnostic}});
            continue;
        }
        ++words;
        if (item.report->oracle) {
            ++(item.report->oracle->agreement ? agreements : disagreements);
        }
        if (opts.format == OutputFormat::kJson) {
            reports.push_back(to_json(*item.report));
        } else {
            write_text(out, *item.report, opts.emit_stabilizers);
            out << "\n";
        }
    }
    if (opts.format == OutputFormat::kJson) {
        nlohmann::json doc;
        doc["reports"] = std::move(reports);
        doc["diagnostics"] = std::move(diagnostics);
        doc["summary"] = {{"words", words}, {"agreements", agreements}, {"disagreements", disagreements}, {"errors", errors}};
        out << doc.dump(2) << "\n";
    } else {
        out << "summary: " << words << " words, " << agreements << " agreements, " << disagreements
            << " disagreements, " << errors << " errors\n";
    }
    return code;
}

}  // namespace braidq
