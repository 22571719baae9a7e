#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "protosel/conformance.hpp"
#include "protosel/csv.hpp"
#include "protosel/discovery.hpp"
#include "protosel/errors.hpp"
#include "protosel/fixtures.hpp"
#include "protosel/pnml.hpp"
#include "protosel/selection.hpp"
#include "protosel/synthetic.hpp"
#include "protosel/xes.hpp"

namespace protosel::cli {
namespace fs = std::filesystem;

namespace {

/// A user-side mistake detected after argument parsing; maps to exit 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string input;
    std::string format;  // empty: infer from extension
    std::string case_column = CsvColumns{}.case_id;
    std::string activity_column = CsvColumns{}.activity;
    std::string timestamp_column;
    std::string out = ".";
    std::size_t k = 1;
    double beta = 1.0;
    std::uint64_t seed = 0;
    std::string miner = "inductive";
    std::size_t max_iterations = 20;
    std::size_t align_budget = ConformanceOptions{}.alignment_budget;
    std::size_t lang_budget = ConformanceOptions{}.state_budget;
    std::string model;
    std::size_t n = 1000;
    double noise = 0.0;

    ConformanceOptions conformance() const { return {align_budget, lang_budget}; }
};

EventLog load_log(const RunConfig& cfg) {
    auto format = cfg.format;
    if (format.empty()) format = fs::path(cfg.input).extension() == ".csv" ? "csv" : "xes";
    if (format == "csv") {
        CsvColumns cols{cfg.case_column, cfg.activity_column, std::nullopt};
        if (!cfg.timestamp_column.empty()) cols.timestamp = cfg.timestamp_column;
        try {
            return read_csv_file(cfg.input, cols);
        } catch (const ConfigError& e) {
            throw UsageError(e.what());
        }
    }
    return read_xes_file(cfg.input);
}

PetriNet load_model(const std::string& spec) {
    if (auto net = fixtures::by_name(spec)) return *net;
    if (!fs::exists(spec)) throw UsageError("model '" + spec + "' is neither a fixture name nor an existing file");
    return read_pnml_file(spec);
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << text;
    if (!f) throw Error("cannot write " + path.string());
}

void check_k(std::size_t k, const EventLog& log) {
    if (k > log.variant_count())
        throw UsageError("--k " + std::to_string(k) + " exceeds the number of variants (" +
                         std::to_string(log.variant_count()) + ")");
}

SelectionOptions selection_options(const RunConfig& cfg, const Miner& miner) {
    SelectionOptions opts;
    opts.k = cfg.k;
    opts.beta = cfg.beta;
    opts.max_iterations = cfg.max_iterations;
    opts.seed = cfg.seed;
    opts.miner = &miner;
    opts.conformance = cfg.conformance();
    return opts;
}

int cmd_discover(const RunConfig& cfg, std::ostream& out) {
    const auto log = load_log(cfg);
    if (log.empty()) throw UsageError("input log has no traces");
    check_k(cfg.k, log);
    const auto miner = make_miner(cfg.miner);
    const auto result = select_incremental(log, selection_options(cfg, *miner));

    const auto dir = prepare_out_dir(cfg.out);
    write_pnml_file(result.model, dir / "model.pnml");
    write_xes_file(Sublog::select(log, result.prototypes).log(), dir / "prototypes.xes");
    write_text(dir / "report.json", to_json(result.report()) + "\n");
    write_text(dir / "history.json", to_json(result.history) + "\n");
    out << "selected " << result.prototypes.size() << " prototypes in " << result.history.size()
        << " iterations (" << to_string(result.stop_reason) << "), F_beta " << result.report().f_beta << "\n";
    return kOk;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
    const auto log = load_log(cfg);
    if (log.empty()) throw UsageError("input log has no traces");
    const auto net = load_model(cfg.model);
    const auto report = evaluate(log, net, {}, cfg.beta, cfg.conformance());
    const auto dir = prepare_out_dir(cfg.out);
    write_text(dir / "report.json", to_json(report) + "\n");
    out << "fitness " << report.fitness << ", precision " << report.precision << "\n";
    return kOk;
}

struct CompareRow {
    std::string method;
    std::optional<QualityReport> report;
    double f1 = 0;
    std::size_t n_selected = 0;
    std::string status = "ok";
};

std::string csv_cell(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto log = load_log(cfg);
    if (log.empty()) throw UsageError("input log has no traces");
    check_k(cfg.k, log);
    const auto miner = make_miner(cfg.miner);
    const auto options = cfg.conformance();

    std::vector<CompareRow> rows;
    auto score = [&](CompareRow& row, const PetriNet& net, const std::vector<Trace>& selected) {
        row.report = evaluate(log, net, selected, cfg.beta, options);
        row.f1 = f_beta(row.report->precision, row.report->fitness, 1.0);
        row.n_selected = selected.size();
    };
    auto attempt = [&](const std::string& method, auto&& body) {
        CompareRow row;
        row.method = method;
        try {
            body(row);
        } catch (const std::exception& e) {
            row.report.reset();
            row.status = std::string("error: ") + e.what();
            err << method << ": " << e.what() << "\n";
        }
        rows.push_back(std::move(row));
    };

    std::size_t n = cfg.k;
    attempt("prototype_selection", [&](CompareRow& row) {
        const auto result = select_incremental(log, selection_options(cfg, *miner));
        n = result.prototypes.size();
        score(row, result.model, result.prototypes);
    });
    attempt("frequency", [&](CompareRow& row) {
        const auto selected = baseline_frequency(log, n);
        score(row, miner->discover(Sublog::select(log, selected).log()), selected);
    });
    attempt("random", [&](CompareRow& row) {
        const auto selected = baseline_random(log, n, cfg.seed);
        score(row, miner->discover(Sublog::select(log, selected).log()), selected);
    });
    attempt("nothing", [&](CompareRow& row) {
        std::vector<Trace> all;
        for (const auto& v : log.variants()) all.push_back(v.trace);
        score(row, miner->discover(log), all);
    });

    std::string csv = "method,F1,F_beta,fitness,precision,size,cardoso,n_selected,status\n";
    bool failed = false;
    for (const auto& r : rows) {
        csv += r.method;
        if (r.report) {
            csv += "," + fixed(r.f1) + "," + fixed(r.report->f_beta) + "," + fixed(r.report->fitness) + "," +
                   fixed(r.report->precision) + "," + std::to_string(r.report->size) + "," +
                   std::to_string(r.report->cardoso) + "," + std::to_string(r.n_selected);
        } else {
            csv += ",,,,,,,";
            failed = true;
        }
        csv += "," + csv_cell(r.status) + "\n";
    }
    const auto dir = prepare_out_dir(cfg.out);
    write_text(dir / "compare.csv", csv);
    out << csv;
    return failed ? kRuntimeError : kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    if (cfg.model.empty()) throw UsageError("gen needs --model");
    SyntheticSpec spec;
    spec.model = load_model(cfg.model);
    spec.n_traces = cfg.n;
    spec.noise_rate = cfg.noise;
    spec.seed = cfg.seed;
    const auto log = gen_synthetic(spec);
    if (cfg.out.empty() || cfg.out == "-") {
        write_xes(log, out);
    } else {
        const fs::path path(cfg.out);
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        write_xes_file(log, path);
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Prototype selection for process discovery"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--in", cfg.input, "Event log (XES or CSV)")->required()->check(CLI::ExistingFile);
        cmd->add_option("--format", cfg.format, "Input format; inferred from the extension when omitted")
            ->check(CLI::IsMember({"xes", "csv"}));
        cmd->add_option("--case-col", cfg.case_column, "CSV case id column");
        cmd->add_option("--activity-col", cfg.activity_column, "CSV activity column");
        cmd->add_option("--timestamp-col", cfg.timestamp_column, "CSV timestamp column (optional)");
    };
    auto add_budgets = [&](CLI::App* cmd) {
        cmd->add_option("--align-budget", cfg.align_budget, "Search nodes per alignment")->check(CLI::PositiveNumber);
        cmd->add_option("--lang-budget", cfg.lang_budget, "Distinct markings per net")->check(CLI::PositiveNumber);
    };
    auto add_beta = [&](CLI::App* cmd) {
        cmd->add_option("--beta", cfg.beta, "F-measure weight of fitness")->check(CLI::NonNegativeNumber);
    };
    auto add_selection = [&](CLI::App* cmd) {
        cmd->add_option("--k", cfg.k, "Clusters per iteration")->check(CLI::PositiveNumber);
        add_beta(cmd);
        cmd->add_option("--seed", cfg.seed, "Random seed");
        cmd->add_option("--miner", cfg.miner, "Discovery backend")->check(CLI::IsMember({"inductive"}));
        cmd->add_option("--max-iter", cfg.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
    };

    auto* discover = app.add_subcommand("discover", "Select prototypes and discover a model");
    add_input(discover);
    add_selection(discover);
    add_budgets(discover);
    discover->add_option("--out", cfg.out, "Output directory");

    auto* evaluate = app.add_subcommand("evaluate", "Score a PNML model against a log");
    add_input(evaluate);
    evaluate->add_option("--model", cfg.model, "PNML file or fixture name")->required();
    add_beta(evaluate);
    add_budgets(evaluate);
    evaluate->add_option("--out", cfg.out, "Output directory");

    auto* compare = app.add_subcommand("compare", "Compare selection against baselines");
    add_input(compare);
    add_selection(compare);
    add_budgets(compare);
    compare->add_option("--out", cfg.out, "Output directory");

    auto* gen = app.add_subcommand("gen", "Generate a synthetic log from a model");
    gen->add_option("--model", cfg.model, "Fixture name (" + [] {
        std::string names;
        for (const auto& n : fixtures::names()) names += (names.empty() ? "" : ", ") + n;
        return names;
    }() + ") or PNML file")->required();
    gen->add_option("--n", cfg.n, "Number of traces")->check(CLI::NonNegativeNumber);
    gen->add_option("--noise", cfg.noise, "Share of traces receiving edits")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", cfg.seed, "Random seed");
    gen->add_option("--out", cfg.out, "Output XES file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*discover) return cmd_discover(cfg, out);
        if (*evaluate) return cmd_evaluate(cfg, out);
        if (*compare) return cmd_compare(cfg, out, err);
        if (gen->parsed()) {
            if (gen->count("--out") == 0) cfg.out = "-";
            return cmd_gen(cfg, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kUsageError;
}

}  // namespace protosel::cli
