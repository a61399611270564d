// Command line front end: analyze, scan, gen, verify.

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <cubiccover/cubiccover.hpp>
#include <cubiccover/report.hpp>

namespace cc = cubiccover;

namespace {

constexpr int exit_clean = 0;
constexpr int exit_violations = 1;
constexpr int exit_usage = 2;

struct Flags {
    std::string file;
    std::string format = "auto";
    std::string ops;
    int mu_upto = 4;
    bool scc = false;
    bool fulkerson = false;
    long long budget_ms = 0;
    std::size_t pm_cap = 1'000'000;
    unsigned workers = 1;
    std::string out;
    bool timings = false;
    int scc_max_cycles = 4;
    int dim_cap = 16;
};

void add_analysis_flags(CLI::App* cmd, Flags& f)
{
    cmd->add_option("file", f.file, "graph or corpus file ('-' for stdin)")->required();
    cmd->add_option("--format", f.format, "input format")->check(CLI::IsMember({"auto", "mgf", "graph6"}));
    cmd->add_option("--ops", f.ops, "comma separated sections, or 'all'");
    cmd->add_option("--mu-upto", f.mu_upto, "largest k for mu_k")->check(CLI::Range(3, 6));
    cmd->add_flag("--scc", f.scc, "exact shortest cycle cover");
    cmd->add_flag("--fulkerson", f.fulkerson, "Fulkerson coloring search");
    cmd->add_option("--budget-ms", f.budget_ms, "per-graph wall-clock budget (0 = none)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--pm-cap", f.pm_cap, "perfect matching enumeration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", f.workers, "worker threads")->check(CLI::Range(1U, 256U));
    cmd->add_option("--out", f.out, "output path (default stdout)");
    cmd->add_flag("--timings", f.timings, "include per-section timings (output no longer reproducible)");
    cmd->add_option("--scc-max-cycles", f.scc_max_cycles, "cycle limit for --scc")->check(CLI::Range(1, 8));
    cmd->add_option("--dim-cap", f.dim_cap, "cycle space dimension cap for exact covers")->check(CLI::Range(1, 30));
}

cc::AnalyzeOptions to_options(const Flags& f)
{
    cc::AnalyzeOptions o;
    if (!f.ops.empty()) {
        o.ops.clear();
        std::stringstream ss(f.ops);
        std::string op;
        while (std::getline(ss, op, ',')) {
            if (op == "all") {
                o.ops.insert(cc::known_ops().begin(), cc::known_ops().end());
                continue;
            }
            if (std::find(cc::known_ops().begin(), cc::known_ops().end(), op) == cc::known_ops().end())
                throw CLI::ValidationError("--ops", "unknown section '" + op + "'");
            o.ops.insert(op);
        }
    }
    if (f.scc)
        o.ops.insert("scc");
    if (f.fulkerson)
        o.ops.insert("fulkerson");
    o.mu_upto = f.mu_upto;
    if (o.has("covers") || o.has("scc") || o.has("cores"))
        o.mu_upto = std::max(o.mu_upto, 4);
    o.scc_max_cycles = f.scc_max_cycles;
    o.scc_dim_cap = f.dim_cap;
    if (f.budget_ms > 0)
        o.budget_ms = f.budget_ms;
    o.pm_cap = f.pm_cap;
    o.timings = f.timings;
    return o;
}

cc::CorpusFormat to_format(const std::string& s)
{
    if (s == "mgf")
        return cc::CorpusFormat::mgf;
    if (s == "graph6")
        return cc::CorpusFormat::graph6;
    return cc::CorpusFormat::automatic;
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cc::Json report_for(const cc::CorpusEntry& entry, const cc::AnalyzeOptions& opt)
{
    if (!entry.graph)
        return cc::parse_error_report(entry);
    return cc::analyze(*entry.graph, entry.id, opt).json;
}

/// Analyzes every entry with a pool of workers and writes the reports in
/// input order, followed by the summary.
int run_scan(const std::vector<cc::CorpusEntry>& entries, const cc::AnalyzeOptions& opt, unsigned workers,
             std::ostream& os)
{
    const std::size_t total = entries.size();
    std::vector<std::optional<std::string>> done(total);
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    cc::ScanSummary summary;

    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            const cc::Json r = report_for(entries[i], opt);
            std::string line = r.dump();
            {
                std::lock_guard lock(mu);
                done[i] = std::move(line);
            }
            ready.notify_one();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1U, workers); ++w)
        pool.emplace_back(work);
    for (std::size_t i = 0; i < total; ++i) {
        std::string line;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return done[i].has_value(); });
            line = std::move(*done[i]);
            done[i].reset();
        }
        summary.add(cc::Json::parse(line));
        os << line << '\n';
    }
    for (auto& t : pool)
        t.join();
    os << summary.json().dump() << '\n';
    os.flush();
    if (summary.has_candidates())
        return exit_violations;
    return summary.clean() ? exit_clean : exit_usage;
}

int run_verify(const std::string& report_path, const std::string& corpus_path, const std::string& format)
{
    const auto entries = cc::read_corpus(read_file(corpus_path), to_format(format));
    std::map<std::string, const cc::CorpusEntry*> by_id;
    for (const auto& e : entries)
        by_id.emplace(e.id, &e);
    std::istringstream in(read_file(report_path));
    std::string line;
    int audited = 0;
    int failures = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const cc::Json r = cc::Json::parse(line);
        if (r.contains("summary") || r.value("status", "") == "parse-error")
            continue;
        const auto it = by_id.find(r.value("id", ""));
        if (it == by_id.end() || !it->second->graph) {
            std::cout << "missing graph for report '" << r.value("id", "") << "'\n";
            ++failures;
            continue;
        }
        ++audited;
        for (const cc::Check& c : cc::audit_report(*it->second->graph, r))
            if (!c.passed) {
                std::cout << r["id"].get<std::string>() << ": " << c.name << " failed " << c.detail << '\n';
                ++failures;
            }
        if (r.contains("checks"))
            for (const auto& c : r["checks"])
                if (!c["passed"].get<bool>()) {
                    std::cout << r["id"].get<std::string>() << ": reported violation " << c["name"].get<std::string>()
                              << '\n';
                    ++failures;
                }
    }
    std::cout << "audited " << audited << " reports, " << failures << " failures\n";
    return failures == 0 ? exit_clean : exit_violations;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Perfect matching covers, cores and cycle covers of cubic graphs"};
    app.require_subcommand(1);

    Flags analyze_flags;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze the first graph of a file");
    add_analysis_flags(analyze_cmd, analyze_flags);

    Flags scan_flags;
    auto* scan_cmd = app.add_subcommand("scan", "analyze every graph of a corpus (JSON Lines, summary last)");
    add_analysis_flags(scan_cmd, scan_flags);

    std::string family;
    int t = 0;
    auto* gen_cmd = app.add_subcommand("gen", "emit a test graph in MGF");
    gen_cmd->add_option("family", family, "graph family")->required()->check(CLI::IsMember({"flower"}));
    gen_cmd->add_option("t", t, "family parameter")->required();

    std::string report_path;
    std::string corpus_path;
    std::string verify_format = "auto";
    auto* verify_cmd = app.add_subcommand("verify", "re-audit the witnesses of a report file");
    verify_cmd->add_option("report", report_path, "JSON Lines report")->required();
    verify_cmd->add_option("corpus", corpus_path, "corpus the report was made from")->required();
    verify_cmd->add_option("--format", verify_format, "corpus format")->check(CLI::IsMember({"auto", "mgf", "graph6"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_clean : exit_usage;
    }

    try {
        if (*gen_cmd) {
            std::cout << cc::to_mgf(cc::flower_snark(t));
            return exit_clean;
        }
        if (*verify_cmd)
            return run_verify(report_path, corpus_path, verify_format);

        const bool is_scan = static_cast<bool>(*scan_cmd);
        const Flags& f = is_scan ? scan_flags : analyze_flags;
        const cc::AnalyzeOptions opt = to_options(f);
        auto entries = cc::read_corpus(read_file(f.file), to_format(f.format));
        if (entries.empty()) {
            std::cerr << "no graph in " << f.file << '\n';
            return exit_usage;
        }
        std::ofstream file_out;
        if (!f.out.empty()) {
            file_out.open(f.out, std::ios::binary);
            if (!file_out) {
                std::cerr << "cannot write " << f.out << '\n';
                return exit_usage;
            }
        }
        std::ostream& os = f.out.empty() ? std::cout : file_out;
        if (is_scan)
            return run_scan(entries, opt, f.workers, os);

        const auto& entry = entries.front();
        if (!entry.graph) {
            std::cerr << entry.error->what() << '\n';
            return exit_usage;
        }
        const cc::GraphReport rep = cc::analyze(*entry.graph, entry.id, opt);
        os << rep.json.dump(2) << '\n';
        return rep.violations() == 0 ? exit_clean : exit_violations;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const cc::Error& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
}
