// Command-line harness: runs named verification suites and prints a deterministic report.
#include "uqf4/rootdata.hpp"
#include "uqf4/straightening.hpp"
#include "uqf4/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace uqf4;
using nlohmann::ordered_json;

namespace {

ordered_json record_json(const CheckRecord& r) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["ref"] = r.ref;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness;
    if (r.known) j["known_discrepancy"] = true;
    return j;
}

CheckRecord record_from(const ordered_json& j) {
    CheckRecord r;
    r.check_id = j.at("check_id");
    r.ref = j.at("ref");
    const std::string s = j.at("status");
    r.status = s == "pass" ? CheckStatus::pass : s == "fail" ? CheckStatus::fail : CheckStatus::skipped;
    r.witness = j.at("witness");
    r.known = j.value("known_discrepancy", false);
    return r;
}

ordered_json suite_json(const SuiteResult& s) {
    ordered_json j;
    j["suite"] = s.suite;
    j["passed"] = s.passed();
    j["failed"] = s.failed();
    j["skipped"] = s.skipped();
    j["records"] = ordered_json::array();
    for (const auto& r : s.records) j["records"].push_back(record_json(r));
    return j;
}

SuiteResult suite_from(const ordered_json& j) {
    SuiteResult s;
    s.suite = j.at("suite");
    for (const auto& r : j.at("records")) s.records.push_back(record_from(r));
    return s;
}

SuiteResult guarded_run(const std::string& name, const SuiteContext& ctx) {
    try {
        return run_suite(name, ctx);
    } catch (const std::exception& e) {
        SuiteResult s;
        s.suite = name;
        s.records.push_back({name + ".error", "suite ran to completion", CheckStatus::fail, e.what(), false});
        return s;
    }
}

std::string read_all(int fd) {
    std::string out;
    char buf[1 << 16];
    ssize_t n;
    while ((n = read(fd, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
    return out;
}

// Each suite runs in its own child process; results come back as JSON over a pipe.
std::vector<SuiteResult> run_parallel(const std::vector<std::string>& names, const SuiteContext& ctx, int jobs) {
    std::vector<SuiteResult> results(names.size());
    struct Child {
        pid_t pid;
        int fd;
        std::size_t slot;
    };
    std::vector<Child> running;
    std::size_t next = 0;
    auto reap = [&](const Child& c) {
        std::string text = read_all(c.fd);
        close(c.fd);
        int status = 0;
        waitpid(c.pid, &status, 0);
        try {
            results[c.slot] = suite_from(ordered_json::parse(text));
        } catch (const std::exception&) {
            SuiteResult s;
            s.suite = names[c.slot];
            s.records.push_back(
                {names[c.slot] + ".error", "suite ran to completion", CheckStatus::fail, "worker process failed", false});
            results[c.slot] = s;
        }
    };
    while (next < names.size() || !running.empty()) {
        while (next < names.size() && static_cast<int>(running.size()) < jobs) {
            int fds[2];
            if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
            std::cout.flush();
            pid_t pid = fork();
            if (pid < 0) throw std::runtime_error("fork failed");
            if (pid == 0) {
                close(fds[0]);
                std::string text = suite_json(guarded_run(names[next], ctx)).dump();
                std::size_t off = 0;
                while (off < text.size()) {
                    ssize_t w = write(fds[1], text.data() + off, text.size() - off);
                    if (w <= 0) break;
                    off += static_cast<std::size_t>(w);
                }
                close(fds[1]);
                _exit(0);
            }
            close(fds[1]);
            running.push_back({pid, fds[0], next++});
        }
        // reading blocks until the child closes its end, so collect in launch order
        Child c = running.front();
        running.erase(running.begin());
        reap(c);
    }
    return results;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string text_report(const ordered_json& rep) {
    std::ostringstream o;
    o << "uqf4 verification report\n";
    o << "parameters: " << rep["params"].dump() << "\n";
    o << "table fingerprint: " << rep["table_fingerprint"].get<std::string>() << "\n\n";
    for (const auto& s : rep["suites"]) {
        o << "== " << s["suite"].get<std::string>() << "  (" << s["passed"] << " pass, " << s["failed"] << " fail, "
          << s["skipped"] << " skipped)\n";
        for (const auto& r : s["records"]) {
            std::string st = r["status"];
            if (r.value("known_discrepancy", false)) st += "*";
            o << "  " << std::left << std::setw(9) << st << std::setw(52) << r["check_id"].get<std::string>() << " "
              << r["ref"].get<std::string>() << "\n";
            const std::string w = r["witness"];
            if (!w.empty()) o << "           " << w << "\n";
        }
    }
    const auto& t = rep["totals"];
    o << "\ntotal: " << t["passed"] << " pass, " << t["failed"] << " fail, " << t["skipped"] << " skipped";
    if (t["known_discrepancies"].get<int>() > 0) o << " (" << t["known_discrepancies"] << " known discrepancies, marked *)";
    o << "\n";
    return o.str();
}

void dump_roots(std::ostream& o) {
    for (int i = 1; i <= kNumRoots; ++i) {
        const RootEntry& e = root_entry(i);
        o << std::setw(2) << i << "  " << std::setw(10) << e.word << "  (" << e.root[0] << "," << e.root[1] << ","
          << e.root[2] << "," << e.root[3] << ")  height " << e.height();
        if (!e.simple()) {
            o << "  =";
            for (const auto& d : e.decompositions) o << " " << d.a << "+" << d.b << (d.lyndon ? "L" : "");
        }
        o << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for the two-parameter quantum group of type F4"};
    std::optional<int> ell, y, z;
    std::string suites = "all";
    int max_height = 6;
    std::string cache;
    std::string format = "text";
    std::string output;
    int jobs = 1;
    bool extended = false;
    bool roots = false;
    app.add_option("--ell", ell, "order of the root of unity (odd)");
    app.add_option("--y", y, "r = theta^y");
    app.add_option("--z", z, "s = theta^z");
    app.add_option("--suite", suites, "comma-separated suites, or 'all'");
    app.add_option("--max-height", max_height, "height bound for centrality and the oracle")->check(CLI::Range(1, 11));
    app.add_option("--table-cache", cache, "straightening table cache file");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output,-o", output, "write the report here instead of standard output");
    app.add_option("--jobs,-j", jobs, "suites run in parallel")->check(CLI::Range(1, 64));
    app.add_flag("--extended", extended, "run heavy checks (all roots, ell > 5)");
    app.add_flag("--dump-roots", roots, "print the root table and exit");
    CLI11_PARSE(app, argc, argv);

    if (roots) {
        dump_roots(std::cout);
        return 0;
    }

    std::vector<std::string> selected;
    if (suites == "all")
        selected = suite_names();
    else
        selected = split_list(suites);
    for (const auto& s : selected)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            std::cerr << "error: unknown suite '" << s << "'\n";
            return 2;
        }

    SuiteContext ctx;
    ctx.max_height = max_height;
    ctx.extended = extended;
    if (ell || y || z) {
        if (!(ell && y && z)) {
            std::cerr << "error: --ell, --y and --z must be given together\n";
            return 2;
        }
        ctx.spec = SpecParams{*ell, *y, *z};
    } else {
        ctx.spec = SpecParams{5, 1, 2};
    }
    if (auto problems = validate(*ctx.spec); !problems.empty()) {
        std::cerr << "error: invalid parameters (ell=" << ctx.spec->ell << ", y=" << ctx.spec->y << ", z=" << ctx.spec->z
                  << ")\n";
        for (const auto& p : problems) std::cerr << "  " << p << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string note;
    std::shared_ptr<GenericTable> table;
    try {
        table = obtain_table(cache, &note);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!note.empty()) std::cerr << "warning: " << note << "\n";
    ctx.table = table;

    std::vector<SuiteResult> results;
    if (jobs == 1 || selected.size() == 1) {
        for (const auto& s : selected) results.push_back(guarded_run(s, ctx));
    } else {
        results = run_parallel(selected, ctx, jobs);
    }

    ordered_json rep;
    rep["params"] = {{"ell", ctx.spec->ell},
                     {"y", ctx.spec->y},
                     {"z", ctx.spec->z},
                     {"max_height", max_height},
                     {"extended", extended},
                     {"suites", selected}};
    rep["table_fingerprint"] = table_fingerprint(*table);
    rep["suites"] = ordered_json::array();
    int passed = 0, failed = 0, skipped = 0, known = 0;
    for (const auto& s : results) {
        rep["suites"].push_back(suite_json(s));
        passed += s.passed();
        failed += s.failed();
        skipped += s.skipped();
        for (const auto& r : s.records) known += r.known;
    }
    rep["totals"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"known_discrepancies", known}};

    const std::string text = format == "json" ? rep.dump(2) + "\n" : text_report(rep);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        out << text;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << std::fixed << std::setprecision(2) << "wall-clock " << secs << " s; " << passed << " pass, " << failed
              << " fail, " << skipped << " skipped\n";
    return failed == 0 ? 0 : 1;
}
