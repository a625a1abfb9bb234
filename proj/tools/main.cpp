// qtknots: command-line front end for the q,t-combinatorics engine.
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cache.hpp"
#include "qtknots/dyck.hpp"
#include "qtknots/errors.hpp"
#include "qtknots/knot.hpp"
#include "qtknots/shuffle.hpp"
#include "suites.hpp"

using nlohmann::json;
using namespace qtknots;

namespace {

const char* kDyckNote = "dyck statistics paired as q^area t^dinv, calibrated against the tabulated Catalan values";
const char* kCuspNote = "cuspidal coefficient formula uses the prefactor (1-t)(1-q)^n/((1-qt)(-qt)^(n-1)) and a sign (-1) per vanishing chain factor";
const char* kHhhNote = "Frobenius character of L_{m/n} taken as omega(P_{m-n,n}.1)(q,t/q); a^k part is the hook (n-k,1^k) Schur coefficient";

struct Globals {
    bool json = false;
    std::string cache_dir;
    int threads = 0;
    std::uint64_t seed = 0;
};

struct Report {
    std::string command;
    json params = json::object();
    json result = json::object();
    std::vector<std::string> deviations;
    std::string text;
    int code = 0;
};

std::string tableau_list(const std::vector<Tableau>& v, json& arr) {
    std::string s;
    for (const auto& T : v) {
        s += T.str() + "\n";
        arr.push_back(T.str());
    }
    return s;
}

Partition parse_shape(const std::string& s) {
    try {
        return Partition::parse(s);
    } catch (const ParseError& e) {
        throw std::invalid_argument(std::string("--shape: ") + e.what());
    }
}

// Degrees whose Macdonald tables a command needs.
std::set<int> macdonald_degrees(const std::string& cmd, int n, const std::string& suite, int max_n) {
    if (cmd == "macdonald" || cmd == "hhh") return {n};
    if (cmd == "verify" && (suite == "macdonald" || suite == "symmetry")) {
        std::set<int> d;
        for (int k = 1; k <= (max_n ? max_n : 5); ++k) d.insert(k);
        return d;
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q,t-combinatorics of rational-slope torus knots"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Print a JSON report");
    app.add_option("--cache-dir", g.cache_dir, "Directory for cached Macdonald tables");
    app.add_option("--threads", g.threads, "Worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    int m = 0, n = 0, max_n = 0, max_m = 0;
    std::string partition, formula = "syt", method = "shuffle", shape, suite;
    bool normalize = false;

    auto* mac = app.add_subcommand("macdonald", "Schur expansion of modified Macdonald polynomials");
    mac->add_option("--n", n, "Degree")->required()->check(CLI::PositiveNumber);
    mac->add_option("--partition", partition, "Single partition, e.g. 2,1");

    auto* co = app.add_subcommand("coeffs", "Coefficients of P_{m,n}.1 in the modified Macdonald basis");
    co->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    co->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    co->add_option("--formula", formula)->check(CLI::IsMember({"syt", "asyt", "both"}));

    auto* qc = app.add_subcommand("qtcatalan", "Rational q,t-Catalan polynomial");
    qc->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    qc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    qc->add_option("--method", method)->check(CLI::IsMember({"shuffle", "dyck", "both"}));

    auto* hh = app.add_subcommand("hhh", "Triply graded torus knot superpolynomial");
    hh->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    hh->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    hh->add_flag("--normalize", normalize, "Shift minimal q and t degrees to zero");

    auto* as = app.add_subcommand("asyt", "List almost standard Young tableaux");
    as->add_option("--shape", shape)->required();
    auto* sy = app.add_subcommand("syt", "List standard Young tableaux");
    sy->add_option("--shape", shape)->required();

    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    ve->add_option("--suite", suite)->required()->check(CLI::IsMember(cli::suite_names()));
    ve->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    ve->add_option("--max-m", max_m)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    const int threads = g.threads > 0 ? g.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    Report rep;
    rep.command = app.get_subcommands().front()->get_name();

    std::set<int> degrees = macdonald_degrees(rep.command, n, suite, max_n);
    std::set<int> loaded;
    if (!g.cache_dir.empty())
        for (int d : degrees)
            if (cli::cache_load(g.cache_dir, d)) loaded.insert(d);

    try {
        if (rep.command == "macdonald") {
            rep.params = {{"n", n}};
            std::vector<Partition> lams;
            if (!partition.empty()) {
                Partition p = parse_shape(partition);
                if (p.size() != n) throw std::invalid_argument("--partition: size differs from --n");
                lams.push_back(p);
                rep.params["partition"] = partition;
            } else {
                lams = partitions_of(n);
            }
            for (const auto& lam : lams) {
                json row = json::object();
                rep.text += "H(" + lam.key() + ")\n";
                for (const auto& [mu, c] : modified_macdonald(lam).coeffs()) {
                    row[mu.key()] = c.str();
                    rep.text += "  s(" + mu.key() + "): " + c.to_laurent().pretty() + "\n";
                }
                rep.result[lam.key()] = row;
            }
        } else if (rep.command == "coeffs") {
            rep.params = {{"m", m}, {"n", n}, {"formula", formula}};
            SlopeData s(m, n);
            std::optional<CoeffVector> a, b;
            if (formula != "asyt") a = c_mn_coeffs(s, Formula::syt, threads);
            if (formula != "syt") {
                b = c_mn_coeffs(s, Formula::asyt, threads);
                rep.deviations.push_back(kCuspNote);
            }
            const CoeffVector& main = a ? *a : *b;
            for (const auto& [lam, c] : main.entries) {
                json e = {{"coefficient", c.str()}, {"polynomial", c.is_laurent()}};
                if (a && b) e["agree"] = c == b->entries.at(lam);
                rep.result["coefficients"][lam.key()] = e;
                rep.text += lam.key() + ": " + c.str() + "\n";
            }
            QTRat total = main.total();
            rep.result["total"] = total.str();
            rep.text += "sum: " + total.str() + "\n";
            if (a && b) {
                bool agree = true;
                for (const auto& [lam, c] : a->entries) agree = agree && c == b->entries.at(lam);
                rep.result["agree"] = agree;
                rep.text += std::string("syt/asyt agree: ") + (agree ? "yes" : "NO") + "\n";
                if (!agree) rep.code = 1;
            }
        } else if (rep.command == "qtcatalan") {
            rep.params = {{"m", m}, {"n", n}, {"method", method}};
            std::optional<Laurent> sh, dy;
            if (method != "dyck") sh = qt_catalan(m, n, CatalanMethod::shuffle, threads);
            if (method != "shuffle") {
                dy = qt_catalan(m, n, CatalanMethod::dyck);
                rep.deviations.push_back(kDyckNote);
            }
            if (sh) rep.result["shuffle"] = sh->str();
            if (dy) rep.result["dyck"] = dy->str();
            rep.result["polynomial"] = (sh ? *sh : *dy).str();
            rep.text = (sh ? *sh : *dy).pretty() + "\n";
            if (sh && dy) {
                bool agree = *sh == *dy;
                rep.result["agree"] = agree;
                if (!agree) {
                    rep.text += "dyck: " + dy->pretty() + "\nmethods disagree\n";
                    rep.code = 1;
                }
            }
        } else if (rep.command == "hhh") {
            rep.params = {{"m", m}, {"n", n}, {"normalize", normalize}};
            rep.deviations.push_back(kHhhNote);
            Mono shift;
            SuperPoly h = hhh_superpoly(SlopeData(m, n), normalize, &shift, threads);
            rep.result["superpoly"] = h.str();
            for (int k = 0; k < n; ++k) rep.result["a" + std::to_string(k)] = h.a_part(k).str();
            rep.result["shift"] = Laurent::monomial(shift.q, shift.t).str();
            rep.text = h.pretty() + "\n";
        } else if (rep.command == "asyt" || rep.command == "syt") {
            Partition lam = parse_shape(shape);
            rep.params = {{"shape", shape}};
            json arr = json::array();
            rep.text = tableau_list(rep.command == "asyt" ? enumerate_asyt(lam) : enumerate_syt(lam), arr);
            rep.result = {{"count", arr.size()}, {"tableaux", arr}};
        } else if (rep.command == "verify") {
            rep.params = {{"suite", suite}};
            if (max_n) rep.params["max_n"] = max_n;
            if (max_m) rep.params["max_m"] = max_m;
            if (suite == "catalan") rep.deviations.push_back(kDyckNote);
            if (suite == "prop-pa") rep.deviations.push_back(kCuspNote);
            if (suite == "symmetry") rep.deviations.push_back(kHhhNote);
            cli::SuiteOptions opt{max_n, max_m, g.seed, threads};
            auto cases = cli::run_suite(suite, opt);
            int passed = 0;
            json arr = json::array();
            for (const auto& c : cases) {
                passed += c.ok ? 1 : 0;
                arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
                rep.text += std::string(c.ok ? "ok    " : "FAIL  ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
            }
            rep.text += suite + ": " + std::to_string(passed) + "/" + std::to_string(cases.size()) + " passed (seed " +
                        std::to_string(g.seed) + ")\n";
            rep.result = {{"cases", arr}, {"passed", passed}, {"total", cases.size()}};
            if (passed != static_cast<int>(cases.size())) rep.code = 1;
        }
    } catch (const NotCoprime& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    }

    if (!g.cache_dir.empty()) {
        for (int d : degrees) {
            if (loaded.count(d)) continue;
            try {
                cli::cache_store(g.cache_dir, d);
            } catch (const std::exception& e) {
                std::cerr << "warning: cache not written: " << e.what() << "\n";
            }
        }
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (g.json) {
        json out = {{"command", rep.command},
                    {"params", rep.params},
                    {"result", rep.result},
                    {"meta", {{"seed", g.seed}, {"deviations", rep.deviations}, {"elapsed_ms", ms}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.text;
    }
    return rep.code;
}
