/*
   Copyright 2026 The hkfun authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hk/closedform.hpp"
#include "hk/hankel.hpp"
#include "hk/parse.hpp"
#include "hk/propcheck.hpp"
#include "hk/quotient.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

// exit codes: 0 success / all-match, 2 parse error, 3 precondition violation,
// 4 verification mismatch
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitMismatch = 4;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::uint64_t> parse_q_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(s)) {
        unsigned long long v = 0;
        std::size_t pos = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            throw hk::ParseError("bad q value '" + item + "'");
        }
        if (pos != item.size()) throw hk::ParseError("bad q value '" + item + "'");
        if (v < 1) throw hk::PreconditionViolated("q must be >= 1");
        out.push_back(v);
    }
    if (out.empty()) throw hk::ParseError("empty q list");
    std::sort(out.begin(), out.end());
    return out;
}

json profile_row(const hk::HKProfile& p) {
    json row;
    row["q"] = p.q;
    row["hk"] = p.hk_value;
    row["a"] = p.a_q;
    row["iota"] = p.iota_q;
    row["m"] = p.m_q;
    row["L"] = p.L_q;
    row["maximal_rank"] = p.maximal_rank;
    return row;
}

std::string csv_escape(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // csv: one header row from the keys of the first row object
    const json& rows = report.at("rows");
    if (rows.empty()) return;
    std::string header;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        if (!header.empty()) header += ",";
        header += it.key();
    }
    std::cout << header << "\n";
    for (const auto& row : rows) {
        std::string line;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!line.empty()) line += ",";
            line += csv_escape(it.value());
        }
        std::cout << line << "\n";
    }
}

int cmd_compute(std::uint64_t prime, const std::string& vars_csv, const std::string& poly_text,
                const std::string& q_csv, const std::string& format) {
    Clock clock;
    std::vector<std::string> vars = split_list(vars_csv);
    if (vars.empty()) throw hk::ParseError("empty variable list");
    hk::PrimeField F(prime);
    hk::MultiPoly f = hk::parse_poly(poly_text, vars, F);
    std::vector<std::uint64_t> qs = parse_q_list(q_csv);

    json report;
    report["command"] = "compute";
    report["parameters"] = {{"prime", prime},
                            {"vars", vars},
                            {"poly", f.str(vars)},
                            {"q", qs}};
    report["rows"] = json::array();
    for (std::uint64_t q : qs) report["rows"].push_back(profile_row(hk::hk_profile(f, q)));
    report["timing_ms"] = clock.ms();
    emit(report, format);
    return 0;
}

int cmd_verify(const std::string& family_name, std::uint64_t prime, std::uint64_t qmax,
               const std::string& format) {
    Clock clock;
    hk::CubicFamily family = hk::family_from_name(family_name);
    std::vector<std::uint64_t> qs;
    if (hk::family_is_generalized(family)) {
        for (std::uint64_t q = 1; q <= qmax; ++q) qs.push_back(q);
    } else {
        for (std::uint64_t q = prime; q <= qmax; q *= prime) {
            qs.push_back(q);
            if (q > qmax / prime) break;  // overflow guard
        }
    }
    if (qs.empty()) throw hk::PreconditionViolated("no q <= qmax for this family");
    hk::FamilyReport rep = hk::verify_family(family, prime, qs);

    json report;
    report["command"] = "verify";
    report["parameters"] = {{"family", family_name}, {"prime", prime}, {"qmax", qmax}};
    report["rows"] = json::array();
    for (const auto& row : rep.rows) {
        json r = profile_row(row.profile);
        r["formula"] = row.formula;
        r["match"] = row.match;
        report["rows"].push_back(r);
    }
    report["all_match"] = rep.all_match;
    report["timing_ms"] = clock.ms();
    emit(report, format);
    return rep.all_match ? 0 : kExitMismatch;
}

int cmd_hankel(std::size_t kmax, std::uint64_t prime, const std::string& format) {
    Clock clock;
    json report;
    report["command"] = "hankel";
    report["parameters"] = {{"kmax", kmax}};
    if (prime != 0) report["parameters"]["prime"] = prime;
    report["rows"] = json::array();
    bool all = true;
    for (std::size_t k = 1; k <= kmax; ++k) {
        json row;
        row["k"] = k;
        row["geronimus"] = hk::geronimus_check(k);
        row["corollary"] = hk::corollary_check(k);
        if (prime != 0) {
            row["geronimus_mod"] = hk::geronimus_check(k, prime);
            row["corollary_mod"] = hk::corollary_check(k, prime);
            all = all && row["geronimus_mod"].get<bool>() && row["corollary_mod"].get<bool>();
        }
        all = all && row["geronimus"].get<bool>() && row["corollary"].get<bool>();
        report["rows"].push_back(row);
    }
    report["all_match"] = all;
    report["timing_ms"] = clock.ms();
    emit(report, format);
    return all ? 0 : kExitMismatch;
}

int cmd_beta(unsigned nmax, const std::string& format) {
    Clock clock;
    json report;
    report["command"] = "beta";
    report["parameters"] = {{"nmax", nmax}};
    report["rows"] = json::array();
    for (unsigned i = 1; i <= nmax; ++i)
        report["rows"].push_back({{"n", i}, {"beta", hk::beta(i).str()}});
    report["timing_ms"] = clock.ms();
    emit(report, format);
    return 0;
}

int cmd_bound(unsigned n, unsigned d, std::uint64_t q, const std::string& format) {
    Clock clock;
    json report;
    report["command"] = "bound";
    report["parameters"] = {{"n", n}, {"d", d}, {"q", q}};
    json row;
    row["n"] = n;
    row["d"] = d;
    row["q"] = q;
    row["m"] = hk::m_of_q(n, d, q);
    row["L"] = hk::lower_bound_L(n, d, q).str();
    report["rows"] = json::array({row});
    report["timing_ms"] = clock.ms();
    emit(report, format);
    return 0;
}

int cmd_props(std::uint64_t seed, unsigned instances, const std::string& format) {
    Clock clock;
    hk::PropertyOptions opt;
    opt.seed = seed;
    opt.instances = instances;
    hk::PropertyReport rep = hk::run_property_suite(opt);
    json report;
    report["command"] = "props";
    report["parameters"] = {{"seed", seed}, {"instances", instances}};
    report["rows"] = json::array();
    for (const auto& f : rep.failures)
        report["rows"].push_back({{"property", f.property}, {"instance", f.instance}});
    report["checks"] = rep.checks;
    report["all_match"] = rep.ok();
    report["timing_ms"] = clock.ms();
    emit(report, format);
    return rep.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert-Kunz computations for hypersurfaces over prime fields"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* compute = app.add_subcommand("compute", "Hilbert-Kunz profile of a hypersurface");
    std::uint64_t prime = 0, qmax = 0, q_single = 0, seed = 20260809;
    std::string vars, poly, q_csv, family;
    unsigned nmax = 6, n_par = 0, d_par = 0, instances = 54;
    std::size_t kmax = 10;
    compute->add_option("--prime", prime, "field characteristic")->required();
    compute->add_option("--vars", vars, "comma-separated variable names")->required();
    compute->add_option("--poly", poly, "homogeneous polynomial")->required();
    compute->add_option("--q", q_csv, "comma-separated list of q values")->required();

    auto* verify = app.add_subcommand("verify", "engine vs closed formula for a cubic family");
    verify->add_option("--family", family,
                       "cuspidal|nodal|elliptic_odd|elliptic_char2_j0|elliptic_char2_jnz|cayley")
        ->required();
    verify->add_option("--prime", prime, "field characteristic")->required();
    verify->add_option("--qmax", qmax, "largest q")->required();

    auto* hankel = app.add_subcommand("hankel", "Hankel determinant identity checks");
    hankel->add_option("--kmax", kmax, "largest matrix size")->required();
    std::uint64_t hankel_prime = 0;
    hankel->add_option("--prime", hankel_prime, "also check mod this odd prime");

    auto* beta_cmd = app.add_subcommand("beta", "the constants governing minimal multiplicities");
    beta_cmd->add_option("--nmax", nmax, "largest index");

    auto* bound = app.add_subcommand("bound", "m(q) and the universal lower bound L(q)");
    bound->add_option("--n", n_par, "projective dimension")->required();
    bound->add_option("--d", d_par, "degree of the form")->required();
    bound->add_option("--q", q_single, "q value")->required();

    auto* props = app.add_subcommand("props", "randomized structural property suite");
    props->add_option("--seed", seed, "random seed");
    props->add_option("--instances", instances, "number of random instances");

    for (CLI::App* sub : {compute, verify, hankel, beta_cmd, bound, props}) add_format(sub);

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(prime, vars, poly, q_csv, format);
        if (verify->parsed()) return cmd_verify(family, prime, qmax, format);
        if (hankel->parsed()) return cmd_hankel(kmax, hankel_prime, format);
        if (beta_cmd->parsed()) return cmd_beta(nmax, format);
        if (bound->parsed()) return cmd_bound(n_par, d_par, q_single, format);
        if (props->parsed()) return cmd_props(seed, instances, format);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const hk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const hk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
