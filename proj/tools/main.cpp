// Command-line surface: compute the recursive bivariate tables, run
// verification sweeps, evaluate the closed-form example families, and export
// asymptotic trend reports.  Formats: text (default), json, csv.
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "charpoly/geometry.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/logconcavity.hpp"
#include "charpoly/m0n.hpp"
#include "charpoly/trees.hpp"

namespace cp = charpoly;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file: " + path);
        os << content;
    }
};

json lc_report_to_json(const cp::LCReport& r) {
    return {{"subject", r.subject},
            {"notion", r.notion},
            {"pass", r.pass},
            {"internal_zeros", r.internal_zeros},
            {"violation_index", r.violation_index},
            {"ok", r.ok()}};
}

json bivar_lc_to_json(const cp::BivarLC& lc) {
    json out;
    out["length_in_degree"] = json::array();
    for (const auto& r : lc.length_in_degree) out["length_in_degree"].push_back(lc_report_to_json(r));
    out["length_at_t"] = lc_report_to_json(lc.length_at_t);
    out["degree_in_length"] = json::array();
    for (const auto& r : lc.degree_in_length) out["degree_in_length"].push_back(lc_report_to_json(r));
    out["degree_at_m"] = lc_report_to_json(lc.degree_at_m);
    return out;
}

json ints_to_json(const std::vector<cp::Int>& v) {
    json out = json::array();
    for (const cp::Int& x : v) out.push_back(cp::int_to_string(x));
    return out;
}

void append_bivar_csv(std::ostringstream& os, const std::string& series, int n,
                      const cp::BivarPoly& f) {
    for (const auto& [key, c] : f.terms)
        os << series << ',' << n << ',' << key.first << ',' << key.second << ','
           << cp::rat_num(c).str() << ',' << cp::rat_den(c).str() << '\n';
}

std::string format_output(const json& payload, const std::string& format,
                          const std::string& text_form, const std::string& csv_form) {
    if (format == "json") return payload.dump(1) + "\n";
    if (format == "csv") return csv_form;
    return text_form;
}

// ---------------------------------------------------------------- m0n ----

int cmd_m0n(int max_n, int threads, const std::string& format, const OutputTarget& out) {
    const cp::M0nTable table = cp::compute_m0n_table(max_n, threads);

    json results = json::array();
    std::ostringstream text, csv;
    csv << "series,n,t,m,num,den\n";
    for (int n = 3; n <= max_n; ++n) {
        json row;
        row["n"] = n;
        row["P"] = cp::bivar_to_json(table.P(n));
        row["Q"] = cp::bivar_to_json(table.Q(n));
        row["Qplus"] = cp::bivar_to_json(table.Qplus(n));
        row["betti_P"] = ints_to_json(cp::betti_numbers(table, n, cp::Side::P));
        row["betti_Q"] = ints_to_json(cp::betti_numbers(table, n, cp::Side::Q));
        row["invariant_P"] = cp::unipoly_t_to_json(cp::invariant_poincare(table, n, cp::Side::P));
        row["invariant_Q"] = cp::unipoly_t_to_json(cp::invariant_poincare(table, n, cp::Side::Q));
        results.push_back(std::move(row));

        text << "n = " << n << "\n";
        text << "  P  = " << table.P(n).to_string() << "\n";
        text << "  Q  = " << table.Q(n).to_string() << "\n";
        text << "  Q+ = " << table.Qplus(n).to_string() << "\n";
        text << "  betti(P) =";
        for (const cp::Int& b : cp::betti_numbers(table, n, cp::Side::P)) text << ' ' << b.str();
        text << "\n  betti(Q) =";
        for (const cp::Int& b : cp::betti_numbers(table, n, cp::Side::Q)) text << ' ' << b.str();
        text << "\n  invariants(P) = "
             << cp::invariant_poincare(table, n, cp::Side::P).to_string("t") << "\n";
        text << "  invariants(Q) = "
             << cp::invariant_poincare(table, n, cp::Side::Q).to_string("t") << "\n";

        append_bivar_csv(csv, "P", n, table.P(n));
        append_bivar_csv(csv, "Q", n, table.Q(n));
        append_bivar_csv(csv, "Qplus", n, table.Qplus(n));
    }

    json payload = {{"command", "m0n"}, {"params", {{"max_n", max_n}}}, {"results", results}};
    out.write(format_output(payload, format, text.str(), csv.str()));
    return kExitOk;
}

// ------------------------------------------------------------- verify ----

int cmd_verify(int max_n, int threads, std::vector<std::string> checks,
               const std::string& format, const OutputTarget& out) {
    if (checks.empty()) checks = {"oracle", "logconcave", "exponential", "wallcrossing", "betti"};
    for (const std::string& c : checks)
        if (c != "oracle" && c != "logconcave" && c != "exponential" && c != "wallcrossing" &&
            c != "betti")
            throw std::invalid_argument("unknown check: " + c);

    const cp::M0nTable table = cp::compute_m0n_table(max_n, threads);

    bool all_pass = true;
    json results = json::array();
    std::ostringstream text, csv;
    csv << "check,detail,pass\n";

    auto record = [&](const std::string& check, const std::string& detail, bool pass) {
        all_pass = all_pass && pass;
        results.push_back({{"check", check}, {"detail", detail}, {"pass", pass}});
        text << (pass ? "PASS" : "FAIL") << "  " << check << "  " << detail << "\n";
        csv << check << ',' << detail << ',' << (pass ? "true" : "false") << '\n';
    };

    for (const std::string& check : checks) {
        if (check == "oracle") {
            const int upto = std::min(max_n, 9);
            for (int n = 1; n <= upto; ++n) {
                bool ok = true;
                int bad_k = -1;
                for (int k = 0; k <= std::max(table.Q(n).t_degree(), n) && ok; ++k) {
                    if (table.Q(n).t_coeff_poly(k) != cp::oracle_Q(n, k) ||
                        table.Qplus(n).t_coeff_poly(k) != cp::oracle_Qplus(n, k)) {
                        ok = false;
                        bad_k = k;
                    }
                }
                record("oracle", "n=" + std::to_string(n) +
                                     (ok ? "" : " first mismatch at k=" + std::to_string(bad_k)),
                       ok);
            }
        } else if (check == "logconcave") {
            bool ok = true;
            std::string witness = "3 <= n <= " + std::to_string(max_n);
            for (const cp::LCReport& r : cp::verify_m0n_conjecture(table, max_n))
                if (!r.ok()) {
                    ok = false;
                    witness = r.subject + " " + r.notion;
                    break;
                }
            record("logconcave", witness, ok);
        } else if (check == "exponential") {
            const cp::ExpIdentityReport rep = cp::exp_identity_check(table);
            record("exponential",
                   rep.ok ? "through q^" + std::to_string(max_n)
                          : "first failure at q^" + std::to_string(rep.first_fail_q),
                   rep.ok);
        } else if (check == "wallcrossing") {
            for (int n = 3; n <= max_n; ++n)
                record("wallcrossing", "n=" + std::to_string(n), cp::wallcrossing_holds(table, n));
        } else if (check == "betti") {
            for (int n = 3; n <= max_n; ++n) {
                try {
                    const auto bp = cp::betti_numbers(table, n, cp::Side::P);
                    const auto bq = cp::betti_numbers(table, n, cp::Side::Q);
                    std::string detail = "n=" + std::to_string(n) + " Q:";
                    for (const cp::Int& b : bq) detail += " " + b.str();
                    (void)bp;
                    record("betti", detail, true);
                } catch (const std::logic_error& e) {
                    record("betti", "n=" + std::to_string(n) + " " + e.what(), false);
                }
            }
        }
    }

    json payload = {{"command", "verify"},
                    {"params", {{"max_n", max_n}, {"checks", checks}}},
                    {"results", results}};
    out.write(format_output(payload, format, text.str(), csv.str()));
    return all_pass ? kExitOk : kExitFail;
}

// ----------------------------------------------------------- examples ----

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

cp::SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open graph file: " + path);
    int n = 0;
    if (!(is >> n) || n < 0) throw std::invalid_argument("graph file: bad vertex count");
    std::vector<std::pair<int, int>> edges;
    int a = 0, b = 0;
    while (is >> a >> b) {
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw std::invalid_argument("graph file: bad edge");
        edges.emplace_back(a - 1, b - 1);
    }
    if (!is.eof()) throw std::invalid_argument("graph file: trailing garbage");
    return cp::SimpleGraph::from_edges(n, std::move(edges));
}

int cmd_examples(const std::string& family, const std::string& betti_list, int n,
                 const std::string& h_list, const std::string& graph_file,
                 const std::string& format, const OutputTarget& out) {
    json payload = {{"command", "examples"}, {"params", {{"family", family}}}};
    std::ostringstream text, csv;
    json result;

    if (family == "nfold") {
        if (betti_list.empty() || n < 0) throw std::invalid_argument("nfold needs --betti and --n");
        cp::BettiProfile profile;
        for (int v : parse_int_list(betti_list)) profile.b.emplace_back(v);
        payload["params"]["betti"] = betti_list;
        payload["params"]["n"] = n;
        const cp::BivarPoly f = cp::nfold_char_poly(profile, n);
        result["char_poly"] = cp::bivar_to_json(f);
        result["lc"] = bivar_lc_to_json(cp::check_bivariate(f, "nfold"));
        text << "S = " << f.to_string() << "\n";
        csv << "t,m,num,den\n";
        for (const auto& [key, c] : f.terms)
            csv << key.first << ',' << key.second << ',' << cp::rat_num(c).str() << ','
                << cp::rat_den(c).str() << '\n';
    } else if (family == "git") {
        if (n < 3) throw std::invalid_argument("git needs odd --n >= 3");
        payload["params"]["n"] = n;
        const cp::BivarPoly f = cp::git_char_poly(n);
        result["char_poly"] = cp::bivar_to_json(f);
        result["lc"] = bivar_lc_to_json(cp::check_bivariate(f, "git"));
        text << "S = " << f.to_string() << "\n";
        csv << "t,m,num,den\n";
        for (const auto& [key, c] : f.terms)
            csv << key.first << ',' << key.second << ',' << cp::rat_num(c).str() << ','
                << cp::rat_den(c).str() << '\n';
    } else if (family == "hessenberg") {
        if (h_list.empty()) throw std::invalid_argument("hessenberg needs --h");
        const cp::HessenbergFunction h{parse_int_list(h_list)};
        h.validate();
        payload["params"]["h"] = h_list;
        const cp::UniPoly t1 = cp::hessenberg_char_poly_t1(h);
        const cp::UniPoly chrom = cp::hessenberg_chromatic(h);
        const cp::UniPoly inv = cp::hessenberg_invariant_poincare(h);
        const cp::UniPoly lin = cp::hessenberg_linear_coeff(h);
        const bool chromatic_check =
            cp::chromatic_polynomial(cp::incomparability_graph(h)) == chrom;
        result["value_at_t1"] = cp::unipoly_m_to_json(t1);
        result["chromatic"] = cp::unipoly_m_to_json(chrom);
        result["invariant_poincare"] = cp::unipoly_t_to_json(inv);
        result["linear_coeff"] = cp::unipoly_t_to_json(lin);
        result["chromatic_check"] = chromatic_check;
        text << "value at t=1    = " << t1.to_string("m") << "\n";
        text << "chromatic       = " << chrom.to_string("m") << "\n";
        text << "invariants      = " << inv.to_string("t") << "\n";
        text << "linear coeff    = " << lin.to_string("t") << "\n";
        text << "chromatic check = " << (chromatic_check ? "pass" : "fail") << "\n";
        csv << "quantity,value\n";
        csv << "value_at_t1," << t1.to_string("m") << '\n';
        csv << "chromatic," << chrom.to_string("m") << '\n';
        if (!chromatic_check) {
            payload["results"] = json::array({result});
            out.write(format_output(payload, format, text.str(), csv.str()));
            return kExitFail;
        }
    } else if (family == "graph") {
        if (graph_file.empty()) throw std::invalid_argument("graph needs --file");
        const cp::SimpleGraph g = read_graph_file(graph_file);
        payload["params"]["file"] = graph_file;
        const cp::UniPoly chrom = cp::chromatic_polynomial(g);
        result["chromatic"] = cp::unipoly_m_to_json(chrom);
        result["n"] = g.n;
        result["edges"] = static_cast<int>(g.edges.size());
        text << "chromatic = " << chrom.to_string("m") << "\n";
        csv << "quantity,value\n";
        csv << "chromatic," << chrom.to_string("m") << '\n';
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }

    payload["results"] = json::array({result});
    out.write(format_output(payload, format, text.str(), csv.str()));
    return kExitOk;
}

// -------------------------------------------------------------- asymp ----

json trend_to_json(const cp::TrendReport& rep) {
    json rows = json::array();
    for (const cp::TrendRow& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"value", cp::rat_to_json(r.value)},
                        {"prediction", cp::rat_to_json(r.prediction)},
                        {"ratio", cp::rat_to_json(r.ratio)},
                        {"ratio_decimal", cp::rat_to_decimal(r.ratio)}});
    return {{"kind", rep.kind},
            {"side", rep.side == cp::Side::Q ? "Q" : "P"},
            {"k", rep.k},
            {"param", rep.param},
            {"limit", cp::rat_to_json(rep.limit)},
            {"limit_decimal", cp::rat_to_decimal(rep.limit)},
            {"rows", rows}};
}

int cmd_asymp(const std::string& mode, int k, int m0, int j, int max_n, int threads,
              const std::string& format, const OutputTarget& out) {
    if (mode != "value" && mode != "coeff")
        throw std::invalid_argument("mode must be value or coeff");
    if (k < 0 || max_n < k + 3) throw std::invalid_argument("need k >= 0 and max-n >= k+3");

    const cp::M0nTable table = cp::compute_m0n_table(max_n, threads);
    std::vector<cp::TrendReport> reports;
    for (cp::Side side : {cp::Side::Q, cp::Side::P})
        reports.push_back(mode == "value" ? cp::asymptotic_value_report(table, side, k, m0)
                                          : cp::asymptotic_coeff_report(table, side, k, j));

    json results = json::array();
    std::ostringstream text, csv;
    csv << "side,n,k," << (mode == "value" ? "m0" : "j") << ",value,prediction,ratio\n";
    for (const cp::TrendReport& rep : reports) {
        results.push_back(trend_to_json(rep));
        const std::string side = rep.side == cp::Side::Q ? "Q" : "P";
        text << "side " << side << ", limit = " << cp::rat_to_decimal(rep.limit, 6) << "\n";
        for (const cp::TrendRow& r : rep.rows) {
            text << "  n=" << r.n << "  ratio=" << cp::rat_to_decimal(r.ratio, 6) << "\n";
            csv << side << ',' << r.n << ',' << rep.k << ',' << rep.param << ','
                << cp::rat_to_decimal(r.value) << ',' << cp::rat_to_decimal(r.prediction) << ','
                << cp::rat_to_decimal(r.ratio) << '\n';
        }
    }

    json payload = {{"command", "asymp"},
                    {"params",
                     {{"mode", mode},
                      {"k", k},
                      {mode == "value" ? "m0" : "j", mode == "value" ? m0 : j},
                      {"max_n", max_n}}},
                    {"results", results}};
    out.write(format_output(payload, format, text.str(), csv.str()));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic polynomials of symmetric functions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    int threads = 0;
    app.add_option("--format", format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "Output file (default: stdout)");
    app.add_option("--threads", threads, "Worker threads (0 = all available)")
        ->check(CLI::Range(0, 1024));

    auto* m0n = app.add_subcommand("m0n", "Compute the recursive bivariate tables");
    m0n->fallthrough();  // global flags may follow the subcommand
    int m0n_max_n = 0;
    m0n->add_option("--max-n", m0n_max_n, "Largest n to compute")->required();

    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->fallthrough();
    int verify_max_n = 0;
    std::string checks_csv;
    verify->add_option("--max-n", verify_max_n, "Largest n to verify")->required();
    verify->add_option("--checks", checks_csv,
                       "Comma-separated subset of oracle,logconcave,exponential,wallcrossing,betti");

    auto* examples = app.add_subcommand("examples", "Evaluate closed-form example families");
    examples->fallthrough();
    // long-only help here: the short -h would collide with the --h option below
    examples->set_help_flag("--help", "Print this help message and exit");
    std::string family, betti_list, h_list, graph_file;
    int ex_n = -1;
    examples->add_option("family", family, "nfold, git, hessenberg or graph")->required();
    examples->add_option("--betti", betti_list, "Betti numbers b0,b1,... (nfold)");
    examples->add_option("--n", ex_n, "Number of factors / parameter n");
    examples->add_option("--h", h_list, "Hessenberg values h(1),...,h(n)");
    examples->add_option("--file", graph_file, "Graph file: first line n, then 1-indexed 'i j' lines");

    auto* asymp = app.add_subcommand("asymp", "Asymptotic trend tables");
    asymp->fallthrough();
    std::string mode;
    int as_k = 0, as_m0 = 1, as_j = 0, as_max_n = 0;
    asymp->add_option("--mode", mode, "value or coeff")->required();
    asymp->add_option("--k", as_k, "Cohomological degree k")->required();
    asymp->add_option("--m0", as_m0, "Evaluation point (value mode)");
    asymp->add_option("--j", as_j, "Coefficient offset (coeff mode)");
    asymp->add_option("--max-n", as_max_n, "Largest n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const OutputTarget out{out_path};
    try {
        if (app.got_subcommand(m0n)) {
            if (m0n_max_n < 3) {
                std::cerr << "error: --max-n must be >= 3\n";
                return kExitUsage;
            }
            return cmd_m0n(m0n_max_n, threads, format, out);
        }
        if (app.got_subcommand(verify)) {
            if (verify_max_n < 3) {
                std::cerr << "error: --max-n must be >= 3\n";
                return kExitUsage;
            }
            std::vector<std::string> checks;
            if (!checks_csv.empty()) {
                std::stringstream ss(checks_csv);
                std::string item;
                while (std::getline(ss, item, ',')) checks.push_back(item);
            }
            return cmd_verify(verify_max_n, threads, checks, format, out);
        }
        if (app.got_subcommand(examples))
            return cmd_examples(family, betti_list, ex_n, h_list, graph_file, format, out);
        if (app.got_subcommand(asymp))
            return cmd_asymp(mode, as_k, as_m0, as_j, as_max_n, threads, format, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
