// Command-line front end: dump multiplication formulas and root polynomials,
// verify single prime pairs, and sweep ranges, with CSV/JSON record output.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "tanrec/tanrec.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;

int run_mulpoly(std::int64_t q, const std::string& form, bool as_json) {
    if (form == "eisenstein") {
        const tanrec::TangentForm f = tanrec::eisenstein_form(q);
        if (as_json) {
            std::cout << "{\"q\":" << f.q << ",\"sigma\":" << f.sigma
                      << ",\"phi\":" << tanrec::poly_to_json(f.phi, "u")
                      << ",\"psi\":" << tanrec::poly_to_json(f.psi, "u") << "}\n";
        } else {
            std::cout << "q=" << f.q << " sigma=" << f.sigma
                      << " phi=" << f.phi.to_string("u")
                      << " psi=" << f.psi.to_string("u") << "\n";
        }
    } else {
        const tanrec::TanRational t = tanrec::tan_multiple(q);
        if (as_json) {
            std::cout << "{\"q\":" << t.q
                      << ",\"num\":" << tanrec::poly_to_json(t.num, "t")
                      << ",\"den\":" << tanrec::poly_to_json(t.den, "t") << "}\n";
        } else {
            std::cout << "N = " << t.num.to_string("t")
                      << " ; D = " << t.den.to_string("t") << "\n";
        }
    }
    return kExitOk;
}

int run_rootpoly(std::int64_t p, bool as_json) {
    const tanrec::RootPolynomial rp = tanrec::root_poly(p);
    const tanrec::Int product = tanrec::product_identity_check(p);
    if (as_json) {
        std::cout << "{\"p\":" << rp.p
                  << ",\"F\":" << tanrec::poly_to_json(rp.F, "Z")
                  << ",\"G\":" << tanrec::poly_to_json(rp.G, "u")
                  << ",\"product\":\"" << product.str() << "\"}\n";
    } else {
        std::cout << "F = " << rp.F.to_string("Z")
                  << " ; G = " << rp.G.to_string("u")
                  << " ; product = " << product << "\n";
    }
    return kExitOk;
}

int run_verify(std::int64_t p, std::int64_t q, bool as_json) {
    const tanrec::ReciprocityReport rep = tanrec::verify_pair(p, q);
    std::cout << (as_json ? tanrec::to_json_line(rep) : tanrec::to_key_value_line(rep)) << "\n";
    return (rep.reciprocity_ok && rep.symbols_agree()) ? kExitOk : kExitCheckFailed;
}

int run_sweep(std::int64_t p_max, const std::string& fmt, const std::string& out_path,
              unsigned threads) {
    const std::vector<tanrec::ReciprocityReport> reports = tanrec::sweep(p_max, threads);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw tanrec::invalid_input("sweep: cannot open output file " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (fmt == "csv") out << tanrec::kCsvHeader << "\n";
    bool all_ok = true;
    for (const auto& rep : reports) {
        out << (fmt == "csv" ? tanrec::to_csv_row(rep) : tanrec::to_json_line(rep)) << "\n";
        all_ok = all_ok && rep.reciprocity_ok && rep.symbols_agree();
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the tangent-function proof of quadratic reciprocity"};
    app.require_subcommand(1);

    std::int64_t mul_q = 0;
    std::string mul_form = "raw";
    bool mul_json = false;
    auto* mulpoly = app.add_subcommand("mulpoly", "Print the tan(qx) multiplication formula");
    mulpoly->add_option("q", mul_q, "odd multiplier")->required();
    mulpoly->add_option("--form", mul_form, "raw|eisenstein")
        ->check(CLI::IsMember({"raw", "eisenstein"}));
    mulpoly->add_flag("--json", mul_json, "machine-readable output");

    std::int64_t root_p = 0;
    bool root_json = false;
    auto* rootpoly = app.add_subcommand("rootpoly", "Print the tangent root polynomials of p");
    rootpoly->add_option("p", root_p, "odd prime")->required();
    rootpoly->add_flag("--json", root_json, "machine-readable output");

    std::int64_t ver_p = 0;
    std::int64_t ver_q = 0;
    bool ver_json = false;
    auto* verify = app.add_subcommand("verify", "Verify reciprocity for one prime pair");
    verify->add_option("p", ver_p, "odd prime")->required();
    verify->add_option("q", ver_q, "odd prime distinct from p")->required();
    verify->add_flag("--json", ver_json, "machine-readable output");

    std::int64_t sweep_max = 0;
    std::string sweep_fmt = "csv";
    std::string sweep_out;
    unsigned sweep_threads = 1;
    auto* sweep = app.add_subcommand("sweep", "Verify all prime pairs up to a bound");
    sweep->add_option("--pmax", sweep_max, "largest prime to include (>= 5)")->required();
    sweep->add_option("--format", sweep_fmt, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sweep_out, "write records to this file instead of stdout");
    sweep->add_option("--threads", sweep_threads, "worker threads (output is identical)");

    try {
        app.parse(argc, argv);
        if (*mulpoly) return run_mulpoly(mul_q, mul_form, mul_json);
        if (*rootpoly) return run_rootpoly(root_p, root_json);
        if (*verify) return run_verify(ver_p, ver_q, ver_json);
        return run_sweep(sweep_max, sweep_fmt, sweep_out, sweep_threads);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    } catch (const tanrec::internal_inconsistency& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const tanrec::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
