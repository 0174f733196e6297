// Command-line front end: path enumeration, Catalan polynomials, the
// symmetric-function coefficients they match, and the verification suites.

#include <qtcat/creation.hpp>
#include <qtcat/dyck.hpp>
#include <qtcat/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace qtcat;
using nlohmann::json;

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Composition(std::move(parts));
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

struct EvalPoint {
    BigRat q{1}, t{1}, z{1}, w{1};
};

EvalPoint parse_eval(const std::string& text) {
    EvalPoint pt;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--eval expects name=value pairs");
        std::string name = tok.substr(0, eq);
        BigRat value(tok.substr(eq + 1));
        if (name == "q") pt.q = value;
        else if (name == "t") pt.t = value;
        else if (name == "z") pt.z = value;
        else if (name == "w") pt.w = value;
        else throw CLI::ValidationError("--eval: unknown variable " + name);
    }
    return pt;
}

std::string decoration_text(const DecoratedPath& dp) {
    std::ostringstream os;
    const auto& a = dp.path().area_seq();
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << "|";
    bool first = true;
    for (int i = 0; i < dp.path().rows(); ++i)
        if (dp.is_decorated(i)) {
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
    return os.str();
}

int emit_report(const Report& report, const std::string& format) {
    if (format == "json")
        std::cout << report.to_json() << "\n";
    else if (format == "csv")
        std::cout << report.to_csv();
    else
        std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q,t-Catalan engine: decorated Dyck paths vs. Macdonald operators"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cache_dir;
    int jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "directory for Macdonald table cache");
    app.add_option("--jobs", jobs, "worker threads for verification suites")
        ->check(CLI::PositiveNumber);

    auto* paths_cmd = app.add_subcommand("paths", "enumerate Dyck paths by area sequence");
    int paths_n = 0;
    bool decorated = false;
    paths_cmd->add_option("--n", paths_n, "number of vertical steps")->required();
    paths_cmd->add_flag("--decorated", decorated, "list decorated paths");

    auto* cat_cmd = app.add_subcommand("cat", "four-variable Catalan polynomial");
    int cat_n = 0;
    std::string method = "decorated";
    std::string eval_spec;
    cat_cmd->add_option("--n", cat_n, "path size")->required();
    cat_cmd->add_option("--method", method, "decorated | product")
        ->check(CLI::IsMember({"decorated", "product"}));
    cat_cmd->add_option("--eval", eval_spec, "evaluate, e.g. q=1,t=1,z=1,w=1");

    auto* catrise_cmd =
        app.add_subcommand("catrise", "generating polynomial for one rise-touch composition");
    std::string alpha_text;
    int cr_k = 0, cr_ell = 0;
    catrise_cmd->add_option("--alpha", alpha_text, "composition, e.g. 1,1")->required();
    catrise_cmd->add_option("--k", cr_k, "decorated peaks")->required();
    catrise_cmd->add_option("--ell", cr_ell, "decorated double rises")->required();

    auto* coeff_cmd =
        app.add_subcommand("coeff", "hook Schur coefficient of Delta_{h_ell} nabla C_alpha");
    std::string coeff_alpha;
    int co_k = 0, co_ell = 0;
    coeff_cmd->add_option("--alpha", coeff_alpha, "composition, e.g. 1,1")->required();
    coeff_cmd->add_option("--k", co_k, "hook parameter")->required();
    coeff_cmd->add_option("--ell", co_ell, "Delta index")->required();

    auto* htilde_cmd = app.add_subcommand("htilde", "modified Macdonald polynomial, Schur expansion");
    std::string mu_text;
    htilde_cmd->add_option("--mu", mu_text, "partition, e.g. 2,1")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int max_n = -1;
    verify_cmd->add_option("suite", suite, "main | comb | sf | macdonald")
        ->required()
        ->check(CLI::IsMember({"main", "comb", "sf", "macdonald"}));
    verify_cmd->add_option("--max-n", max_n, "size bound (ignored by sf)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (!cache_dir.empty()) set_htilde_cache_dir(cache_dir);

        if (*paths_cmd) {
            json arr = json::array();
            if (!decorated) {
                DyckPath::enumerate(paths_n, [&](const DyckPath& p) {
                    if (format == "json")
                        arr.push_back(p.area_seq());
                    else {
                        std::ostringstream os;
                        for (int i = 0; i < p.rows(); ++i)
                            os << (i ? "," : "") << p.area_seq()[i];
                        std::cout << os.str() << "\n";
                    }
                });
            } else {
                DecoratedPath::enumerate_all(paths_n, [&](const DecoratedPath& dp) {
                    if (format == "json") {
                        json row;
                        row["area"] = dp.path().area_seq();
                        json dec = json::array();
                        for (int i = 0; i < dp.path().rows(); ++i)
                            if (dp.is_decorated(i)) dec.push_back(i + 1);
                        row["decorated"] = dec;
                        arr.push_back(row);
                    } else {
                        std::cout << decoration_text(dp) << "\n";
                    }
                });
            }
            if (format == "json") std::cout << arr.dump() << "\n";
            return 0;
        }

        if (*cat_cmd) {
            MultiPoly poly = cat_poly(
                cat_n, method == "product" ? CatMethod::ProductForm : CatMethod::DecoratedSum);
            if (!eval_spec.empty()) {
                EvalPoint pt = parse_eval(eval_spec);
                std::cout << poly.eval(pt.q, pt.t, pt.z, pt.w).str() << "\n";
            } else if (format == "json") {
                std::cout << poly.to_json() << "\n";
            } else {
                std::cout << poly.str() << "\n";
            }
            return 0;
        }

        if (*catrise_cmd) {
            MultiPoly poly = cat_rise(parse_composition(alpha_text), cr_k, cr_ell);
            std::cout << (format == "json" ? poly.to_json() : poly.str()) << "\n";
            return 0;
        }

        if (*coeff_cmd) {
            Composition alpha = parse_composition(coeff_alpha);
            if (alpha.empty() || co_k < 0 || co_k > alpha.size() - 1)
                throw CLI::ValidationError("coeff: need nonempty alpha and 0 <= k <= |alpha|-1");
            RatQT value = hook_coefficient(delta_h_nabla(co_ell, c_alpha(alpha)), co_k,
                                           alpha.size());
            if (format == "json") {
                json j;
                j["value"] = value.str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << value.str() << "\n";
            }
            return 0;
        }

        if (*htilde_cmd) {
            Partition mu = parse_partition(mu_text);
            const HtildeTable& t = htilde_table(mu.size());
            const SymFunc& col = t.columns_s[t.index.at(mu)];
            if (format == "json") {
                json j;
                for (const auto& [lam, c] : col.coeffs()) j[lam.str()] = c.str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << col.str() << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            VerifyOptions opt;
            opt.jobs = jobs;
            Report report;
            if (suite == "main")
                report = verify_main(max_n > 0 ? max_n : 4, opt);
            else if (suite == "comb")
                report = verify_comb(max_n > 0 ? max_n : 6, opt);
            else if (suite == "sf")
                report = verify_sf(opt);
            else
                report = verify_macdonald(max_n > 0 ? max_n : 4, opt);
            return emit_report(report, format);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
