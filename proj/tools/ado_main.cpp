// Command-line front end: compute the renormalized invariant of colored braid
// closures, print S'/d tables, and run the verification suite.
//
// Exit codes: 0 success, 1 input error, 2 cut-value disagreement, 3 failed
// verification check.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ado/invariant.hpp"
#include "ado/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ado;

namespace {

enum class Format { Json, Csv, Plain };

struct Common {
    int N = 2;
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;
    std::string format = "json";

    Format fmt() const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        if (format == "plain") return Format::Plain;
        throw ParseError("unknown format '" + format + "' (expected json|csv|plain)");
    }
    RootContext ctx() const { return RootContext::make(N, eps_abs, eps_rel); }
};

double parse_double(std::string_view s, const char* what) {
    std::string_view body = s;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);  // from_chars rejects '+'
    double v = 0.0;
    const auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (body.empty() || ec != std::errc{} || p != body.data() + body.size() || !std::isfinite(v))
        throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

// Complex literals as "a+bi" with optional parts: "1.5", "-0.3i", "0.5+0i",
// "1e-2-0.4i", "i". Whitespace-free.
Cplx parse_complex(std::string_view s) {
    std::string t;
    for (const char c : s)
        if (!std::isspace((unsigned char)c)) t.push_back(c);
    if (t.empty()) throw ParseError("empty complex literal");
    if (t.back() != 'i' && t.back() != 'I') return Cplx(parse_double(t, "number"), 0.0);
    t.pop_back();
    // split the imaginary tail at the last sign not part of an exponent
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](std::string_view u) {
        if (u.empty() || u == "+") return 1.0;
        if (u == "-") return -1.0;
        return parse_double(u, "imaginary part");
    };
    if (split == std::string::npos) return Cplx(0.0, imag_of(t));
    return Cplx(parse_double(t.substr(0, split), "real part"), imag_of(t.substr(split)));
}

std::vector<Cplx> parse_complex_list(const std::string& s) {
    std::vector<Cplx> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        out.push_back(parse_complex(std::string_view(s).substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        out.push_back(int(parse_double(std::string_view(s).substr(pos, comma - pos), "integer")));
        pos = comma + 1;
    }
    return out;
}

json cjson(Cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cplain(Cplx z) { return num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i"; }

int cmd_invariant(const Common& common, const std::string& braid_text,
                  const std::string& colors_text, bool mirror) {
    const RootContext ctx = common.ctx();
    BraidWord braid = parse_braid(braid_text);
    if (mirror)
        for (int& g : braid.word) g = -g;
    const ColoredLink link = colored_link(braid, parse_complex_list(colors_text));
    const InvariantReport rep = f_prime(ctx, link);

    double scale = 0.0;
    for (const auto& e : rep.per_cut) scale = std::max(scale, std::abs(e.product));
    const double tolerance = 10.0 * ctx.tol(scale);

    switch (common.fmt()) {
        case Format::Json: {
            json j;
            j["N"] = ctx.N;
            j["braid"] = braid_text;
            j["components"] = json::array();
            for (size_t c = 0; c < link.components.size(); ++c) {
                json strands = json::array();
                for (const int s : link.components[c]) strands.push_back(s + 1);
                j["components"].push_back(
                    json{{"strands", strands}, {"writhe", link.framing[c]}});
            }
            j["colors"] = json::array();
            for (const Cplx c : link.colors) j["colors"].push_back(cjson(c));
            j["value"] = cjson(rep.value);
            j["per_cut"] = json::array();
            for (const auto& e : rep.per_cut)
                j["per_cut"].push_back(json{{"component", e.component + 1},
                                            {"strand", e.strand + 1},
                                            {"tangle", cjson(e.tangle_scalar)},
                                            {"mdim", cjson(e.mdim)},
                                            {"product", cjson(e.product)}});
            j["residuals"] = json{{"max_disagreement", rep.max_disagreement},
                                  {"tolerance", tolerance}};
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "kind,component,strand,tangle_re,tangle_im,mdim_re,mdim_im,"
                         "product_re,product_im\n";
            for (const auto& e : rep.per_cut)
                std::cout << "cut," << e.component + 1 << ',' << e.strand + 1 << ','
                          << num(e.tangle_scalar.real()) << ',' << num(e.tangle_scalar.imag())
                          << ',' << num(e.mdim.real()) << ',' << num(e.mdim.imag()) << ','
                          << num(e.product.real()) << ',' << num(e.product.imag()) << "\n";
            std::cout << "value,,,,,,," << num(rep.value.real()) << ',' << num(rep.value.imag())
                      << "\n";
            break;
        }
        case Format::Plain: {
            std::cout << "N = " << ctx.N << ", braid \"" << braid_text << "\"\n";
            for (size_t c = 0; c < link.components.size(); ++c) {
                std::cout << "component " << c + 1 << " (strands";
                for (const int s : link.components[c]) std::cout << ' ' << s + 1;
                std::cout << ", writhe " << link.framing[c]
                          << ") colored " << cplain(link.colors[c]) << "\n";
            }
            for (const auto& e : rep.per_cut)
                std::cout << "cut strand " << e.strand + 1 << ": <T> = "
                          << cplain(e.tangle_scalar) << ", d = " << cplain(e.mdim)
                          << ", d<T> = " << cplain(e.product) << "\n";
            std::cout << "F' = " << cplain(rep.value)
                      << "  (max disagreement " << num(rep.max_disagreement) << ")\n";
            break;
        }
    }
    return 0;
}

int cmd_verify(const Common& common, const std::string& n_list, std::uint64_t seed,
               bool inject_failure) {
    verify::VerifyConfig cfg;
    cfg.Ns = parse_int_list(n_list);
    if (cfg.Ns.empty()) throw ParseError("empty N list");
    for (const int n : cfg.Ns) RootContext::make(n);  // validates each N up front
    cfg.params.eps_abs = common.eps_abs;
    cfg.params.eps_rel = common.eps_rel;
    cfg.params.seed = seed;
    cfg.inject_failure = inject_failure;
    const auto results = verify::run_verification(cfg);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;

    switch (common.fmt()) {
        case Format::Json: {
            json j;
            j["seed"] = seed;
            j["N"] = cfg.Ns;
            j["checks"] = json::array();
            for (const auto& r : results)
                j["checks"].push_back(json{{"name", r.name},
                                           {"residual", r.residual},
                                           {"threshold", r.threshold},
                                           {"passed", r.passed},
                                           {"detail", r.detail}});
            j["all_passed"] = all;
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "name,residual,threshold,passed\n";
            for (const auto& r : results)
                std::cout << r.name << ',' << num(r.residual) << ',' << num(r.threshold) << ','
                          << (r.passed ? "true" : "false") << "\n";
            break;
        }
        case Format::Plain: {
            std::cout << "seed " << seed << ", N list:";
            for (const int n : cfg.Ns) std::cout << ' ' << n;
            std::cout << "\n";
            for (const auto& r : results)
                std::printf("%-28s %-5s residual %.3e (threshold %.0e)  %s\n", r.name.c_str(),
                            r.passed ? "ok" : "FAIL", r.residual, r.threshold, r.detail.c_str());
            std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
            break;
        }
    }
    return all ? 0 : 3;
}

struct TableRow {
    Cplx lambda, lambda_prime;
    bool typical;
    Cplx sprime, mdim;
};

int cmd_table(const Common& common, const std::string& lambdas, const std::string& range) {
    const RootContext ctx = common.ctx();
    std::vector<Cplx> grid;
    if (!lambdas.empty())
        grid = parse_complex_list(lambdas);
    if (!range.empty()) {
        // "start:stop:step", inclusive real grid
        const size_t c1 = range.find(':');
        const size_t c2 = range.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("range must be start:stop:step");
        const double start = parse_double(std::string_view(range).substr(0, c1), "range start");
        const double stop = parse_double(std::string_view(range).substr(c1 + 1, c2 - c1 - 1),
                                         "range stop");
        const double step = parse_double(std::string_view(range).substr(c2 + 1), "range step");
        if (step <= 0) throw ParseError("range step must be positive");
        for (long i = 0;; ++i) {
            const double x = start + double(i) * step;
            if (x > stop + 1e-12) break;
            grid.emplace_back(x, 0.0);
        }
    }
    if (grid.empty()) throw ParseError("table needs --lambdas or --range");
    if (grid.size() > 1000) throw ParseError("table grid is limited to 1000 weights");

    std::vector<TableRow> rows;
    for (const Cplx la : grid)
        for (const Cplx lp : grid) {
            TableRow r{la, lp, is_typical(ctx, la), 0.0, 0.0};
            if (r.typical) {
                r.sprime = s_prime_formula(ctx, la, lp);
                r.mdim = modified_dim(ctx, la);
            }
            rows.push_back(r);
        }

    switch (common.fmt()) {
        case Format::Json: {
            json j;
            j["N"] = ctx.N;
            j["rows"] = json::array();
            for (const auto& r : rows) {
                json row;
                row["lambda"] = cjson(r.lambda);
                row["lambda_prime"] = cjson(r.lambda_prime);
                row["status"] = r.typical ? "ok" : "atypical";
                row["sprime"] = r.typical ? cjson(r.sprime) : json(nullptr);
                row["mdim"] = r.typical ? cjson(r.mdim) : json(nullptr);
                j["rows"].push_back(row);
            }
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "lambda_re,lambda_im,lambda_prime_re,lambda_prime_im,status,"
                         "sprime_re,sprime_im,mdim_re,mdim_im\n";
            for (const auto& r : rows) {
                std::cout << num(r.lambda.real()) << ',' << num(r.lambda.imag()) << ','
                          << num(r.lambda_prime.real()) << ',' << num(r.lambda_prime.imag()) << ',';
                if (r.typical)
                    std::cout << "ok," << num(r.sprime.real()) << ',' << num(r.sprime.imag()) << ','
                              << num(r.mdim.real()) << ',' << num(r.mdim.imag()) << "\n";
                else
                    std::cout << "atypical,,,,\n";
            }
            break;
        }
        case Format::Plain: {
            for (const auto& r : rows) {
                std::cout << "lambda " << cplain(r.lambda) << ", lambda' "
                          << cplain(r.lambda_prime) << ": ";
                if (r.typical)
                    std::cout << "S' = " << cplain(r.sprime) << ", d = " << cplain(r.mdim) << "\n";
                else
                    std::cout << "atypical\n";
            }
            break;
        }
    }
    return 0;
}

int cmd_scalar(const Common& common, const char* name, Cplx value, json extra) {
    switch (common.fmt()) {
        case Format::Json: {
            json j;
            j["N"] = common.N;
            for (auto& [k, v] : extra.items()) j[k] = v;
            j[name] = cjson(value);
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << name << "_re," << name << "_im\n"
                      << num(value.real()) << ',' << num(value.imag()) << "\n";
            break;
        case Format::Plain:
            std::cout << name << " = " << cplain(value) << "\n";
            break;
    }
    return 0;
}

int report_error(const Common& common, const Error& e) {
    bool as_json = false;
    try {
        as_json = common.fmt() == Format::Json;
    } catch (const Error&) {
        as_json = true;
    }
    if (as_json) {
        json j;
        j["error"] = json{{"type", e.kind()}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    }
    if (std::string(e.kind()) == "DisagreementError") return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"renormalized quantum invariants of colored braid closures at q = e^{i pi/N}"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the common options after the subcommand name

    Common common;
    app.add_option("--eps-abs", common.eps_abs, "absolute tolerance")
        ->envname("ADO_EPS_ABS")
        ->capture_default_str();
    app.add_option("--eps-rel", common.eps_rel, "relative tolerance")->capture_default_str();
    app.add_option("--format", common.format, "output format: json|csv|plain")
        ->capture_default_str();

    auto* inv = app.add_subcommand("invariant", "compute F' of a colored braid closure");
    std::string braid_text, colors_text;
    bool mirror = false;
    inv->add_option("--N", common.N, "root order (q = e^{i pi/N})")->required();
    inv->add_option("--braid", braid_text, "braid word, e.g. \"1 1 1\" or \"3: 1 -2\"")->required();
    inv->add_option("--colors", colors_text,
                    "one complex highest weight per component (\"a+bi,...\"), ordered by "
                    "smallest strand index")
        ->required();
    inv->add_flag("--mirror", mirror, "evaluate the mirror image (flip all crossing signs)");

    auto* ver = app.add_subcommand("verify", "run the structural verification suite");
    std::string n_list = "2,3";
    std::uint64_t seed = 42;
    bool inject_failure = false;
    ver->add_option("--N", n_list, "comma-separated list of root orders")->capture_default_str();
    ver->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
    ver->add_flag("--inject-failure", inject_failure)->group("");  // test hook, hidden

    auto* tab = app.add_subcommand("table", "tabulate S'(lambda, lambda') and d(lambda)");
    std::string lambdas, range;
    tab->add_option("--N", common.N, "root order")->required();
    tab->add_option("--lambdas", lambdas, "explicit comma-separated weights");
    tab->add_option("--range", range, "real grid start:stop:step");

    auto* spr = app.add_subcommand("sprime", "S'(lambda, lambda'), the open Hopf pairing");
    std::string lam_text, lamp_text;
    spr->add_option("--N", common.N, "root order")->required();
    spr->add_option("--lambda", lam_text, "loop color")->required();
    spr->add_option("--lambda-prime", lamp_text, "open strand color")->required();

    auto* mdm = app.add_subcommand("mdim", "modified quantum dimension d(lambda)");
    mdm->add_option("--N", common.N, "root order")->required();
    mdm->add_option("--lambda", lam_text, "highest weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // exit 1 on any input error, 0 for --help
    }

    try {
        if (inv->parsed()) return cmd_invariant(common, braid_text, colors_text, mirror);
        if (ver->parsed()) return cmd_verify(common, n_list, seed, inject_failure);
        if (tab->parsed()) return cmd_table(common, lambdas, range);
        if (spr->parsed()) {
            const RootContext ctx = common.ctx();
            const Cplx la = parse_complex(lam_text), lp = parse_complex(lamp_text);
            return cmd_scalar(common, "sprime", s_prime_formula(ctx, la, lp),
                              json{{"lambda", cjson(la)}, {"lambda_prime", cjson(lp)}});
        }
        if (mdm->parsed()) {
            const RootContext ctx = common.ctx();
            const Cplx la = parse_complex(lam_text);
            return cmd_scalar(common, "mdim", modified_dim(ctx, la),
                              json{{"lambda", cjson(la)}});
        }
    } catch (const Error& e) {
        return report_error(common, e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
