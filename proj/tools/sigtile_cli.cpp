// sigtile: exact signed-tiling decisions for ribbon L tile families.
//
// Subcommands:
//   verify-basis   check the reference Groebner basis and its identity suite
//   decide         decide signed tileability of one region (JSON)
//   scan           compare decisions with the rectangle closed form (TSV)
//   oracle         brute-force placement solver cross-check (JSON + optional
//                  certificate file)
//   rectcalc       rectangle divisibility/sign-sum arithmetic (JSON)
//   rectcalc-scan  rectangle arithmetic vs closed form vs decision (TSV)
//
// Exit codes: 0 success/agreement; 2 mathematical disagreement found;
// 3 resource cap exceeded; 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "sigtile/sigtile.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace sigtile;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitUsage = 64;

struct CommonOpts {
    int n = 0;
    bool plus = false;
    std::string weights = "z";
    std::size_t step_cap = 0;  // 0 = library default (env-overridable)
    int jobs = 1;
    bool no_timestamp = false;
};

BuchbergerOptions buch_opts(const CommonOpts& c) {
    BuchbergerOptions o;
    if (c.step_cap > 0) o.step_cap = c.step_cap;
    return o;
}

std::string iso_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json base_output(const CommonOpts& c, const std::string& command) {
    json out;
    out["version"] = version;
    if (!c.no_timestamp) out["timestamp"] = iso_timestamp();
    out["config"] = {{"command", command},
                     {"n", c.n},
                     {"plus", c.plus},
                     {"weights", c.weights},
                     {"step_cap", c.step_cap > 0 ? c.step_cap : default_step_cap()},
                     {"jobs", c.jobs}};
    return out;
}

// ---- verify-basis ----------------------------------------------------------

int run_verify_basis(const CommonOpts& c) {
    const auto basis = reference_basis(c.n, c.plus);
    std::vector<std::pair<std::string, bool>> checks;

    checks.emplace_back("groebner_criterion", is_groebner(basis).is_groebner);

    bool s_zero = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const PolyZ s = s_poly(basis[i], basis[j]);
            if (!s.is_zero() && !normal_form(s, basis, ReduceMode::E).remainder.is_zero())
                s_zero = false;
        }
    checks.emplace_back("s_combinations_reduce_to_zero", s_zero);

    checks.emplace_back(
        "ideal_equality_with_generators",
        ideal_equal(generator_polys(tile_set(c.n, c.plus)), basis, buch_opts(c)));

    for (const auto& check : identity_suite(c.n, c.plus))
        checks.emplace_back("identity: " + check.name, check.ok);

    const std::string family = "T" + std::to_string(c.n) + (c.plus ? "+" : "");
    std::cout << "basis verification for " << family << "\n";
    std::size_t passed = 0;
    for (const auto& [name, ok] : checks) {
        std::printf("  %-58s %s\n", name.c_str(), ok ? "pass" : "FAIL");
        if (ok) ++passed;
    }
    std::cout << passed << "/" << checks.size() << " checks passed\n";
    return passed == checks.size() ? kExitOk : kExitDisagreement;
}

// ---- decide ----------------------------------------------------------------

int run_decide(const CommonOpts& c, const std::string& region_spec, std::int64_t test_bound) {
    const CellSet region = parse_region_spec(region_spec);
    const TileSet ts = tile_set(c.n, c.plus);

    json out = base_output(c, "decide");
    out["config"]["region"] = region_spec;
    out["config"]["test_bound"] = test_bound < 0 ? ts.n : test_bound;
    out["config"]["region_cells"] = region.size();
    out["method"] = "groebner";

    if (c.weights == "z") {
        const auto dec = signed_tileable<Int>(region, ts, test_bound, buch_opts(c));
        out["answer"] = to_string(dec.answer);
        out["test_monomial"] =
            dec.test_monomial ? json(to_string(*dec.test_monomial)) : json(nullptr);
    } else {
        const auto dec = signed_tileable<Rat>(region, ts, test_bound, buch_opts(c));
        out["answer"] = to_string(dec.answer);
        out["test_monomial"] =
            dec.test_monomial ? json(to_string(*dec.test_monomial)) : json(nullptr);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ---- scan ------------------------------------------------------------------

int run_scan(const CommonOpts& c, std::int64_t max) {
    const ScanResult res = c.weights == "z"
                               ? scan_rects<Int>(c.n, c.plus, max, c.jobs, buch_opts(c))
                               : scan_rects<Rat>(c.n, c.plus, max, c.jobs, buch_opts(c));
    std::cout << "p\tq\tdecision\tclosed_form\tagree\ttest_monomial\n";
    for (const auto& row : res.rows) {
        std::cout << row.p << "\t" << row.q << "\t";
        if (!row.error.empty()) {
            std::cout << "error\t-\t-\t-\n";
            continue;
        }
        std::cout << (row.groebner_answer ? "yes" : "no") << "\t"
                  << (row.closed_answer ? "yes" : "no") << "\t"
                  << (row.agree ? "yes" : "no") << "\t"
                  << (row.test_monomial ? to_string(*row.test_monomial) : "-") << "\n";
    }
    std::cout << res.mismatches << " disagreements out of " << res.rows.size()
              << " rectangles";
    if (res.errors) std::cout << " (" << res.errors << " resource errors)";
    std::cout << "\n";
    if (res.errors) return kExitResourceCap;
    return res.mismatches == 0 ? kExitOk : kExitDisagreement;
}

// ---- oracle ----------------------------------------------------------------

template <class C>
int oracle_impl(const CommonOpts& c, const std::string& region_spec, std::int64_t margin,
                const std::string& cert_path, json& out) {
    const CellSet region = parse_region_spec(region_spec);
    const TileSet ts = tile_set(c.n, c.plus);

    const auto cert = oracle_solve<C>(region, ts, margin);
    const auto decision = signed_tileable<C>(region, ts, -1, buch_opts(c));
    const bool oracle_yes = cert.has_value();
    const bool decision_yes = decision.answer == Verdict::Yes;
    bool verified = true;

    out["oracle_answer"] = oracle_yes ? "yes" : "no";
    out["decision_answer"] = to_string(decision.answer);
    out["agree"] = oracle_yes == decision_yes;

    if (cert) {
        verified = verify_certificate(*cert, ts, region);
        out["certificate"] = {{"entries", cert->entries.size()},
                              {"verified", verified},
                              {"window",
                               {{"x0", cert->window.x0},
                                {"y0", cert->window.y0},
                                {"w", cert->window.w},
                                {"h", cert->window.h}}}};
        if (!cert_path.empty()) {
            std::ofstream f(cert_path);
            if (!f) throw std::invalid_argument("cannot write certificate file: " + cert_path);
            f << "# signed tiling certificate\n"
              << "# tile set: " << cert->tile_set_name << ", weights: " << c.weights << "\n"
              << "# region: " << region_spec << " (" << region.size() << " cells)\n"
              << "# window: " << cert->window.x0 << " " << cert->window.y0 << " "
              << cert->window.w << " " << cert->window.h << "\n"
              << "# columns: tile_index u v weight\n";
            for (const auto& [pl, w] : cert->entries)
                f << pl.tile_index << " " << pl.u << " " << pl.v << " "
                  << coeff_to_string(w) << "\n";
            out["certificate"]["file"] = cert_path;
        }
    } else {
        out["certificate"] = nullptr;
    }

    std::cout << out.dump(2) << "\n";
    return (oracle_yes == decision_yes && verified) ? kExitOk : kExitDisagreement;
}

int run_oracle(const CommonOpts& c, const std::string& region_spec, std::int64_t margin,
               const std::string& cert_path) {
    json out = base_output(c, "oracle");
    out["config"]["region"] = region_spec;
    out["config"]["margin"] = margin < 0 ? c.n : margin;
    if (c.weights == "z") return oracle_impl<Int>(c, region_spec, margin, cert_path, out);
    return oracle_impl<Rat>(c, region_spec, margin, cert_path, out);
}

// ---- rectcalc --------------------------------------------------------------

json report_to_json(const RectReport& rep) {
    json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["divisible"] = rep.divisible;
    j["remainder"] = to_string(rep.remainder);
    j["deriv_value"] = rep.deriv_value.str();
    j["parity_case"] = to_string(rep.parity_case);
    j["s_minus"] = rep.s_minus ? json(rep.s_minus->str()) : json(nullptr);
    j["b_count"] = rep.b_count ? json(rep.b_count->str()) : json(nullptr);
    j["satisfiable"] = rep.satisfiable ? json(*rep.satisfiable) : json(nullptr);
    return j;
}

int run_rectcalc(const CommonOpts& c, std::int64_t p, std::int64_t q) {
    json out = base_output(c, "rectcalc");
    out["config"].erase("weights");
    out["config"].erase("plus");
    out["config"]["p"] = p;
    out["config"]["q"] = q;
    out["report"] = report_to_json(rect_report(p, q, c.n));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_rectcalc_scan(const CommonOpts& c, std::int64_t max) {
    const TileSet ts = tile_set(c.n, false);
    cached_tile_basis<Int>(c.n, false, buch_opts(c));

    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t p = 1; p <= max; ++p)
        for (std::int64_t q = p; q <= max; ++q) cells.emplace_back(p, q);

    struct Row {
        RectReport rep;
        bool closed = false;
        bool decision = false;
        bool agree = false;
    };
    std::vector<Row> rows(cells.size());
    detail::parallel_cells(cells.size(), c.jobs, [&](std::size_t i) {
        const auto [p, q] = cells[i];
        Row& row = rows[i];
        row.rep = rect_report(p, q, c.n);
        row.closed = closed_form_rect(c.n, false, p, q);
        row.decision =
            signed_tileable<Int>(rect_region(q, p), ts, -1, buch_opts(c)).answer == Verdict::Yes;
        const bool predicted =
            row.rep.divisible && row.rep.satisfiable && *row.rep.satisfiable;
        row.agree = predicted == row.closed && row.closed == row.decision;
    });

    std::cout << "p\tq\tdivisible\tcase\tderiv\ts_minus\tb_count\tsatisfiable\t"
                 "closed_form\tdecision\tagree\n";
    std::size_t disagreements = 0;
    for (const Row& row : rows) {
        const RectReport& rep = row.rep;
        std::cout << rep.p << "\t" << rep.q << "\t" << (rep.divisible ? "yes" : "no") << "\t"
                  << to_string(rep.parity_case) << "\t" << rep.deriv_value.str() << "\t"
                  << (rep.s_minus ? rep.s_minus->str() : "-") << "\t"
                  << (rep.b_count ? rep.b_count->str() : "-") << "\t"
                  << (rep.satisfiable ? (*rep.satisfiable ? "yes" : "no") : "-") << "\t"
                  << (row.closed ? "yes" : "no") << "\t" << (row.decision ? "yes" : "no")
                  << "\t" << (row.agree ? "yes" : "no") << "\n";
        if (!row.agree) ++disagreements;
    }
    std::cout << disagreements << " disagreements out of " << rows.size() << " rectangles\n";
    return disagreements == 0 ? kExitOk : kExitDisagreement;
}

void add_common(CLI::App* sub, CommonOpts& c, bool with_weights = true) {
    sub->add_option("--n", c.n, "Tile size (even)")->required();
    sub->add_flag("--plus", c.plus, "Add the 2x2 square to the tile family");
    if (with_weights)
        sub->add_option("--weights", c.weights, "Weight domain")
            ->check(CLI::IsMember({"z", "q"}))
            ->default_str("z");
    sub->add_option("--step-cap", c.step_cap,
                    "Completion step cap (default from SIGTILE_STEP_CAP or 100000)");
    sub->add_option("--jobs", c.jobs, "Worker threads for scans")->check(CLI::PositiveNumber);
    sub->add_flag("--no-timestamp", c.no_timestamp,
                  "Omit the timestamp field for byte-identical reruns");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact signed-tiling decisions for ribbon L tile families: Groebner-basis "
        "ideal membership over integer or rational weights, closed-form cross-checks, "
        "and an independent placement solver.\n"
        "Exit codes: 0 ok/agreement, 2 disagreement, 3 resource cap, 64 usage."};
    app.require_subcommand(1);

    CommonOpts c;
    std::string region_spec;
    std::int64_t test_bound = -1, margin = -1, max = 0, p = 0, q = 0;
    std::string cert_path;

    auto* vb = app.add_subcommand("verify-basis",
                                  "Verify the reference basis and its identity suite");
    add_common(vb, c, false);

    auto* de = app.add_subcommand("decide", "Decide signed tileability of a region");
    add_common(de, c);
    de->add_option("--region", region_spec, "rect:WxH | inflatedL:N:FACTOR | file:PATH")
        ->required();
    de->add_option("--test-bound", test_bound, "Test-monomial search box (default n)");

    auto* sc = app.add_subcommand("scan", "Compare decisions with the closed form on a grid");
    add_common(sc, c);
    sc->add_option("--max", max, "Largest rectangle side")->required();

    auto* orc = app.add_subcommand("oracle", "Cross-check one region with the placement solver");
    add_common(orc, c);
    orc->add_option("--region", region_spec, "rect:WxH | inflatedL:N:FACTOR | file:PATH")
        ->required();
    orc->add_option("--margin", margin, "Window margin around the region (default n)");
    orc->add_option("--emit-certificate", cert_path, "Write the certificate to a file");

    auto* rc = app.add_subcommand("rectcalc", "Rectangle divisibility and sign-sum arithmetic");
    add_common(rc, c, false);
    rc->add_option("--p", p, "First side")->required();
    rc->add_option("--q", q, "Second side")->required();

    auto* rcs = app.add_subcommand("rectcalc-scan",
                                   "Rectangle arithmetic vs closed form vs decision");
    add_common(rcs, c, false);
    rcs->add_option("--max", max, "Largest rectangle side")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*vb) return run_verify_basis(c);
        if (*de) return run_decide(c, region_spec, test_bound);
        if (*sc) return run_scan(c, max);
        if (*orc) return run_oracle(c, region_spec, margin, cert_path);
        if (*rc) return run_rectcalc(c, p, q);
        if (*rcs) return run_rectcalc_scan(c, max);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
