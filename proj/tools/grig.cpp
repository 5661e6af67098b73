// Command-line front end: ball enumeration, growth tables, exponent fits,
// verification suites, tree encodings and the counting bound.
//
// Exit codes: 0 success / all suites pass, 1 verification violation,
// 2 usage or resource errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "grig/grig.hpp"
#include "grig/report_json.hpp"

using namespace grig;
namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
    std::string cache_dir;
    std::size_t element_cap = kDefaultElementCap;
    bool timings = false;
};

std::string sanitize_for_filename(std::string s) {
    for (char& ch : s)
        if (ch == '/') ch = '_';
    return s;
}

// Enumerate a ball, consulting the cache directory when one is configured.
BallTable obtain_ball(const WeightScheme& ws, const Rat& radius, const GlobalOptions& opts) {
    FieldElement r(radius);
    if (opts.cache_dir.empty()) return enumerate_ball(ws, r, opts.element_cap);
    fs::path path = fs::path(opts.cache_dir) /
                    (ws.name + "_r" + sanitize_for_filename(render_rational(radius)) + ".grigtable");
    if (fs::exists(path)) {
        BallTable t = load_table(path);
        if (t.scheme_name() == ws.name && t.radius() == r) return t;
    }
    BallTable t = enumerate_ball(ws, r, opts.element_cap);
    fs::create_directories(opts.cache_dir);
    save_table(t, path);
    return t;
}

std::vector<Rat> parse_point_list(const std::string& csv) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        if (!tok.empty()) out.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<Rat> default_points(const Rat& radius, int from) {
    std::vector<Rat> out;
    for (Int n = from; Rat(n) <= radius; ++n) out.emplace_back(n);
    return out;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                 bool timings) {
    bool all_passed = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, timings));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << render_report_text(r, timings);
    }
    for (const auto& r : reports) all_passed = all_passed && r.passed();
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the Grigorchuk group and its weighted growth"};
    app.require_subcommand(1);

    GlobalOptions opts;
    if (const char* env = std::getenv("GRIG_CACHE_DIR")) opts.cache_dir = env;
    app.add_option("--cache", opts.cache_dir, "cache directory for ball tables");
    app.add_option("--cap", opts.element_cap, "element cap for enumerations");
    app.add_flag("--timings", opts.timings, "include elapsed times in reports");

    // ---- act ----------------------------------------------------------------
    auto* cmd_act = app.add_subcommand("act", "apply a word to a binary string");
    std::string act_word, act_input;
    cmd_act->add_option("--word", act_word, "word over {a,b,c,d}, 1 for the identity")->required();
    cmd_act->add_option("--input", act_input, "binary string")->required();

    // ---- ball ---------------------------------------------------------------
    auto* cmd_ball = app.add_subcommand("ball", "enumerate a ball and save the table");
    std::string ball_scheme = "omega", ball_radius = "2", ball_out;
    cmd_ball->add_option("--weights", ball_scheme, "unit or omega");
    cmd_ball->add_option("--radius", ball_radius, "exact rational p/q")->required();
    cmd_ball->add_option("--out", ball_out, "output table file (defaults to stdout)");

    // ---- growth ---------------------------------------------------------------
    auto* cmd_growth = app.add_subcommand("growth", "growth function values");
    std::string growth_scheme = "unit", growth_radius = "2", growth_points, growth_format = "text",
                growth_render = "exact";
    cmd_growth->add_option("--weights", growth_scheme, "unit or omega");
    cmd_growth->add_option("--radius", growth_radius, "exact rational p/q")->required();
    cmd_growth->add_option("--points", growth_points, "comma-separated rational sample points");
    cmd_growth->add_option("--format", growth_format, "text, csv or json");
    cmd_growth->add_option("--render", growth_render, "exact or decimal columns");

    // ---- exponent -------------------------------------------------------------
    auto* cmd_exp = app.add_subcommand("exponent", "least-squares growth exponent fit");
    std::string exp_scheme = "unit", exp_radius = "8", exp_points, exp_format = "text";
    cmd_exp->add_option("--weights", exp_scheme, "unit or omega");
    cmd_exp->add_option("--radius", exp_radius, "exact rational p/q");
    cmd_exp->add_option("--points", exp_points, "comma-separated rational sample points");
    cmd_exp->add_option("--format", exp_format, "text or json");

    // ---- verify ---------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    std::string suite, verify_radius, verify_format = "text", verify_k = "1";
    unsigned verify_word_len = 8, verify_depth = 8, verify_grid_max = 50;
    cmd_verify->add_option("suite", suite, "weights|nf|shorten|psi|budget|injection|all")
        ->required();
    cmd_verify->add_option("--radius", verify_radius, "ball radius override (p/q)");
    cmd_verify->add_option("--word-len", verify_word_len, "psi suite: max word length");
    cmd_verify->add_option("--depth", verify_depth, "psi suite: max input depth");
    cmd_verify->add_option("--grid-max", verify_grid_max, "budget suite: top of the integer grid");
    cmd_verify->add_option("--k", verify_k, "leaf cutoff K (p/q)");
    cmd_verify->add_option("--format", verify_format, "text or json");

    // ---- encode ---------------------------------------------------------------
    auto* cmd_encode = app.add_subcommand("encode", "tree representation of a group element");
    std::string encode_word, encode_k = "1";
    cmd_encode->add_option("--word", encode_word, "word over {a,b,c,d}")->required();
    cmd_encode->add_option("--k", encode_k, "leaf cutoff K (p/q)");

    // ---- bound ----------------------------------------------------------------
    auto* cmd_bound = app.add_subcommand("bound", "tree-counting bound vs enumerated growth");
    std::string bound_n, bound_k = "1", bound_radius;
    cmd_bound->add_option("--n", bound_n, "sample point (p/q)")->required();
    cmd_bound->add_option("--k", bound_k, "leaf cutoff K (p/q)");
    cmd_bound->add_option("--radius", bound_radius, "also enumerate to this radius for comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_act->parsed()) {
            std::cout << act(Word::parse(act_word), act_input) << "\n";
            return 0;
        }

        if (cmd_ball->parsed()) {
            WeightScheme ws = scheme_by_name(ball_scheme);
            BallTable t = obtain_ball(ws, parse_rational(ball_radius), opts);
            if (!ball_out.empty()) {
                save_table(t, ball_out);
                std::cout << "saved " << t.size() << " elements to " << ball_out << "\n";
            } else {
                std::cout << "scheme " << t.scheme_name() << " radius " << ball_radius
                          << ": " << t.size() << " elements\n";
                for (const auto& [key, e] : t.sorted_entries())
                    std::cout << e->rep.render() << " " << e->length.render() << "\n";
            }
            return 0;
        }

        if (cmd_growth->parsed()) {
            WeightScheme ws = scheme_by_name(growth_scheme);
            Rat radius = parse_rational(growth_radius);
            BallTable t = obtain_ball(ws, radius, opts);
            std::vector<Rat> points = growth_points.empty() ? default_points(radius, 0)
                                                            : parse_point_list(growth_points);
            auto render = [&](const Rat& q) {
                return growth_render == "decimal" ? decimal_string(q, 10) : render_rational(q);
            };
            if (growth_format == "csv") {
                std::cout << "n,gamma\n";
                for (const Rat& n : points)
                    std::cout << render(n) << "," << growth_function(t, FieldElement(n)) << "\n";
            } else if (growth_format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (const Rat& n : points)
                    rows.push_back({{"n", render(n)},
                                    {"gamma", growth_function(t, FieldElement(n))}});
                std::cout << rows.dump(2) << "\n";
            } else {
                for (const Rat& n : points)
                    std::cout << "gamma(" << render(n)
                              << ") = " << growth_function(t, FieldElement(n)) << "\n";
            }
            return 0;
        }

        if (cmd_exp->parsed()) {
            WeightScheme ws = scheme_by_name(exp_scheme);
            Rat radius = parse_rational(exp_radius);
            BallTable t = obtain_ball(ws, radius, opts);
            std::vector<Rat> pts = exp_points.empty() ? default_points(radius, 2)
                                                      : parse_point_list(exp_points);
            std::vector<FieldElement> points(pts.begin(), pts.end());
            GrowthFit fit = estimate_alpha(t, points);
            if (exp_format == "json") {
                nlohmann::json j{{"exponent", decimal_string(fit.exponent.value(), 6)},
                                 {"enclosure_radius", decimal_string(fit.exponent.radius(), 12)},
                                 {"residual", fit.residual},
                                 {"points", fit.points_used}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "exponent " << decimal_string(fit.exponent.value(), 6)
                          << " (enclosure radius " << decimal_string(fit.exponent.radius(), 12)
                          << ", residual " << fit.residual << ", " << fit.points_used
                          << " points)\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            const WeightScheme omega = omega_weights();
            std::vector<VerificationReport> reports;
            auto radius_or = [&](int fallback) {
                return verify_radius.empty() ? Rat(fallback) : parse_rational(verify_radius);
            };
            LeafBudgetParams params = LeafBudgetParams::with_cutoff(FieldElement(parse_rational(verify_k)));

            bool all = suite == "all";
            if (all || suite == "weights") reports.push_back(check_weight_identities(omega));
            if (all || suite == "psi")
                reports.push_back(verify_psi_consistency(verify_word_len, verify_depth));
            if (all || suite == "nf")
                reports.push_back(
                    verify_minimal_form(obtain_ball(omega, radius_or(4), opts), omega));
            if (all || suite == "shorten")
                reports.push_back(
                    verify_shortening(obtain_ball(omega, radius_or(5), opts), omega));
            if (all || suite == "budget") {
                std::vector<Rat> grid;
                for (unsigned n = 2; n <= verify_grid_max; ++n) grid.emplace_back(n);
                reports.push_back(verify_leaf_budget_properties(grid, params));
            }
            if (all || suite == "injection")
                reports.push_back(
                    verify_injection(obtain_ball(omega, radius_or(3), opts), params, omega));
            if (reports.empty())
                throw CLI::ValidationError("verify", "unknown suite: " + suite);
            return emit_reports(reports, verify_format, opts.timings);
        }

        if (cmd_encode->parsed()) {
            const WeightScheme omega = omega_weights();
            LeafBudgetParams params =
                LeafBudgetParams::with_cutoff(FieldElement(parse_rational(encode_k)));
            Word w = Word::parse(encode_word);
            // the recursion's section weights stay below max(weight, 4)
            FieldElement weight = word_weight(w, omega);
            Rat lookup_radius(4);
            while (FieldElement(lookup_radius) < weight) ++lookup_radius;
            BallTable t = obtain_ball(omega, lookup_radius, opts);
            CodeTree tree = encode(w, params, t);
            const BallEntry& e = t.at(element_key(w));
            std::cout << tree.serialize() << "\n";
            std::cout << "leaves " << tree.leaf_count() << ", budget L = "
                      << leaf_budget(e.length, params) << ", length " << e.length.render() << "\n";
            return 0;
        }

        if (cmd_bound->parsed()) {
            const WeightScheme omega = omega_weights();
            LeafBudgetParams params =
                LeafBudgetParams::with_cutoff(FieldElement(parse_rational(bound_k)));
            Rat n = parse_rational(bound_n);
            Rat table_radius = bound_radius.empty() ? parse_rational(bound_k)
                                                    : parse_rational(bound_radius);
            BallTable t = obtain_ball(omega, table_radius, opts);
            Int bound = upper_bound(FieldElement(n), params, t);
            std::cout << "L_n = " << leaf_budget(FieldElement(n), params) << "\n";
            std::cout << "bound = " << bound.str() << "\n";
            if (!(t.radius() < FieldElement(n))) {
                std::size_t gamma = growth_function(t, FieldElement(n));
                std::cout << "gamma = " << gamma << (Int(gamma) <= bound ? " <= bound" : " > bound")
                          << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
