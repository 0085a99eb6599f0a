#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <greenring/cli.hpp>

using namespace greenring;

namespace {

int resolve_order_cap(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GREENRING_ORDER_CAP")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("GREENRING_ORDER_CAP is not a number");
        }
    }
    return 200;
}

void emit(const Json& report, const std::string& json_path) {
    std::string text = report.dump(2);
    text += '\n';
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write to '" + json_path + "'");
        out << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in shifted representation-ring functors"};
    app.require_subcommand(1);

    std::string json_path;
    app.add_option("--json", json_path, "write the JSON report to this path instead of stdout");
    int order_cap = 0;
    app.add_option("--order-cap", order_cap, "largest allowed group order (default 200, or GREENRING_ORDER_CAP)");

    std::string g1, g2, g3, kfield, ffield, shift, suite;
    std::vector<int> support;
    std::vector<std::string> at_specs;
    long seed_order = 0;
    int max_order = 0;

    auto* chartable = app.add_subcommand("chartable", "exact irreducible character table");
    chartable->add_option("group", g1, "group spec")->required();

    auto* classes = app.add_subcommand("classes", "F-conjugacy classes");
    classes->add_option("F", ffield, "field spec for F")->required();
    classes->add_option("group", g1, "group spec")->required();

    auto* omega = app.add_subcommand("omega", "orbit space of K_n on the F-classes");
    omega->add_option("k", kfield, "coefficient field spec")->required();
    omega->add_option("F", ffield, "field spec for F")->required();
    omega->add_option("group", g1, "group spec")->required();

    auto* idempotents = app.add_subcommand("idempotents", "primitive orbit idempotents");
    idempotents->add_option("k", kfield, "coefficient field spec")->required();
    idempotents->add_option("F", ffield, "field spec for F")->required();
    idempotents->add_option("group", g1, "group spec")->required();

    auto* ideals = app.add_subcommand("ideals", "ideal supports and evaluations");
    ideals->add_option("k", kfield, "coefficient field spec")->required();
    ideals->add_option("F", ffield, "field spec for F")->required();
    ideals->add_option("group", g1, "shift group spec")->required();
    ideals->add_option("--support", support, "orbit indices of the support (default: all)")->delimiter(',');
    ideals->add_option("--at", at_specs, "evaluate the ideal at these groups (default: 1)")->delimiter(',');

    auto* essential = app.add_subcommand("essential", "essential algebra dimensions");
    essential->add_option("k", kfield, "coefficient field spec")->required();
    essential->add_option("F", ffield, "field spec for F")->required();
    essential->add_option("group", g1, "group spec for H")->required();
    essential->add_option("--shift", shift, "shift group spec (default: trivial)");

    auto* seeds = app.add_subcommand("seeds", "count simple modules with coprime minimal order");
    seeds->add_option("group", g1, "shift group spec")->required();
    seeds->add_option("--order", seed_order, "order of the minimal groups")->required();

    auto* r3check = app.add_subcommand("r3check", "rank of morphisms factoring through the trivial group");
    r3check->add_option("K", g1, "group spec")->required();
    r3check->add_option("H", g2, "group spec")->required();
    r3check->add_option("G", g3, "shift group spec")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the exact verification suites");
    verify_cmd->add_option("--suite", suite, "suite name (default: all)");
    verify_cmd->add_option("--max-order", max_order, "restrict fixtures to groups of at most this order");

    CLI11_PARSE(app, argc, argv);

    try {
        int cap = resolve_order_cap(order_cap);
        Json report;
        int exit_code = 0;
        if (app.got_subcommand(chartable)) report = cli::run_chartable(g1, cap);
        else if (app.got_subcommand(classes)) report = cli::run_classes(ffield, g1, cap);
        else if (app.got_subcommand(omega)) report = cli::run_omega(kfield, ffield, g1, cap);
        else if (app.got_subcommand(idempotents)) report = cli::run_idempotents(kfield, ffield, g1, cap);
        else if (app.got_subcommand(ideals)) report = cli::run_ideals(kfield, ffield, g1, support, at_specs, cap);
        else if (app.got_subcommand(essential)) report = cli::run_essential(kfield, ffield, g1, shift, cap);
        else if (app.got_subcommand(seeds)) report = cli::run_seeds(g1, seed_order, cap);
        else if (app.got_subcommand(r3check)) report = cli::run_r3check(g1, g2, g3, cap);
        else if (app.got_subcommand(verify_cmd)) {
            report = cli::run_verify(suite, max_order);
            if (!report.at("ok").get<bool>()) exit_code = 2;
        }
        emit(report, json_path);
        return exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    }
}
