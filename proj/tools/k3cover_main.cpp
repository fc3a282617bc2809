// k3cover: exact-arithmetic toolkit for cyclic triple covers of K3 surfaces.

#include "k3cover/catalog.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace k3cover;

namespace {

struct OutputOptions {
    std::string format = "text";
    bool strict = false;
};

bool contains_needs_input(const Report& j) {
    if (j.is_string()) return j.get<std::string>() == "needs-input";
    if (j.is_object() || j.is_array()) {
        for (const auto& el : j)
            if (contains_needs_input(el)) return true;
    }
    return false;
}

// Text mode carries a trailing single-line machine block; json mode is that
// block alone.
void emit(const Report& rep, const OutputOptions& opt) {
    if (opt.format == "text") {
        std::cout << render_text(rep);
        std::cout << "machine: " << rep.dump() << "\n";
    } else {
        std::cout << render_json(rep);
    }
}

int finish(const Report& rep, const OutputOptions& opt, bool failed) {
    emit(rep, opt);
    if (failed) return 1;
    if (opt.strict && contains_needs_input(rep)) {
        std::cerr << "strict: the report contains needs-input values\n";
        return 1;
    }
    return 0;
}

int run_scenario_op(const std::string& op, const std::string& path,
                    const OutputOptions& opt) {
    Scenario sc;
    try {
        sc = load_scenario(path);
    } catch (const invalid_input& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    Report rep;
    bool failed = false;
    try {
        rep = run_operation(op, sc);
    } catch (const invalid_input& e) {
        rep["scenario"] = sc.name;
        rep["operation"] = op;
        rep["valid"] = false;
        rep["error"] = e.what();
        failed = true;
    }
    return finish(rep, opt, failed);
}

int run_catalog(const std::string& wanted, bool all, const OutputOptions& opt) {
    std::vector<const CatalogEntry*> selected;
    if (all || wanted.empty()) {
        for (const auto& e : catalog()) selected.push_back(&e);
    } else if (const CatalogEntry* e = find_catalog_entry(wanted)) {
        selected.push_back(e);
    } else {
        for (const auto& e : catalog())
            if (e.name.rfind(wanted, 0) == 0) selected.push_back(&e);
        if (selected.empty()) {
            std::cerr << "input error: no catalog entry matches '" << wanted
                      << "' (see catalog-list)\n";
            return 2;
        }
        if (selected.size() > 1) {
            std::cerr << "input error: '" << wanted << "' is ambiguous:";
            for (const auto* e : selected) std::cerr << " " << e->name;
            std::cerr << "\n";
            return 2;
        }
    }
    bool all_ok = true;
    Report entries = Report::array();
    for (const auto* e : selected) {
        CatalogResult res;
        try {
            res = e->run();
        } catch (const std::exception& ex) {
            res.name = e->name;
            res.checks.push_back({"runs-without-error", false, ex.what()});
        }
        all_ok = all_ok && res.ok();
        entries.push_back(catalog_result_report(res));
    }
    Report rep;
    rep["operation"] = "catalog-run";
    rep["entries"] = std::move(entries);
    rep["ok"] = all_ok;
    return finish(rep, opt, !all_ok);
}

int run_catalog_list(const OutputOptions& opt) {
    Report rep;
    rep["operation"] = "catalog-list";
    Report entries = Report::array();
    for (const auto& e : catalog()) {
        Report one;
        one["name"] = e.name;
        one["description"] = e.description;
        entries.push_back(std::move(one));
    }
    rep["entries"] = std::move(entries);
    return finish(rep, opt, false);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for cyclic triple covers of K3 surfaces"};
    app.require_subcommand(1);

    OutputOptions opt;
    int rc = 0;

    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "json-like-structured"}))
            ->default_val("text");
        sub->add_flag("--strict", opt.strict, "treat needs-input values as failure");
    };
    auto normalize = [&] {
        if (opt.format == "json-like-structured") opt.format = "json";
    };

    static const std::vector<std::pair<std::string, std::string>> scenario_ops = {
        {"lattice-info", "rank, signature, parity, discriminant, embedding check"},
        {"cover-validate", "congruence and divisibility checks on branch data"},
        {"cover-invariants", "invariants of the cover, its resolution, and minimal model"},
        {"cover-classify", "Kodaira dimension from the branch configuration"},
        {"minimal-model", "contraction ledger and minimal-model invariants"},
        {"base-change", "invariants and fiber transforms of degree-3 base changes"},
        {"bundle-check", "extension/bundle existence verdicts"},
    };
    for (const auto& [name, desc] : scenario_ops) {
        CLI::App* sub = app.add_subcommand(name, desc);
        auto path = std::make_shared<std::string>();
        sub->add_option("--scenario", *path, "scenario file")->required();
        add_output_options(sub);
        sub->callback([&, name = name, path] {
            normalize();
            rc = run_scenario_op(name, *path, opt);
        });
    }

    {
        CLI::App* sub = app.add_subcommand("catalog-run", "run built-in worked examples");
        auto entry = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        sub->add_option("entry", *entry, "entry name or unique prefix");
        sub->add_flag("--all", *all, "run every entry");
        add_output_options(sub);
        sub->callback([&, entry, all] {
            normalize();
            rc = run_catalog(*entry, *all, opt);
        });
    }
    {
        CLI::App* sub = app.add_subcommand("catalog-list", "list built-in worked examples");
        add_output_options(sub);
        sub->callback([&] {
            normalize();
            rc = run_catalog_list(opt);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
