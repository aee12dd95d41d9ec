#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wmcs/gallery.hpp"
#include "wmcs/scenario.hpp"
#include "wmcs/suite.hpp"

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitFailure = 1;

std::size_t element_cap() {
    if (const char* env = std::getenv("WMCS_MAX_ELEMENTS")) {
        return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }
    return wmcs::kDefaultMaxElements;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw wmcs::Error("cannot write " + path.string());
    os << bytes;
}

void emit_report(const wmcs::scenario::Report& rep, const std::string& out_dir) {
    if (out_dir.empty()) return;
    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "report.json", rep.to_json().dump(2) + "\n");
    for (const auto& [name, content] : rep.tables) {
        write_file(std::filesystem::path(out_dir) / name, content);
    }
}

int run_command(const std::string& file, const std::string& out_dir) {
    std::ifstream is(file, std::ios::binary);
    if (!is) {
        std::cerr << "cannot open scenario file: " << file << "\n";
        return kExitSchema;
    }
    std::stringstream buffer;
    buffer << is.rdbuf();
    wmcs::scenario::Report rep = wmcs::scenario::run_scenario_text(buffer.str());
    std::cout << "scenario " << rep.scenario_meta.value("kind", std::string("?")) << " (hash "
              << rep.scenario_meta.value("hash", std::string()) << ")\n";
    std::cout << rep.results.dump(2) << "\n";
    for (const auto& v : rep.verdicts) {
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.name;
        if (!v.detail.empty()) std::cout << "  (" << v.detail << ")";
        std::cout << "\n";
    }
    emit_report(rep, out_dir);
    return rep.all_pass() ? 0 : kExitFailure;
}

int gallery_command(const std::string& name, bool all) {
    std::vector<std::string> names = all ? wmcs::fp::gallery_names()
                                         : std::vector<std::string>{name};
    bool ok = true;
    for (const auto& n : names) {
        wmcs::fp::GalleryInstance g = wmcs::fp::gallery(n);
        auto failures = wmcs::fp::verify_gallery(g);
        std::cout << n << " (" << g.poset.size() << " elements)\n";
        for (const auto& fact : g.facts) {
            bool failed = false;
            for (const auto& f : failures) failed = failed || f == fact.description;
            std::cout << "  " << (failed ? "[FAIL] " : "[PASS] ") << fact.description << "\n";
            ok = ok && !failed;
        }
    }
    return ok ? 0 : kExitFailure;
}

int verify_command(const std::string& suite_name, std::uint64_t seed,
                   const std::string& out_dir) {
    using namespace wmcs::suite;
    SuiteKind kind = suite_name == "quick" ? SuiteKind::Quick : SuiteKind::Acceptance;
    auto results = run_suite(kind, seed);
    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << r.id
                  << "  " << r.name << "  [" << std::fixed << std::setprecision(2) << r.seconds
                  << "s]";
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
        total += r.seconds;
    }
    std::cout << (all ? "all criteria passed" : "criteria FAILED") << " in " << std::fixed
              << std::setprecision(2) << total << "s\n";
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file(std::filesystem::path(out_dir) / "report.json",
                   suite_report(kind, seed, results).dump(2) + "\n");
    }
    return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-order comparative statics laboratory"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::string out_dir;
    auto* run = app.add_subcommand("run", "run a scenario file and report its results");
    run->add_option("file", scenario_file, "scenario JSON file")->required();
    run->add_option("--out", out_dir, "directory for report.json and CSV tables");

    std::string gallery_name;
    bool gallery_all = false;
    auto* gal = app.add_subcommand("gallery", "re-derive the counterexample gallery facts");
    gal->add_option("name", gallery_name, "instance name");
    gal->add_flag("--all", gallery_all, "run every instance");

    std::string suite_name = "acceptance";
    std::uint64_t seed = 7;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "run the acceptance or quick suite");
    verify->add_option("--suite", suite_name, "acceptance|quick")
        ->check(CLI::IsMember({"acceptance", "quick"}));
    verify->add_option("--seed", seed, "suite seed");
    verify->add_option("--out", verify_out, "directory for report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        (void)element_cap();  // validated once so a bad override fails early
        if (run->parsed()) return run_command(scenario_file, out_dir);
        if (gal->parsed()) {
            if (!gallery_all && gallery_name.empty()) {
                std::cerr << "gallery needs a name or --all\n";
                return kExitSchema;
            }
            return gallery_command(gallery_name, gallery_all);
        }
        if (verify->parsed()) return verify_command(suite_name, seed, verify_out);
    } catch (const wmcs::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const wmcs::UnknownGalleryName& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const wmcs::SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const wmcs::HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const wmcs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
