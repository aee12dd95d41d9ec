// Acceptance driver: runs every criterion at its stated size and prints one
// pass/fail line per criterion. Exit status is nonzero when anything fails.
#include <cstring>
#include <iomanip>
#include <iostream>

#include "wmcs/suite.hpp"

int main(int argc, char** argv) {
    using namespace wmcs::suite;
    SuiteKind kind = SuiteKind::Acceptance;
    std::uint64_t seed = 7;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc) {
            kind = std::strcmp(argv[i + 1], "quick") == 0 ? SuiteKind::Quick
                                                          : SuiteKind::Acceptance;
            ++i;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[i + 1], nullptr, 10);
            ++i;
        }
    }
    auto results = run_suite(kind, seed);
    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << r.id
                  << "  " << r.name << "  [" << std::fixed << std::setprecision(2) << r.seconds
                  << "s]  (" << r.detail << ")\n";
        all = all && r.pass;
        total += r.seconds;
    }
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " in " << std::fixed
              << std::setprecision(2) << total << "s\n";
    return all ? 0 : 1;
}
