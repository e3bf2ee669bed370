// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
// Exit 0 iff all pass. --extended adds the long exhaustion runs (the unhinted
// certificate search and the full non-shellability sweeps), which take
// minutes to hours; everything else finishes in a few minutes.

#include <cmi/acceptance.hpp>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    cmi::AcceptanceOptions opts;
    opts.log = &std::cout;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--extended") {
            opts.extended = true;
        } else if (arg == "--threads" && k + 1 < argc) {
            int n = std::atoi(argv[++k]);
            if (n < 1) {
                std::cerr << "--threads wants a positive count\n";
                return 2;
            }
            opts.threads = static_cast<unsigned>(n);
        } else {
            std::cerr << "usage: acceptance [--extended] [--threads N]\n";
            return arg == "--help" || arg == "-h" ? 0 : 2;
        }
    }

    auto results = cmi::run_acceptance(opts);
    std::size_t passed = 0;
    for (const auto& r : results)
        passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return cmi::all_passed(results) ? 0 : 1;
}
