// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: acceptance [workers]

#include <cstdlib>
#include <iostream>

#include <domhg/verify.hpp>

int main(int argc, char** argv) {
    const unsigned workers = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : domhg::default_workers();
    const auto checks = domhg::verify::run_verification(workers == 0 ? 1 : workers);
    std::cout << domhg::verify::render(checks);
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.passed ? 1 : 0;
    std::cout << passed << "/" << checks.size() << " criteria passed\n";
    return domhg::verify::all_passed(checks) ? 0 : 1;
}
