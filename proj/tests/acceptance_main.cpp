// Acceptance suite: runs every verification check and prints one line per
// criterion group. Exits nonzero if anything fails.

#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "potlab/verification.hpp"

int main(int argc, char** argv) {
    potlab::VerifyOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            options.threads = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) options.only = argv[++i];
        if (std::strcmp(argv[i], "--budget-scale") == 0 && i + 1 < argc)
            options.budget_scale = std::atof(argv[++i]);
    }

    potlab::VerificationReport report = potlab::verify_all(options);

    // group checks by criterion prefix (the token before the second '-')
    std::vector<std::string> order;
    std::map<std::string, std::pair<bool, double>> groups;
    std::map<std::string, std::vector<const potlab::CheckResult*>> members;
    for (const potlab::CheckResult& c : report.checks) {
        size_t cut = c.id.find('-');
        std::string group = cut == std::string::npos ? c.id : c.id.substr(0, cut);
        if (groups.find(group) == groups.end()) {
            order.push_back(group);
            groups[group] = {true, 0.0};
        }
        groups[group].first = groups[group].first && c.pass;
        groups[group].second += c.ms;
        members[group].push_back(&c);
    }

    for (const std::string& group : order) {
        auto [pass, ms] = groups[group];
        std::printf("%-4s %-6s (%lld ms)\n", pass ? "PASS" : "FAIL", group.c_str(),
                    static_cast<long long>(ms));
        for (const potlab::CheckResult* c : members[group]) {
            if (!c->pass)
                std::printf("     FAIL %s: expected %s; got %s\n", c->id.c_str(),
                            c->expected.c_str(), c->computed.c_str());
        }
    }
    std::printf("%s (%lld ms total, %zu checks)\n", report.pass ? "ACCEPTED" : "REJECTED",
                static_cast<long long>(report.total_ms), report.checks.size());
    return report.pass ? 0 : 1;
}
