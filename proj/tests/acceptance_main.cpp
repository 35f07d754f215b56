// Runs the acceptance suite through the C API and prints one line per criterion.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "atl/atl.h"
#include "json.hpp"

namespace {

void line(const char* s, void*) {
    std::printf("%s\n", s);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    std::string config;
    if (argc > 1) {
        std::ifstream in(argv[1]);
        if (!in) {
            std::fprintf(stderr, "cannot read %s\n", argv[1]);
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        config = ss.str();
    }
    char* report = nullptr;
    int passed = 0;
    atl_status s = atl_acceptance_run(config.empty() ? nullptr : config.c_str(), line, nullptr, &report, &passed);
    if (s != ATL_OK) {
        std::fprintf(stderr, "acceptance: %s: %s\n", atl_status_name(s), atl_last_error());
        return 2;
    }
    if (argc > 2) std::ofstream(argv[2]) << report << "\n";
    nlohmann::json doc = nlohmann::json::parse(report);
    for (auto& c : doc["criteria"])
        if (c["status"] == "fail")
            for (auto& n : c["notes"]) std::printf("  criterion %d: %s\n", c["id"].get<int>(), n.get<std::string>().c_str());
    atl_free_string(report);
    std::printf("%s\n", passed ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return passed ? 0 : 1;
}
