#include "criteria.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Runs the acceptance criteria and prints one line per criterion."};
    bool allow_known = false;
    bool quick = false;
    std::vector<int> only;
    app.add_flag("--allow-known-deviations", allow_known,
                 "Exit 0 when the only failures are documented known deviations");
    app.add_flag("--quick", quick, "Use the reduced selftest bounds");
    app.add_option("--only", only, "Run only these criteria");
    CLI11_PARSE(app, argc, argv);

    using namespace tsurf::acceptance;
    auto scale = quick ? Scale::Quick : Scale::Full;
    if (only.empty())
        for (int i = 1; i <= 10; ++i) only.push_back(i);
    int hard = 0, known = 0;
    for (int id : only) {
        auto r = run_criterion(id, scale);
        std::cout << format_line(r) << std::endl;
        if (r.pass) continue;
        if (r.known_deviation)
            ++known;
        else
            ++hard;
    }
    std::cout << "summary: " << only.size() - hard - known << " pass, " << hard << " fail, " << known
              << " known deviation" << std::endl;
    if (hard > 0) return 1;
    if (known > 0 && !allow_known) return 1;
    return 0;
}
