// Prints the halve-and-patch plan for one strip width, then sweeps widths
// up to 48 comparing that plan's cost against the optimum found by the
// subset dynamic program. The optimum wins for the first time at 15.

#include "leibniz/strips.hpp"

#include <cstdio>

using namespace leibniz;

int main() {
    StripPlan plan = strip_plan(23);
    std::printf("plan for width 23 (%zu cuts):\n", plan.cost());
    for (const auto& step : plan.steps)
        std::printf("  %3u -> %u + %u\n", step.width, step.left, step.right);
    std::printf("replays without gaps: %s\n\n", simulate_strip_plan(plan) ? "yes" : "NO");

    std::printf("%6s %6s %6s\n", "width", "plan", "best");
    for (unsigned k = 2; k <= 48; ++k) {
        int plan_cost = static_cast<int>(strip_plan(k).cost());
        int best = strip_optimal({k});
        std::printf("%6u %6d %6d%s\n", k, plan_cost, best, best < plan_cost ? "  *" : "");
    }
    return 0;
}
