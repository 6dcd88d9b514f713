// Walks the pencil x1^2 + t*x1*x2 + x2^2 and reports the exact Leibniz
// complexity of each member over the rationals and over Q(sqrt(5)). The
// value is 1 exactly when t^2 - 4 is a square in the coefficient field,
// so t = 3 drops from 2 to 1 once sqrt(5) is available.

#include "leibniz/strategies.hpp"

#include <cstdio>

using namespace leibniz;

namespace {

std::string describe(const Field& field, const Scalar& t) {
    QuadraticDichotomy qd = binary_quadratic_lc(Scalar(1), t, Scalar(1), field);
    std::string line = std::to_string(qd.value);
    line += "  via ";
    for (std::size_t i = 0; i < qd.certificate.generators.size(); ++i) {
        const auto& gen = qd.certificate.generators[i];
        if (i) line += " , ";
        line += "(" + format_poly(gen.p(), qd.certificate.variables) + ")(" +
                format_poly(gen.q(), qd.certificate.variables) + ")";
    }
    return line;
}

} // namespace

int main() {
    Field rational = Field::rational();
    Field extended = Field::quadratic(5);
    const Scalar values[] = {Scalar(0), Scalar(1), Scalar(2), Scalar(Rat(5, 2)), Scalar(3)};
    const char* names[] = {"0", "1", "2", "5/2", "3"};

    for (std::size_t i = 0; i < 5; ++i) {
        std::printf("t = %-4s  over Q:         %s\n", names[i],
                    describe(rational, values[i]).c_str());
        std::printf("          over Q(rt5):    %s\n", describe(extended, values[i]).c_str());
    }
    return 0;
}
