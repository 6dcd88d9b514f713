#include "leibniz/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace leibniz;

namespace {
const Field Q = Field::rational();
const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x1", "x2"};
} // namespace

TEST_CASE("parse basic expressions") {
    Polynomial x = Polynomial::variable(Q, 1, 0);

    CHECK(parse_poly("x", X, Q) == x);
    CHECK(parse_poly("x^2 + 3*x + 7", X, Q) == x * x + x * 3 + Polynomial::constant(Q, 1, Scalar(7)));
    CHECK(parse_poly("-x + x", X, Q).is_zero());
    CHECK(parse_poly("0", X, Q).is_zero());
    CHECK(parse_poly("(x + 1)^3", X, Q) == (x + Polynomial::constant(Q, 1, Scalar(1))).pow(3));
    CHECK(parse_poly("2/3", X, Q) == Polynomial::constant(Q, 1, Scalar(Rat(2, 3))));
    CHECK(parse_poly("1/2*x - 1/2*x", X, Q).is_zero());
}

TEST_CASE("parse multivariate") {
    Polynomial x1 = Polynomial::variable(Q, 2, 0);
    Polynomial x2 = Polynomial::variable(Q, 2, 1);

    CHECK(parse_poly("x1*x2^2 - x1", XY, Q) == x1 * x2 * x2 - x1);
    CHECK(parse_poly("(x1 + x2)*(x1 - x2)", XY, Q) == x1 * x1 - x2 * x2);
}

TEST_CASE("parse sqrt literals") {
    Field q5 = Field::quadratic(5);
    Polynomial p = parse_poly("sqrt(5)*x + 1", {"x"}, q5);
    CHECK(p.leading_coeff() == Scalar::sqrt_of(5));

    CHECK_THROWS_AS(parse_poly("sqrt(5)", X, Q), ParseError);
    CHECK_THROWS_AS(parse_poly("sqrt(3)*x", {"x"}, q5), ParseError);
}

TEST_CASE("parse errors carry a position") {
    auto pos_of = [](const char* src) {
        try {
            parse_poly(src, {"x"}, Q);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::size_t{0};
    };

    CHECK(pos_of("x +") == 4);         // expression cut short
    CHECK(pos_of("(x + 1") == 7);      // unbalanced paren
    CHECK(pos_of("x ^ -2") == 5);      // negative exponent is not a nat
    CHECK(pos_of("y + 1") == 1);       // unknown variable
    CHECK(pos_of("x + 1 x") == 7);     // trailing garbage
    CHECK(pos_of("1/0") == 3);         // zero denominator
    CHECK(pos_of("x^65536") == 3);     // exponent cap
    CHECK(pos_of("x $ 1") == 3);       // unexpected character

    CHECK_NOTHROW(parse_poly("x^65535", X, Q));
}

TEST_CASE("variable list validation") {
    CHECK_THROWS_AS(parse_poly("x", {"x", "x"}, Q), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("sqrt", {"sqrt"}, Q), std::invalid_argument);
}

TEST_CASE("format round trips") {
    auto roundtrip = [](const char* src, const std::vector<std::string>& vars, const Field& field) {
        Polynomial p = parse_poly(src, vars, field);
        std::string s = format_poly(p, vars);
        CHECK(parse_poly(s, vars, field) == p);
        return s;
    };

    CHECK(roundtrip("x^2 + 3*x + 7", X, Q) == "x^2 + 3*x + 7");
    CHECK(roundtrip("7 + 3*x + x^2", X, Q) == "x^2 + 3*x + 7");
    CHECK(roundtrip("-x^3 + 1/2", X, Q) == "-x^3 + (1/2)");
    CHECK(roundtrip("0", X, Q) == "0");
    CHECK(roundtrip("x1*x2 - x2^2", XY, Q) == "x1*x2 - x2^2");

    Field q5 = Field::quadratic(5);
    roundtrip("(1 + sqrt(5))*x^2 - sqrt(5)", {"x"}, q5);
    roundtrip("(1/2 - 3/2*sqrt(5))*x", {"x"}, q5);
}

TEST_CASE("format uses graded ordering") {
    Polynomial p = parse_poly("x1 + x2^3 + x1*x2", XY, Q);
    CHECK(format_poly(p, XY) == "x2^3 + x1*x2 + x1");
}

TEST_CASE("default variable names") {
    CHECK(default_var_names(1) == std::vector<std::string>{"x"});
    CHECK(default_var_names(3) == std::vector<std::string>{"x1", "x2", "x3"});
}
