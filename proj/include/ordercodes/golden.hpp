#pragma once

/**
 * @file golden.hpp
 * @brief Built-in worked examples: the Hermitian code over F16, the graded
 * F8 plane code, and the four-point F4 configuration used for the
 * error-evaluator identities.
 *
 * Field elements are written as codes: over F16 = F2[b]/(b^4+b+1) the code of
 * b^k is b.pow(k), so b = 2, b^2 = 4, b^3 = 8.
 */

#include <memory>
#include <string>
#include <vector>

#include "config.hpp"

namespace ordercodes::golden {

inline const char* hermitian_config = R"(# Hermitian curve over F16
[field]
p = 2
m = 4
modulus = 1 1 0 0 1
[presentation]
variables = X Y
weights = 4 5
order = integer
tiebreak = X Y
generator = X^5 + Y^4 + Y
[code]
top = Y^5
seed = 2024
)";

inline const char* toric_config = R"(# F8 plane, graded lex with X > Y
[field]
p = 2
m = 3
modulus = 1 1 0 1
[presentation]
variables = X Y
weights = 1 0
weights = 0 1
order = grlex
tiebreak = X Y
[code]
ell = 10
seed = 64
)";

/// Reduced locator basis printed for the Hermitian example; the coefficient
/// of the first Y term in p2 is read as an X term (the printed form does not
/// vanish on the error support).
inline const std::vector<std::string> hermitian_locator_text = {
    "X^2*Y + 13*X^3 + 12*Y^2 + 3*X*Y + 6*Y + 14*X",
    "X*Y^2 + 14*X^3 + 7*Y^2 + 10*X*Y + 5*X^2 + 14*Y + 7*X",
    "Y^3 + 13*X^3 + 14*Y^2 + 8*X*Y + 4*X^2 + 6*Y + 11*X",
    "X^4 + 12*X^3 + 8*Y^2 + 3*X*Y + 4*X^2 + 4*Y",
};

inline const char* toric_line_text = "X + 6*Y + 7";
/// Printed second element (coefficient a^2 + a = 6) and the monic quadratic
/// with roots 1 and a^2 (coefficient a^2 + 1 = 5).
inline const char* toric_quadratic_printed = "Y^2 + 6*Y + 4";
inline const char* toric_quadratic_derived = "Y^2 + 5*Y + 4";

struct Scenario {
    std::string name;
    WorkbenchConfig config;
    std::shared_ptr<const OrderDomain> domain;
    std::shared_ptr<const EvaluationCode> code;
    std::vector<Point> error_points;
    std::vector<FieldElement> error_values;
    ErrorVector error;
};

inline Scenario make_scenario(std::string name, const char* config_text) {
    Scenario sc;
    sc.name = std::move(name);
    sc.config = parse_config(config_text);
    sc.domain = std::make_shared<const OrderDomain>(sc.config.presentation);
    sc.code = build_code(sc.domain, sc.config.ell);
    return sc;
}

inline void attach_error(Scenario& sc) {
    for (std::size_t k = 0; k < sc.error_points.size(); ++k) {
        auto j = sc.code->point_index(sc.error_points[k]);
        if (!j) throw Error(ErrorCode::DimensionMismatch, "golden error point is not a code point");
        sc.error.emplace(*j, sc.error_values[k]);
    }
}

inline Scenario hermitian() {
    Scenario sc = make_scenario("hermitian-f16", hermitian_config);
    const auto& F = sc.code->field();
    auto b = [&](unsigned k) { return F->element(2).pow(k); };
    FieldElement zero = F->zero();
    sc.error_points = {{b(1), b(6)}, {b(2), b(14)}, {b(4), b(6)}, {b(5), b(14)},
                       {b(8), b(3)}, {b(11), b(12)}, {zero, zero}};
    sc.error_values = {b(1), b(4), b(12), F->one(), F->one(), b(1), b(1)};
    attach_error(sc);
    return sc;
}

inline Scenario toric() {
    Scenario sc = make_scenario("plane-f8", toric_config);
    const auto& F = sc.code->field();
    FieldElement a = F->element(2);
    sc.error_points = {{F->one(), F->one()}, {a, a * a}};
    sc.error_values = {F->one(), a * a + F->one()};
    attach_error(sc);
    return sc;
}

inline std::vector<Polynomial> parse_all(const std::vector<std::string>& text, const Presentation& p) {
    std::vector<Polynomial> out;
    for (auto& t : text) out.push_back(p.parse(t));
    return out;
}

/// F4 = F2[a]/(a^2+a+1) plane with points (0,0), (0,1), (1,1), (a,1).
struct FourPoint {
    Field field;
    std::vector<Point> points;
};

inline FourPoint four_point() {
    FourPoint fp;
    fp.field = GaloisField::make(2, 2, {1, 1, 1});
    auto z = fp.field->zero(), o = fp.field->one(), a = fp.field->element(2);
    fp.points = {{z, z}, {z, o}, {o, o}, {a, o}};
    return fp;
}

}  // namespace ordercodes::golden
