#pragma once

// Randomized within-radius trials comparing the BMS locator, the linear
// algebra locator and the vanishing ideal of the true support.

#include <string>

#include "oracles.hpp"

namespace trials {

using namespace ordercodes;

struct ThreeWay {
    bool bms_eq_oracle = false;
    bool bms_eq_support = false;
    bool values_exact = false;
    bool footprint_count = false;
    std::string note;

    bool all() const { return bms_eq_oracle && bms_eq_support && values_exact && footprint_count; }
};

inline ThreeWay three_way(const std::shared_ptr<const EvaluationCode>& code, const ErrorVector& e, std::mt19937_64& rng) {
    ThreeWay out;
    Word c = random_codeword(*code, rng);
    Word r = add_error(c, e);
    auto truth = oracle::support_ideal(*code, e);
    try {
        SyndromeTable table(code, r);
        auto bms = bms_run(table);
        auto full = SyndromeTable::from_error(code, e);
        auto lin = locator_oracle(full, code->radius());
        out.bms_eq_oracle = bms.basis == lin.basis;
        out.bms_eq_support = bms.basis == truth;
        out.footprint_count = bms.error_count() == e.size();
        auto res = decode(code, r);
        out.values_exact = res.error == e && res.corrected == c;
    } catch (const Error& err) {
        out.note = err.what();
    }
    return out;
}

/// Reed-Solomon code of length 15 over F16 as the s = 1 case: F16[X] with
/// weight 1, evaluated on F16^*, l = 6 so t = 3.
inline std::shared_ptr<const EvaluationCode> rs_code() {
    Presentation p;
    p.field = GaloisField::make(2, 4, {1, 1, 0, 0, 1});
    p.names = {"X"};
    p.order = WeightOrder({{1}}, SemigroupOrder::Integer, {0});
    auto dom = std::make_shared<const OrderDomain>(p);
    std::vector<Point> pts;
    for (std::uint32_t k = 0; k < 15; ++k) pts.push_back({p.field->primitive().pow(k)});
    return build_code(dom, 6, pts);
}

/// Decode one random RS instance both ways; true when they agree exactly.
inline bool rs_agrees(const std::shared_ptr<const EvaluationCode>& code, std::size_t weight, std::mt19937_64& rng) {
    Word c = random_codeword(*code, rng);
    auto e = oracle::random_error(*code->field(), code->length(), weight, rng);
    Word r = add_error(c, e);
    std::vector<FieldElement> xs;
    for (auto& P : code->points()) xs.push_back(P[0]);
    auto classic = oracle::rs_decode(code->syndromes_known(r), xs);
    if (!classic || *classic != e) return false;
    auto res = decode(code, r);
    return res.error == *classic && res.corrected == c;
}

}  // namespace trials
