#include <gtest/gtest.h>

#include "properties.hpp"
#include "trials.hpp"

using namespace ordercodes;

namespace {

const golden::Scenario& herm() {
    static const golden::Scenario sc = golden::hermitian();
    return sc;
}
const golden::Scenario& plane() {
    static const golden::Scenario sc = golden::toric();
    return sc;
}

LocatorIdeal ideal_of(const std::vector<Point>& pts, const Field& F, const WeightOrder& ord) {
    LocatorIdeal L;
    L.basis = ideal_of_points(pts, F, ord.nvars(), ord);
    L.footprint = finite_footprint(L.basis, ord, ord.nvars());
    return L;
}

// Code on the four F4 points, so a syndrome table exists for them.
std::shared_ptr<const EvaluationCode> four_point_code() {
    auto fp = golden::four_point();
    Presentation p;
    p.field = fp.field;
    p.names = {"X", "Y"};
    p.order = WeightOrder::graded_lex_identity(2);
    return build_code(std::make_shared<const OrderDomain>(p), 3, fp.points);
}

}  // namespace

TEST(Variety, Golden) {
    auto& sc = herm();
    LocatorIdeal L;
    L.basis = golden::parse_all(golden::hermitian_locator_text, sc.domain->presentation());
    L.basis.push_back(sc.domain->generators()[0]);
    L.footprint = finite_footprint(buchberger(L.basis, sc.domain->order()), sc.domain->order(), 2);
    std::vector<std::size_t> want;
    for (auto& [j, v] : sc.error) want.push_back(j);
    EXPECT_EQ(variety(L, sc.code->points()), want);
    L.footprint.pop_back();
    EXPECT_THROW(variety(L, sc.code->points()), Error);
    LocatorIdeal unit;
    unit.basis = {Polynomial::constant(sc.code->field(), 2, sc.code->field()->one())};
    EXPECT_TRUE(variety(unit, sc.code->points()).empty());
    auto& pl = plane();
    auto L2 = bms_run(pl.code, add_error(pl.code->zero_word(), pl.error));
    auto v2 = variety(L2, pl.code->points());
    ASSERT_EQ(v2.size(), 2u);
    EXPECT_EQ(pl.code->points()[v2[0]], pl.error_points[0]);
    EXPECT_EQ(pl.code->points()[v2[1]], pl.error_points[1]);
}

TEST(Elimination, FourPointExample) {
    auto fp = golden::four_point();
    auto ord = WeightOrder::graded_lex_identity(2);
    auto L = ideal_of(fp.points, fp.field, ord);
    std::vector<std::string> names{"X", "Y"};
    // X(X - 1)(X - a) and Y(Y - 1) over F4, a = 2, 1 + a = 3
    EXPECT_EQ(elimination_poly(L, 0, ord, fp.field), parse_polynomial("X^3 + 3*X^2 + 2*X", fp.field, names));
    EXPECT_EQ(elimination_poly(L, 1, ord, fp.field), parse_polynomial("Y^2 + Y", fp.field, names));
}

TEST(Elimination, SinglePointAndRootProduct) {
    auto F = GaloisField::make(2, 3, {1, 1, 0, 1});
    auto ord = WeightOrder::graded_lex_identity(2);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        std::set<Point> set;
        std::size_t n = t < 10 ? 1 : 1 + t % 5;
        while (set.size() < n) set.insert(props::random_point(*F, 2, rng));
        std::vector<Point> pts(set.begin(), set.end());
        auto L = ideal_of(pts, F, ord);
        for (std::size_t i = 0; i < 2; ++i) {
            std::set<std::uint32_t> roots;
            for (auto& P : pts) roots.insert(P[i].code());
            Polynomial want = Polynomial::constant(F, 2, F->one());
            for (auto r : roots) {
                Polynomial lin = Polynomial::variable(F, 2, i);
                lin.add_term(Monomial(2), -F->element(r));
                want = want * lin;
            }
            auto f = elimination_poly(L, i, ord, F);
            EXPECT_EQ(f, want);
            EXPECT_LE(static_cast<std::size_t>(f.degree_in(i)), L.footprint.size());
        }
    }
}

TEST(Evaluator, FourPointDisplayedValues) {
    auto fp = golden::four_point();
    const auto& F = fp.field;
    auto a = F->element(2);
    auto one = F->one();
    std::vector<std::string> names{"X", "Y"};
    auto f1 = parse_polynomial("X^3 + 3*X^2 + 2*X", F, names);
    auto f2 = parse_polynomial("Y^2 + Y", F, names);
    for (std::uint32_t k = 0; k < 81; ++k) {
        std::vector<FieldElement> e{F->element(1 + k % 3), F->element(1 + k / 3 % 3), F->element(1 + k / 9 % 3),
                                    F->element(1 + k / 27 % 3)};
        auto S = syndrome_series(fp.points, e, Monomial{3, 2}, F);
        auto pp = positive_part(f1 * f2, S);
        ASSERT_TRUE(pp.fully_valid());
        auto g = pp.divided_by_variables();
        std::vector<FieldElement> want{-a * e[0], a * e[1], (one - a) * e[2], a * (a - one) * e[3]};
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_EQ(g.evaluate(fp.points[i]), want[i]);
            auto den = f1.derivative(0).evaluate(fp.points[i]) * f2.derivative(1).evaluate(fp.points[i]);
            ASSERT_FALSE(den.is_zero());
            EXPECT_EQ(g.evaluate(fp.points[i]) / den, e[i]);
        }
    }
}

TEST(Evaluator, FourPointThroughTable) {
    auto code = four_point_code();
    auto fp = golden::four_point();
    const auto& F = fp.field;
    ErrorVector e{{0, F->element(1)}, {1, F->element(2)}, {2, F->element(3)}, {3, F->element(2)}};
    auto table = SyndromeTable::from_error(code, e);
    auto L = ideal_of(fp.points, F, code->domain().order());
    std::vector<Polynomial> f{elimination_poly(L, 0, code->domain().order(), F),
                              elimination_poly(L, 1, code->domain().order(), F)};
    EXPECT_EQ(error_values({0, 1, 2, 3}, code->points(), f, table), e);
    // Three points share Y = 1; X = 0 is shared by P1 and P2.
    EXPECT_EQ(aggregate_values(F->one(), f[1], 1, table), e.at(1) + e.at(2) + e.at(3));
    EXPECT_EQ(aggregate_values(F->zero(), f[1], 1, table), e.at(0));
    EXPECT_EQ(aggregate_values(F->zero(), f[0], 0, table), e.at(0) + e.at(1));
    EXPECT_EQ(aggregate_values(F->element(2), f[0], 0, table), e.at(3));
    FieldElement total = F->zero(), byroots = F->zero();
    for (auto& [j, v] : e) total += v;
    for (auto r : {F->zero(), F->one(), F->element(2)}) byroots += aggregate_values(r, f[0], 0, table);
    EXPECT_EQ(byroots, total);
}

TEST(Evaluator, LagrangeBasis) {
    auto F = GaloisField::make(2, 3, {1, 1, 0, 1});
    auto ord = WeightOrder::graded_lex_identity(2);
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        std::set<Point> set;
        while (set.size() < static_cast<std::size_t>(1 + t % 4)) set.insert(props::random_point(*F, 2, rng));
        std::vector<Point> pts(set.begin(), set.end());
        auto L = ideal_of(pts, F, ord);
        auto f = elimination_poly(L, 0, ord, F) * elimination_poly(L, 1, ord, F);
        Monomial w = f.degree_vector();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto g = positive_part(f, h_point(pts[i], w)).divided_by_variables();
            auto gi = g.evaluate(pts[i]);
            ASSERT_FALSE(gi.is_zero());
            for (std::size_t j = 0; j < pts.size(); ++j)
                EXPECT_EQ(g.evaluate(pts[j]) / gi, i == j ? F->one() : F->zero());
        }
        // sigma = f_1 f_2 solves the key equation and (sigma S_e)_+ is divisible by X Y.
        std::vector<FieldElement> vals;
        for (std::size_t k = 0; k < pts.size(); ++k) vals.push_back(F->element(1 + (k * 3 + t) % 7));
        auto S = syndrome_series(pts, vals, w * Monomial{7, 7}, F);
        EXPECT_TRUE(key_eq_check(f, S));
        EXPECT_NO_THROW(positive_part(f, S).divided_by_variables());
    }
}

TEST(Decode, HermitianGolden) {
    auto& sc = herm();
    std::mt19937_64 rng(40);
    Word c = random_codeword(*sc.code, rng);
    auto res = decode(sc.code, add_error(c, sc.error));
    EXPECT_EQ(res.error, sc.error);
    EXPECT_EQ(res.corrected, c);
    EXPECT_EQ(res.radius, 7u);
    ASSERT_EQ(res.elimination.size(), 2u);
    auto text = res.diagnostics(sc.domain->presentation());
    EXPECT_NE(text.find("footprint: 1 X Y X^2 X*Y Y^2 X^3"), std::string::npos) << text;
}

TEST(Decode, PlaneGoldenAndClean) {
    auto& sc = plane();
    auto res = decode(sc.code, add_error(sc.code->zero_word(), sc.error));
    EXPECT_EQ(res.error, sc.error);
    auto F = sc.code->field();
    EXPECT_EQ(res.error.begin()->second, F->one());
    EXPECT_EQ(std::next(res.error.begin())->second, F->element(5));
    std::mt19937_64 rng(41);
    for (auto* s : {&herm(), &plane()}) {
        Word c = random_codeword(*s->code, rng);
        auto clean = decode(s->code, c);
        EXPECT_TRUE(clean.error.empty());
        EXPECT_EQ(clean.corrected, c);
    }
}

TEST(Decode, RecoveredErrorReproducesKnownSyndromes) {
    std::mt19937_64 rng(42);
    auto& sc = herm();
    for (int t = 0; t < 10; ++t) {
        auto e = oracle::random_error(*sc.code->field(), 64, 1 + t % 7, rng);
        Word r = add_error(random_codeword(*sc.code, rng), e);
        auto res = decode(sc.code, r);
        auto known = sc.code->syndromes_known(r);
        for (std::size_t i = 0; i < sc.code->ell(); ++i)
            EXPECT_EQ(error_syndrome(*sc.code, res.error, sc.code->delta()[i]), known[i]);
    }
}

TEST(Decode, BeyondRadiusFailsCleanly) {
    std::mt19937_64 rng(43);
    auto& sc = plane();
    std::size_t failures = 0;
    for (int t = 0; t < 20; ++t) {
        auto e = oracle::random_error(*sc.code->field(), 64, 6, rng);
        Word r = add_error(sc.code->zero_word(), e);
        try {
            auto res = decode(sc.code, r);
            EXPECT_TRUE(sc.code->is_codeword(res.corrected));
        } catch (const Error& err) {
            ++failures;
            EXPECT_EQ(err.code(), ErrorCode::DecodeFailure);
            std::string msg = err.message();
            bool tagged = false;
            for (auto tag : {"locator: ", "variety: ", "values: ", "check: "}) tagged |= msg.rfind(tag, 0) == 0;
            EXPECT_TRUE(tagged) << msg;
        }
    }
    EXPECT_GT(failures, 0u);
    EXPECT_THROW(decode(sc.code, Word(3, sc.code->field()->zero())), Error);
}

TEST(ReedSolomon, MatchesTextbookDecoder) {
    auto code = trials::rs_code();
    EXPECT_EQ(code->length(), 15u);
    EXPECT_EQ(code->feng_rao(), 7u);
    EXPECT_EQ(code->radius(), 3u);
    std::mt19937_64 rng(44);
    for (int t = 0; t < 40; ++t) EXPECT_TRUE(trials::rs_agrees(code, t % 4, rng)) << t;
}

TEST(ReedSolomon, OracleSanity) {
    // Berlekamp-Massey on a geometric sequence gives the one-tap register.
    auto F = GaloisField::make(2, 4, {1, 1, 0, 0, 1});
    auto x = F->element(7);
    std::vector<FieldElement> S;
    for (int k = 0; k < 6; ++k) S.push_back(F->element(3) * x.pow(k));
    auto C = oracle::berlekamp_massey(S);
    ASSERT_EQ(C.size(), 2u);
    EXPECT_EQ(C[1], -x);
}
