#pragma once

/**
 * @file montecarlo.hpp
 * @brief Seeded random-error trials. Each trial draws from its own stream,
 * derived from (master seed, weight, trial index), so results do not depend
 * on how trials are scheduled across threads.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "error_eval.hpp"

namespace ordercodes {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t weight, std::size_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed ^ (std::uint64_t{weight} << 40)) + trial));
}

/// Uniform support of the given size, uniform nonzero values.
inline ErrorVector random_error(const EvaluationCode& code, std::size_t weight, std::mt19937_64& rng) {
    const auto& F = code.field();
    std::vector<std::size_t> idx(code.length());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    ErrorVector e;
    std::uniform_int_distribution<std::uint32_t> val(1, F->q() - 1);
    for (std::size_t k = 0; k < weight && k < idx.size(); ++k) {
        std::size_t pick = std::uniform_int_distribution<std::size_t>(k, idx.size() - 1)(rng);
        std::swap(idx[k], idx[pick]);
        e.emplace(idx[k], F->element(val(rng)));
    }
    return e;
}

inline Word random_codeword(const EvaluationCode& code, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> val(0, code.field()->q() - 1);
    Word msg(code.dual_dimension());
    for (auto& x : msg) x = code.field()->element(val(rng));
    return code.encode(msg);
}

struct TrialOutcome {
    bool success = false;
    ErrorVector planted;
};

/// Decode a random codeword plus a random weight-w error; success means the
/// planted error is recovered exactly. A DecodeFailure counts as a miss.
inline TrialOutcome run_trial(const std::shared_ptr<const EvaluationCode>& code, std::size_t weight,
                              std::mt19937_64& rng) {
    TrialOutcome out;
    Word c = random_codeword(*code, rng);
    out.planted = random_error(*code, weight, rng);
    try {
        auto res = decode(code, add_error(c, out.planted));
        out.success = res.error == out.planted && res.corrected == c;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DecodeFailure) throw;
    }
    return out;
}

struct WeightStats {
    std::size_t weight = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double fraction() const { return trials ? double(successes) / double(trials) : 0.0; }
};

inline std::vector<WeightStats> montecarlo(const std::shared_ptr<const EvaluationCode>& code, std::size_t wmin,
                                           std::size_t wmax, std::size_t trials, std::uint64_t seed,
                                           unsigned threads = 1) {
    std::vector<WeightStats> out;
    threads = std::max(1u, threads);
    for (std::size_t w = wmin; w <= wmax; ++w) {
        std::vector<char> ok(trials, 0);
        auto work = [&](unsigned k) {
            for (std::size_t t = k; t < trials; t += threads) {
                auto rng = trial_rng(seed, w, t);
                ok[t] = run_trial(code, w, rng).success;
            }
        };
        std::vector<std::thread> pool;
        for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work, k);
        work(0);
        for (auto& th : pool) th.join();
        WeightStats st{w, trials, static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1))};
        out.push_back(st);
    }
    return out;
}

}  // namespace ordercodes
