#include "ygseq/correlate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ygseq {

std::string to_string(OptimalityClass c) {
    switch (c) {
        case OptimalityClass::Perfect: return "perfect";
        case OptimalityClass::OptimalValueMod0: return "optimal-value-N=0";
        case OptimalityClass::OptimalMagnitude: return "optimal-magnitude";
        case OptimalityClass::IdealTwoLevel: return "ideal-two-level";
        case OptimalityClass::OptimalMod1: return "optimal-N=1";
        case OptimalityClass::OptimalMod2: return "optimal-N=2";
        case OptimalityClass::None: return "none";
    }
    return "none";
}

std::int64_t autocorrelation(const BinarySeq& seq, std::uint32_t tau) {
    const std::uint32_t n = seq.period();
    if (tau >= n) throw std::invalid_argument("tau must be in [0, N)");
    std::int64_t disagree = 0;
    for (std::uint32_t t = 0; t < n; ++t)
        disagree += seq.get(t) != seq.get(std::uint64_t{t} + tau);
    return std::int64_t{n} - 2 * disagree;
}

namespace {

// The sequence repeated once, zero-padded, so a shifted window never wraps.
std::vector<std::uint64_t> doubled_buffer(const BinarySeq& seq) {
    const std::uint32_t n = seq.period();
    std::vector<std::uint64_t> d((std::uint64_t{2} * n + 63) / 64 + 1, 0);
    for (std::uint64_t t = 0; t < std::uint64_t{2} * n; ++t)
        if (seq.get(t)) d[t >> 6] |= 1ull << (t & 63);
    return d;
}

std::int64_t ac_from_doubled(const BinarySeq& seq,
                             const std::vector<std::uint64_t>& d,
                             std::uint32_t tau) {
    const std::uint32_t n = seq.period();
    const std::size_t nwords = (n + 63) / 64;
    const unsigned off = tau & 63;
    const std::size_t wo = tau >> 6;
    const std::uint64_t tail_mask =
        (n & 63) ? (1ull << (n & 63)) - 1 : ~0ull;

    std::uint64_t disagree = 0;
    for (std::size_t i = 0; i < nwords; ++i) {
        std::uint64_t shifted = d[wo + i] >> off;
        if (off) shifted |= d[wo + i + 1] << (64 - off);
        std::uint64_t x = seq.words()[i] ^ shifted;
        if (i + 1 == nwords) x &= tail_mask;
        disagree += std::popcount(x);
    }
    return std::int64_t{n} - 2 * static_cast<std::int64_t>(disagree);
}

} // namespace

std::int64_t autocorrelation_fast(const BinarySeq& seq, std::uint32_t tau) {
    if (tau >= seq.period()) throw std::invalid_argument("tau must be in [0, N)");
    return ac_from_doubled(seq, doubled_buffer(seq), tau);
}

AutocorrProfile full_profile(const BinarySeq& seq, unsigned workers) {
    const std::uint32_t n = seq.period();
    AutocorrProfile p;
    p.period = n;
    p.values.resize(n);

    const auto d = doubled_buffer(seq);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, n);

    auto run = [&](std::uint32_t lo, std::uint32_t hi) {
        for (std::uint32_t tau = lo; tau < hi; ++tau)
            p.values[tau] = ac_from_doubled(seq, d, tau);
    };
    if (workers <= 1) {
        run(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{n} * w / workers);
            std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{n} * (w + 1) / workers);
            pool.emplace_back(run, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    return p;
}

std::vector<std::int64_t> profile_prefix(const BinarySeq& seq,
                                         std::uint32_t max_tau) {
    if (max_tau >= seq.period())
        throw std::invalid_argument("max_tau must be in [0, N)");
    const auto d = doubled_buffer(seq);
    std::vector<std::int64_t> out(max_tau + 1);
    for (std::uint32_t tau = 0; tau <= max_tau; ++tau)
        out[tau] = ac_from_doubled(seq, d, tau);
    return out;
}

OptimalityClass classify_optimality(const AutocorrProfile& profile) {
    const std::uint32_t n = profile.period;
    std::set<std::int64_t> off;
    for (std::uint32_t tau = 1; tau < n; ++tau) off.insert(profile.values[tau]);

    auto subset_of = [&off](std::initializer_list<std::int64_t> allowed) {
        return std::all_of(off.begin(), off.end(), [&](std::int64_t v) {
            return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        });
    };

    switch (n % 4) {
        case 0:
            if (subset_of({0})) return OptimalityClass::Perfect;
            if (subset_of({0, 4}) || subset_of({0, -4}))
                return OptimalityClass::OptimalValueMod0;
            if (subset_of({0, 4, -4})) return OptimalityClass::OptimalMagnitude;
            break;
        case 1:
            if (subset_of({1, -3})) return OptimalityClass::OptimalMod1;
            break;
        case 2:
            if (subset_of({2, -2})) return OptimalityClass::OptimalMod2;
            break;
        case 3:
            if (subset_of({-1})) return OptimalityClass::IdealTwoLevel;
            break;
    }
    return OptimalityClass::None;
}

TauClass predict_yu_gong(std::uint32_t tau, unsigned k) {
    if (k < 2) throw std::invalid_argument("predict_yu_gong needs k >= 2");
    const std::uint32_t w = (1u << (2 * k)) - 1;
    const std::uint32_t n = 4 * w;
    if (tau == 0 || tau >= n)
        throw std::invalid_argument("tau must be in [1, N)");

    TauClass c;
    c.tau = tau;
    c.x = tau % w;
    c.y = tau % ((1u << k) + 1);
    c.v = tau % 4;

    const bool zero_a = c.x == 0;
    const bool zero_b = c.x != 0 && c.y == 0 && c.v != 0;
    const bool zero_c = c.y != 0 && c.v == 2;
    const bool neg_a = c.x != 0 && c.y == 0 && c.v == 0;
    const bool neg_b = c.y != 0 && c.v == 1;
    const bool neg_c = c.y != 0 && c.v == 3;
    const bool pos = c.y != 0 && c.v == 0;

    const int fired = zero_a + zero_b + zero_c + neg_a + neg_b + neg_c + pos;
    if (fired != 1)
        throw std::logic_error("autocorrelation case split is not a partition at tau=" +
                               std::to_string(tau));

    if (zero_a || zero_b || zero_c)
        c.predicted = 0;
    else if (pos)
        c.predicted = 4;
    else
        c.predicted = -4;
    return c;
}

Theorem1Report verify_theorem1(unsigned k, int delta, const FieldContext& ctx,
                               unsigned workers) {
    if (k < 2) throw std::invalid_argument("verify_theorem1 needs k >= 2");
    Theorem1Report rep;
    rep.k = k;
    rep.delta = delta;

    const YuGongSeq s = yu_gong(k, delta, &ctx);
    const AutocorrProfile prof = full_profile(s.bits, workers);
    const std::uint32_t n = prof.period;

    auto fail = [&rep](const std::string& msg) { rep.failures.push_back(msg); };

    // predicted vs measured
    for (std::uint32_t tau = 1; tau < n; ++tau) {
        const TauClass c = predict_yu_gong(tau, k);
        if (c.predicted != prof.values[tau]) {
            std::ostringstream os;
            os << "tau=" << tau << " predicted=" << c.predicted
               << " measured=" << prof.values[tau];
            fail(os.str());
        }
    }

    // periodicity mod 4(2^k+1), and the -4 values at its multiples
    const std::uint32_t p = 4 * ((1u << k) + 1);
    for (std::uint32_t tau = p + 1; tau < n; ++tau) {
        if (prof.values[tau] != prof.values[tau - p]) {
            std::ostringstream os;
            os << "periodicity: AC(" << tau << ")=" << prof.values[tau]
               << " != AC(" << tau - p << ")=" << prof.values[tau - p];
            fail(os.str());
        }
    }
    for (std::uint32_t i = 1; i <= (1u << k) - 2; ++i) {
        if (prof.values[std::uint64_t{p} * i % n] != -4) {
            std::ostringstream os;
            os << "AC(" << p * i << ") expected -4, got " << prof.values[p * i];
            fail(os.str());
        }
    }

    // block quadruples S_1..S_{2^k+1} over tau = 1..4(2^k+1)
    const std::int64_t common[4] = {-4, 0, -4, 4};
    const std::int64_t after_quarter[4] = {0, 0, -4, 4};
    const std::int64_t after_three_quarters[4] = {-4, 0, 0, 4};
    const std::int64_t last[4] = {-4, 0, -4, -4};
    const std::uint32_t quarter = 1u << (k - 2);
    std::uint32_t common_runs[3] = {0, 0, 0};
    for (std::uint32_t j = 1; j <= (1u << k) + 1; ++j) {
        const std::int64_t* want = common;
        int run = -1;
        if (j <= quarter)
            run = 0;
        else if (j == quarter + 1)
            want = after_quarter;
        else if (j <= 3 * quarter)
            run = 1;
        else if (j == 3 * quarter + 1)
            want = after_three_quarters;
        else if (j <= (1u << k))
            run = 2;
        else
            want = last;
        if (run >= 0) ++common_runs[run];
        for (std::uint32_t t = 0; t < 4; ++t) {
            std::uint32_t tau = 4 * (j - 1) + 1 + t;
            if (prof.values[tau] != want[t]) {
                std::ostringstream os;
                os << "block S_" << j << " slot " << t << " (tau=" << tau
                   << "): expected " << want[t] << ", got " << prof.values[tau];
                fail(os.str());
            }
        }
    }
    if (common_runs[0] != quarter || common_runs[1] != 2 * quarter - 1 ||
        common_runs[2] != quarter - 1) {
        std::ostringstream os;
        os << "block multiplicities " << common_runs[0] << "," << common_runs[1]
           << "," << common_runs[2] << " do not match " << quarter << ","
           << 2 * quarter - 1 << "," << quarter - 1;
        fail(os.str());
    }

    rep.pass = rep.failures.empty();
    return rep;
}

} // namespace ygseq
