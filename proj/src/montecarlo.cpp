#include "gameprice/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace gameprice {

namespace {

constexpr std::uint64_t kChunkSteps = 4096;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 output for the i-th state after `seed`; O(1) random access
// makes every step's draw independent of the chunk partition.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;
};

}  // namespace

SimulationResult simulate(const SimulationSpec& spec, unsigned n_threads) {
    if (spec.steps < 1) throw std::invalid_argument("simulate: steps must be >= 1");
    if (spec.streams < 1) throw std::invalid_argument("simulate: streams must be >= 1");
    if (!(spec.price > 0.0)) throw std::invalid_argument("simulate: price must be positive");
    if (!(spec.proportion >= 0.0 && spec.proportion <= 1.0))
        throw std::invalid_argument("simulate: proportion must lie in [0, 1]");

    // Per-atom log wealth factors and cumulative weights for the inverse
    // transform; a nonpositive factor means ruin is possible.
    const auto& atoms = spec.game.atoms();
    std::vector<double> log_factor(atoms.size());
    std::vector<double> cum(atoms.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        const double factor =
            spec.proportion * atoms[j].payoff / spec.price + 1.0 - spec.proportion;
        if (!(factor > 0.0))
            throw std::domain_error("simulate: nonpositive wealth factor at payoff " +
                                    std::to_string(atoms[j].payoff));
        log_factor[j] = std::log(factor);
        acc += atoms[j].weight;
        cum[j] = acc;
    }
    cum.back() = 1.0;  // draws lie in [0, 1)

    const std::uint64_t n_chunks = (spec.steps + kChunkSteps - 1) / kChunkSteps;
    std::vector<ChunkSums> chunks(n_chunks);

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = c * kChunkSteps;
        const std::uint64_t end = std::min(spec.steps, begin + kChunkSteps);
        ChunkSums s;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double u = to_unit(splitmix64_at(spec.seed, i));
            const std::size_t j =
                std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
            const double lf = log_factor[std::min(j, cum.size() - 1)];
            s.sum += lf;
            s.sum_sq += lf * lf;
        }
        s.count = end - begin;
        chunks[c] = s;
    };

    unsigned workers = n_threads == 0 ? spec.streams : n_threads;
    workers = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, n_chunks)));
    if (workers == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < n_chunks; c += workers) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    // Fixed-order reduction over chunks.
    double total = 0.0, total_sq = 0.0;
    for (const ChunkSums& s : chunks) {
        total += s.sum;
        total_sq += s.sum_sq;
    }

    SimulationResult res;
    const double n = static_cast<double>(spec.steps);
    res.mean_log = total / n;
    res.geometric_mean_growth = std::exp(res.mean_log);
    if (spec.steps > 1) {
        const double var = std::max(0.0, (total_sq - total * total / n) / (n - 1.0));
        res.stderr_log = std::sqrt(var / n);
    }

    // Per-stream diagnostics: stream s owns chunks congruent to s.
    res.stream_means.assign(spec.streams, 0.0);
    std::vector<std::uint64_t> stream_counts(spec.streams, 0);
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        const unsigned s = static_cast<unsigned>(c % spec.streams);
        res.stream_means[s] += chunks[c].sum;
        stream_counts[s] += chunks[c].count;
    }
    for (unsigned s = 0; s < spec.streams; ++s)
        if (stream_counts[s] > 0)
            res.stream_means[s] /= static_cast<double>(stream_counts[s]);
    return res;
}

VerifyReport verify_price(const Game& g, const Rate& rate, std::uint64_t steps,
                          std::uint64_t seed, unsigned streams,
                          const SolverConfig& cfg) {
    VerifyReport rep;
    rep.outcome = price(g, rate, cfg);
    rep.theoretical_growth = rate.growth_target;
    rep.sim = simulate({g, rep.outcome.price, rep.outcome.proportion, steps, seed, streams});
    rep.z = rep.sim.stderr_log > 0.0
                ? (rep.sim.mean_log - rate.r) / rep.sim.stderr_log
                : 0.0;
    return rep;
}

}  // namespace gameprice
