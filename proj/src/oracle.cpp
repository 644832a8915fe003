#include "runstat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "runstat/error.hpp"
#include "runstat/run_counts.hpp"

namespace runstat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Incremental evaluation of a statistic along a sequence.
class Tracker {
public:
    explicit Tracker(const StatisticSpec& stat) {
        std::visit(overloaded{
                       [&](const FirstRunWait& s) { init(s.k, 1, Scheme::NonOverlapping, Mode::Wait); },
                       [&](const RthRunWait& s) { init(s.k, s.r, s.scheme, Mode::Wait); },
                       [&](const RunCount& s) { init(s.k, 1, s.scheme, Mode::Count); },
                       [&](const LongestRun&) { init(1, 1, Scheme::NonOverlapping, Mode::Longest); },
                   },
                   stat);
    }

    void push(bool success) {
        ++trials_;
        if (success) {
            best_ = std::max(best_, ++block_);
        } else {
            block_ = 0;
        }
        if (scan_.push(success) && ++occurrences_ == target_ && hit_ == 0) hit_ = trials_;
    }

    // Value is already fixed whatever comes next.
    bool settled() const noexcept { return mode_ == Mode::Wait && hit_ != 0; }

    // Waiting times past the horizon return SIZE_MAX (tail).
    std::size_t value() const noexcept {
        switch (mode_) {
            case Mode::Wait: return hit_ == 0 ? SIZE_MAX : hit_;
            case Mode::Count: return occurrences_;
            case Mode::Longest: return best_;
        }
        return 0;
    }

private:
    enum class Mode { Wait, Count, Longest };

    void init(unsigned k, unsigned r, Scheme scheme, Mode mode) {
        if (k < 1) throw InvalidArgument("run length k must be >= 1");
        if (r < 1) throw InvalidArgument("occurrence index r must be >= 1");
        scan_ = RunScanner(k, scheme);
        target_ = r;
        mode_ = mode;
    }

    RunScanner scan_{1, Scheme::NonOverlapping};
    Mode mode_ = Mode::Wait;
    unsigned target_ = 1;
    std::size_t trials_ = 0;
    std::size_t occurrences_ = 0;
    std::size_t hit_ = 0;
    std::size_t block_ = 0;
    std::size_t best_ = 0;
};

struct Histogram {
    std::vector<double> mass;
    double tail = 0.0;

    void add(std::size_t v, double p) {
        if (v < mass.size()) {
            mass[v] += p;
        } else {
            tail += p;
        }
    }
};

class Walker {
public:
    Walker(const TrialModel& model, std::size_t n) : model_(model), n_(n) {}

    void walk(std::size_t depth, bool prev, double prob, Tracker tracker, std::uint64_t prefix,
              std::size_t prefix_len, Histogram& out) const {
        if (depth == n_ || (depth >= prefix_len && tracker.settled())) {
            out.add(tracker.value(), prob);
            return;
        }
        for (int bit = 0; bit < 2; ++bit) {
            if (depth < prefix_len && ((prefix >> (prefix_len - 1 - depth)) & 1u) != static_cast<unsigned>(bit)) {
                continue;
            }
            const bool s = bit == 1;
            double ps;
            if (depth == 0) {
                ps = model_.p_first();
            } else {
                ps = prev ? model_.succ_after_success() : model_.succ_after_failure();
            }
            Tracker next = tracker;
            next.push(s);
            walk(depth + 1, s, prob * (s ? ps : 1.0 - ps), next, prefix, prefix_len, out);
        }
    }

private:
    const TrialModel& model_;
    std::size_t n_;
};

constexpr std::size_t kPartitionBits = 4;

}  // namespace

std::string describe(const StatisticSpec& stat) {
    return std::visit(overloaded{
                          [](const FirstRunWait& s) { return "V(" + std::to_string(s.k) + ")"; },
                          [](const RthRunWait& s) {
                              return "T_{" + std::to_string(s.r) + "," + std::to_string(s.k) + "}^(" +
                                     std::string(scheme_name(s.scheme)) + ")";
                          },
                          [](const RunCount& s) {
                              return "N_n,k=" + std::to_string(s.k) + "^(" + std::string(scheme_name(s.scheme)) + ")";
                          },
                          [](const LongestRun&) { return std::string("L_n"); },
                      },
                      stat);
}

std::size_t SeededStream::index(std::size_t n) {
    if (n == 0) throw InvalidArgument("index range must be nonempty");
    const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(i, n - 1);
}

SeededStream SeededStream::substream(std::uint64_t index) const {
    return SeededStream(splitmix64(seed_ ^ splitmix64(index + 1)));
}

Pmf enumerate_exact(const TrialModel& model, std::size_t n, const StatisticSpec& stat) {
    if (n > kMaxEnumerationTrials) {
        throw InvalidArgument("enumeration is capped at 24 trials (2^24 sequences); use simulate for n = " +
                              std::to_string(n));
    }
    const Tracker root(stat);
    const std::size_t bits = std::min(n, kPartitionBits);
    const std::size_t blocks = std::size_t{1} << bits;
    std::vector<Histogram> parts(blocks, Histogram{std::vector<double>(n + 1, 0.0), 0.0});
    const Walker walker(model, n);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, blocks));
    auto run = [&](unsigned w) {
        for (std::size_t b = w; b < blocks; b += workers) walker.walk(0, false, 1.0, root, b, bits, parts[b]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    Pmf out;
    out.offset = 0;
    out.probs.assign(n + 1, 0.0);
    for (const auto& part : parts) {
        for (std::size_t v = 0; v <= n; ++v) out.probs[v] += part.mass[v];
        out.tail += part.tail;
    }
    return out;
}

Pmf simulate(const TrialModel& model, std::size_t n, const StatisticSpec& stat, std::size_t reps,
             const SeededStream& stream) {
    if (reps < 1) throw InvalidArgument("reps must be >= 1");
    constexpr std::size_t kChunk = 4096;
    const Tracker root(stat);
    Histogram hist{std::vector<double>(n + 1, 0.0), 0.0};
    for (std::size_t start = 0, chunk = 0; start < reps; start += kChunk, ++chunk) {
        SeededStream rng = stream.substream(chunk);
        const std::size_t end = std::min(reps, start + kChunk);
        for (std::size_t rep = start; rep < end; ++rep) {
            Tracker t = root;
            bool prev = false;
            for (std::size_t i = 0; i < n; ++i) {
                const double ps = i == 0 ? model.p_first()
                                         : (prev ? model.succ_after_success() : model.succ_after_failure());
                prev = rng.bernoulli(ps);
                t.push(prev);
            }
            hist.add(t.value(), 1.0);
        }
    }
    Pmf out;
    out.offset = 0;
    out.probs = std::move(hist.mass);
    const double scale = 1.0 / static_cast<double>(reps);
    for (double& x : out.probs) x *= scale;
    out.tail = hist.tail * scale;
    return out;
}

std::vector<std::size_t> sample_waiting_times(const TrialModel& model, unsigned k, std::size_t reps,
                                              SeededStream& stream) {
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
    std::vector<std::size_t> out;
    out.reserve(reps);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        std::size_t trials = 0;
        unsigned block = 0;
        bool prev = false;
        while (block < k) {
            const double ps = trials == 0 ? model.p_first()
                                          : (prev ? model.succ_after_success() : model.succ_after_failure());
            prev = stream.bernoulli(ps);
            ++trials;
            block = prev ? block + 1 : 0;
        }
        out.push_back(trials);
    }
    return out;
}

}  // namespace runstat
