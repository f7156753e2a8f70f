#include "sumprod/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace sumprod {

namespace {

constexpr std::uint64_t kFastLimit = std::uint64_t{1} << 62;

// Upper bound on prod(a_i) * sum(a_i) over the search box (AM-GM).
BigInt value_bound(const SearchSpec& spec, std::uint64_t a_max) {
    const auto k = static_cast<unsigned long>(spec.s - 1);
    const BigInt n_max(static_cast<unsigned long>(spec.n_max));
    BigInt by_mean;
    mpz_pow_ui(by_mean.get_mpz_t(), n_max.get_mpz_t(), k);
    BigInt denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), k, k);
    by_mean = (by_mean + denom - 1) / denom;
    BigInt by_box;
    mpz_ui_pow_ui(by_box.get_mpz_t(), static_cast<unsigned long>(a_max), k);
    return std::min(by_mean, by_box) * n_max;
}

// Enumerates nondecreasing tuples for one leading part. Value is either
// std::uint64_t (bounded fast path) or BigInt.
template <typename Value, typename IsPower>
class Enumerator {
public:
    Enumerator(const SearchSpec& spec, std::uint64_t a_max, IsPower is_power, std::vector<DioSolution>& out)
        : spec_(spec), a_max_(a_max), is_power_(is_power), out_(out), parts_(static_cast<std::size_t>(spec.s - 1)) {}

    void run_leading(std::uint64_t a1) {
        parts_[0] = a1;
        descend(1, a1, Value(a1), a1);
    }

private:
    void descend(std::size_t depth, std::uint64_t sum, const Value& prod, std::uint64_t prev) {
        const std::size_t slots = parts_.size() - depth;
        if (slots == 1) {
            // Final part: sum + a <= n_max.
            const std::uint64_t hi = std::min(a_max_, spec_.n_max - sum);
            for (std::uint64_t a = prev; a <= hi; ++a) {
                const std::uint64_t n = sum + a;
                if (is_power_(Value(prod * Value(a) * Value(n)))) {
                    parts_[depth] = a;
                    emit();
                }
            }
            return;
        }
        for (std::uint64_t a = prev; a <= a_max_ && sum + a * slots <= spec_.n_max; ++a) {
            parts_[depth] = a;
            descend(depth + 1, sum + a, Value(prod * Value(a)), a);
        }
    }

    void emit() {
        std::vector<BigInt> parts;
        parts.reserve(parts_.size());
        for (auto a : parts_) parts.emplace_back(static_cast<unsigned long>(a));
        auto sol = DioSolution::from_parts(spec_.s, std::move(parts));
        if (!sol) throw std::logic_error("search: power test accepted a non-solution");
        out_.push_back(std::move(*sol));
    }

    const SearchSpec& spec_;
    std::uint64_t a_max_;
    IsPower is_power_;
    std::vector<DioSolution>& out_;
    std::vector<std::uint64_t> parts_;
};

template <typename Value, typename IsPower>
std::vector<DioSolution> run_partitioned(const SearchSpec& spec, std::uint64_t a_max, const IsPower& is_power) {
    const std::uint64_t lead_max = std::min(a_max, spec.n_max / static_cast<std::uint64_t>(spec.s - 1));
    const unsigned jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(spec.jobs, lead_max)));
    std::vector<std::vector<DioSolution>> buckets(jobs);

    // Leading parts are dealt round-robin: small a1 carry most of the work.
    const auto worker = [&](unsigned id) {
        Enumerator<Value, IsPower> e(spec, a_max, is_power, buckets[id]);
        for (std::uint64_t a1 = 1 + id; a1 <= lead_max; a1 += jobs) e.run_leading(a1);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    }

    std::vector<DioSolution> all;
    for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

void SearchSpec::validate() const {
    if (s < 3) throw std::invalid_argument("search: s must be >= 3");
    if (n_max < static_cast<std::uint64_t>(s - 1)) throw std::invalid_argument("search: n_max must be >= s-1");
    if (jobs == 0) throw std::invalid_argument("search: jobs must be positive");
}

std::vector<DioSolution> enumerate_solutions(const SearchSpec& spec) {
    spec.validate();
    const std::uint64_t a_max = spec.a_max == 0 ? spec.n_max : std::min(spec.a_max, spec.n_max);

    const BigInt bound = value_bound(spec, a_max);
    if (!spec.force_bigint && bound < BigInt(static_cast<unsigned long>(kFastLimit))) {
        // Every value fits in 64 bits; look it up among the s-th powers.
        const std::uint64_t root_max = int_nth_root(bound, spec.s).get_ui();
        std::vector<std::uint64_t> powers;
        powers.reserve(root_max + 1);
        for (std::uint64_t b = 1; b <= root_max; ++b) {
            std::uint64_t p = 1;
            for (int i = 0; i < spec.s; ++i) p *= b;
            powers.push_back(p);
        }
        const auto is_power = [&powers](std::uint64_t v) { return std::binary_search(powers.begin(), powers.end(), v); };
        return run_partitioned<std::uint64_t>(spec, a_max, is_power);
    }

    const auto is_power = [s = spec.s](const BigInt& v) { return perfect_sth_power(v, s).has_value(); };
    return run_partitioned<BigInt>(spec, a_max, is_power);
}

bool MembershipReport::all_present() const {
    return std::all_of(rows.begin(), rows.end(), [](const MembershipRow& r) { return r.present; });
}

MembershipReport check_table_membership(const std::vector<DioSolution>& rows, const SearchSpec& spec) {
    const auto found = enumerate_solutions(spec);
    MembershipReport report;
    report.found_total = found.size();
    for (const auto& row : rows) {
        const bool present = std::binary_search(found.begin(), found.end(), row);
        report.rows.push_back({row, present});
    }
    return report;
}

}  // namespace sumprod
