#include "sumgrowth/sumset.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ntt.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"

namespace sumgrowth {

namespace {

using i128 = __int128;

constexpr i128 kI64Min = static_cast<i128>(INT64_MIN);
constexpr i128 kI64Max = static_cast<i128>(INT64_MAX);
// Flattened keys stay below 2^62 so that key sums never overflow.
constexpr i128 kKeyLimit = static_cast<i128>(1) << 62;

/// T applied to every point of a compact set in 64-bit words, or nothing if a
/// coordinate overflows.
std::optional<std::vector<std::int64_t>> apply_compact(const PointSet& a, const LatticeOperator& t) {
    if (!a.compact() || !t.fits_int64()) return std::nullopt;
    const std::size_t d = a.dimension();
    std::vector<std::int64_t> m(d * d);
    for (std::size_t i = 0; i < d * d; ++i) m[i] = t.entries()[i].get_si();
    const auto& src = a.flat();
    std::vector<std::int64_t> out(src.size());
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t i = 0; i < d; ++i) {
            i128 acc = 0;
            for (std::size_t j = 0; j < d; ++j) {
                acc += static_cast<i128>(m[i * d + j]) * src[p * d + j];
                if (acc < 4 * kI64Min || acc > 4 * kI64Max) return std::nullopt;
            }
            if (acc < kI64Min || acc > kI64Max) return std::nullopt;
            out[p * d + i] = static_cast<std::int64_t>(acc);
        }
    return out;
}

/// Mixed-radix flattening of the sum box: the key of a + b is key(a) + key(b),
/// and key order coincides with lexicographic order of the sums.
struct Flattening {
    std::size_t d = 0;
    std::vector<std::int64_t> lo_a, lo_b;
    std::vector<i128> width, stride;
    i128 length = 0;  // number of keys in the sum box
    i128 span_a = 0, span_b = 0;

    std::uint64_t key(const std::int64_t* p, const std::vector<std::int64_t>& lo) const {
        i128 k = 0;
        for (std::size_t i = 0; i < d; ++i) k += static_cast<i128>(p[i] - lo[i]) * stride[i];
        return static_cast<std::uint64_t>(k);
    }

    void decode(std::uint64_t key, std::int64_t* out) const {
        i128 k = key;
        for (std::size_t i = 0; i < d; ++i) {
            const i128 q = k / stride[i];
            k -= q * stride[i];
            out[i] = static_cast<std::int64_t>(q + lo_a[i] + lo_b[i]);
        }
    }
};

std::optional<Flattening> flatten(std::size_t d, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    Flattening f;
    f.d = d;
    f.lo_a.assign(d, INT64_MAX);
    f.lo_b.assign(d, INT64_MAX);
    std::vector<std::int64_t> hi_a(d, INT64_MIN), hi_b(d, INT64_MIN);
    for (std::size_t i = 0; i < a.size(); ++i) {
        f.lo_a[i % d] = std::min(f.lo_a[i % d], a[i]);
        hi_a[i % d] = std::max(hi_a[i % d], a[i]);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        f.lo_b[i % d] = std::min(f.lo_b[i % d], b[i]);
        hi_b[i % d] = std::max(hi_b[i % d], b[i]);
    }
    f.width.resize(d);
    f.stride.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        // Sums must fit in 64 bits for decoding.
        const i128 s_lo = static_cast<i128>(f.lo_a[i]) + f.lo_b[i];
        const i128 s_hi = static_cast<i128>(hi_a[i]) + hi_b[i];
        if (s_lo < kI64Min || s_hi > kI64Max) return std::nullopt;
        f.width[i] = s_hi - s_lo + 1;
        if (f.width[i] > kKeyLimit) return std::nullopt;
    }
    i128 s = 1;
    for (std::size_t i = d; i-- > 0;) {
        f.stride[i] = s;
        s *= f.width[i];
        if (s > kKeyLimit) return std::nullopt;
    }
    f.length = s;
    for (std::size_t i = 0; i < d; ++i) {
        f.span_a += static_cast<i128>(hi_a[i] - f.lo_a[i]) * f.stride[i];
        f.span_b += static_cast<i128>(hi_b[i] - f.lo_b[i]) * f.stride[i];
    }
    return f;
}

PointSet decode_keys(const Flattening& f, const std::vector<std::uint64_t>& keys) {
    std::vector<std::int64_t> flat(keys.size() * f.d);
    for (std::size_t i = 0; i < keys.size(); ++i) f.decode(keys[i], &flat[i * f.d]);
    // Keys were ascending, so rows are already in lexicographic order.
    return PointSet::from_flat(f.d, std::move(flat), true);
}

std::vector<std::uint64_t> keys_of(const Flattening& f, const std::vector<std::int64_t>& pts,
                                   const std::vector<std::int64_t>& lo) {
    const std::size_t n = pts.size() / f.d;
    std::vector<std::uint64_t> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = f.key(&pts[i * f.d], lo);
    return k;
}

using Run = std::pair<std::uint64_t, std::uint64_t>;  // inclusive key range

std::vector<Run> runs_of(const std::vector<std::uint64_t>& keys) {
    std::vector<Run> runs;
    for (auto k : keys) {
        if (!runs.empty() && runs.back().second + 1 == k) runs.back().second = k;
        else runs.emplace_back(k, k);
    }
    return runs;
}

/// Sorts ranges and merges overlapping or adjacent ones.
void merge_runs(std::vector<Run>& r) {
    std::sort(r.begin(), r.end());
    std::size_t w = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (w > 0 && r[i].first <= r[w - 1].second + 1) r[w - 1].second = std::max(r[w - 1].second, r[i].second);
        else r[w++] = r[i];
    }
    r.resize(w);
}

PointSet runs_kernel(const Flattening& f, const std::vector<Run>& ra, const std::vector<Run>& rb, unsigned threads) {
    // Run sums [a1 + b1, a2 + b2] are full key intervals of the sum box.
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rb.size())));
    std::vector<std::vector<Run>> parts(threads);
    auto work = [&](unsigned w) {
        const std::size_t begin = rb.size() * w / threads, end = rb.size() * (w + 1) / threads;
        auto& out = parts[w];
        out.reserve(ra.size() * (end - begin));
        for (std::size_t j = begin; j < end; ++j)
            for (const auto& x : ra) out.emplace_back(x.first + rb[j].first, x.second + rb[j].second);
        merge_runs(out);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    std::vector<Run> all = std::move(parts[0]);
    for (unsigned w = 1; w < threads; ++w) all.insert(all.end(), parts[w].begin(), parts[w].end());
    merge_runs(all);
    std::size_t total = 0;
    for (const auto& r : all) total += static_cast<std::size_t>(r.second - r.first + 1);
    std::vector<std::int64_t> flat(total * f.d);
    std::size_t row = 0;
    for (const auto& r : all)
        for (std::uint64_t k = r.first;; ++k) {
            f.decode(k, &flat[row++ * f.d]);
            if (k == r.second) break;
        }
    return PointSet::from_flat(f.d, std::move(flat), true);
}

PointSet convolution_kernel(const Flattening& f, const std::vector<std::uint64_t>& ka,
                            const std::vector<std::uint64_t>& kb) {
    // Each output coefficient counts pairs (a, Tb) with distinct Tb, so it is at
    // most |A| < p and never wraps to zero.
    require(ka.size() < detail::kNttPrime, "set too large for the convolution kernel");
    std::vector<std::uint32_t> ia(static_cast<std::size_t>(f.span_a) + 1, 0), ib(static_cast<std::size_t>(f.span_b) + 1, 0);
    for (auto k : ka) ia[k] = 1;
    for (auto k : kb) ib[k] = 1;
    auto c = detail::convolve_mod(std::move(ia), std::move(ib));
    std::vector<std::uint64_t> keys;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) keys.push_back(i);
    return decode_keys(f, keys);
}

PointSet pairs_kernel(const Flattening& f, const std::vector<std::uint64_t>& ka, const std::vector<std::uint64_t>& kb,
                      unsigned threads) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(kb.size(), 1))));
    std::vector<std::vector<std::uint64_t>> parts(threads);
    auto work = [&](unsigned w) {
        const std::size_t begin = kb.size() * w / threads, end = kb.size() * (w + 1) / threads;
        absl::flat_hash_set<std::uint64_t> seen;
        seen.reserve(std::min<std::size_t>(ka.size() * (end - begin), ka.size() + kb.size() + (1u << 20)));
        for (std::size_t j = begin; j < end; ++j)
            for (auto x : ka) seen.insert(x + kb[j]);
        parts[w].assign(seen.begin(), seen.end());
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> keys;
    for (auto& p : parts) keys.insert(keys.end(), p.begin(), p.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return decode_keys(f, keys);
}

PointSet big_kernel(const PointSet& a, const LatticeOperator& t) {
    const std::size_t d = a.dimension();
    std::vector<IntVector> pts = a.points();
    std::set<IntVector> tb;
    for (const auto& p : pts) tb.insert(t.apply(p));
    std::set<IntVector> sums;
    for (const auto& b : tb)
        for (const auto& x : pts) {
            IntVector s(d);
            for (std::size_t k = 0; k < d; ++k) s[k] = x[k] + b[k];
            sums.insert(std::move(s));
        }
    return PointSet::from_points(d, std::vector<IntVector>(sums.begin(), sums.end()));
}

}  // namespace

PointSet t_sumset(const PointSet& a, const LatticeOperator& t, const SumsetOptions& opts) {
    require(a.dimension() == t.dimension(), "point set and operator dimensions differ");
    require(opts.threads >= 1, "thread count must be at least 1");
    if (a.empty()) return PointSet(a.dimension());
    const std::size_t d = a.dimension();
    if (opts.kernel != SumsetKernel::BigInteger) {
        if (auto tb_flat = apply_compact(a, t)) {
            const PointSet tb = PointSet::from_flat(d, std::move(*tb_flat));
            if (auto f = flatten(d, a.flat(), tb.flat())) {
                const auto ka = keys_of(*f, a.flat(), f->lo_a);
                const auto kb = keys_of(*f, tb.flat(), f->lo_b);
                const i128 conv_len = f->span_a + f->span_b + 1;
                const bool conv_ok = conv_len <= (static_cast<i128>(1) << detail::kNttMaxLog) && ka.size() < detail::kNttPrime;
                const auto ra = runs_of(ka), rb = runs_of(kb);
                SumsetKernel kernel = opts.kernel;
                if (kernel == SumsetKernel::Auto) {
                    // Rough operation counts of each kernel.
                    const double run_pairs = static_cast<double>(ra.size()) * static_cast<double>(rb.size());
                    const double runs_cost = run_pairs * (std::log2(run_pairs + 1) + 2);
                    const double pair_cost = 8.0 * static_cast<double>(ka.size()) * static_cast<double>(kb.size());
                    double conv_cost = HUGE_VAL;
                    if (conv_ok) {
                        const double n = std::ldexp(1.0, static_cast<int>(std::ceil(std::log2(static_cast<double>(conv_len)))));
                        conv_cost = 3.0 * n * std::log2(n) + n;
                    }
                    kernel = SumsetKernel::Pairs;
                    double best = pair_cost;
                    // Run lists are materialized, so cap their memory.
                    if (run_pairs <= 64e6 && runs_cost < best) kernel = SumsetKernel::Runs, best = runs_cost;
                    if (conv_cost < best) kernel = SumsetKernel::Convolution;
                }
                switch (kernel) {
                    case SumsetKernel::Runs: return runs_kernel(*f, ra, rb, opts.threads);
                    case SumsetKernel::Convolution:
                        require(conv_ok, "sum box too large for the convolution kernel");
                        return convolution_kernel(*f, ka, kb);
                    default: return pairs_kernel(*f, ka, kb, opts.threads);
                }
            }
        }
        require(opts.kernel != SumsetKernel::Convolution, "coordinates too large for the convolution kernel");
    }
    return big_kernel(a, t);
}

std::size_t t_sumset_size(const PointSet& a, const LatticeOperator& t, const SumsetOptions& opts) {
    return t_sumset(a, t, opts).size();
}

NumberRingContext::NumberRingContext(IntPolynomial minimal_polynomial) : f_(std::move(minimal_polynomial)) {
    require(f_.degree() >= 1 && f_.is_monic(), "minimal polynomial must be monic and nonconstant");
    require(is_irreducible(f_), "minimal polynomial must be irreducible");
    companion_ = LatticeOperator::companion(f_);
}

PointSet ring_sumset(const PointSet& a, const NumberRingContext& ctx, const SumsetOptions& opts) {
    return t_sumset(a, ctx.companion(), opts);
}

std::string RatioReport::csv_header() const { return "set_size,sumset_size,ratio,h_circ_lo,h_circ_hi,gap"; }

std::string RatioReport::csv_row(int digits) const {
    std::ostringstream os;
    os << set_size << ',' << sumset_size << ',' << decimal_string(ratio, digits) << ','
       << reference.lo_string(digits) << ',' << reference.hi_string(digits) << ',' << decimal_string(gap, digits);
    return os.str();
}

std::string RatioReport::json(int digits) const {
    nlohmann::ordered_json j;
    j["set_size"] = set_size;
    j["sumset_size"] = sumset_size;
    j["ratio"] = decimal_string(ratio, digits);
    j["ratio_exact"] = ratio.get_str();
    j["h_circ_lo"] = reference.lo_string(digits);
    j["h_circ_hi"] = reference.hi_string(digits);
    j["gap"] = decimal_string(gap, digits);
    return j.dump();
}

RatioReport ratio_report(const PointSet& a, const LatticeOperator& t, const Rational& tol, const SumsetOptions& opts) {
    require(!a.empty(), "ratio of an empty set is undefined");
    RatioReport r;
    r.set_size = a.size();
    r.sumset_size = t_sumset_size(a, t, opts);
    r.ratio = Rational(Integer(static_cast<unsigned long>(r.sumset_size)), Integer(static_cast<unsigned long>(r.set_size)));
    r.ratio.canonicalize();
    r.reference = h_circ_of_operator(t, tol);
    r.gap = r.ratio - r.reference.midpoint();
    return r;
}

BruteForceResult brute_force_min(std::size_t n, const PointSet& box, const LatticeOperator& t, std::uint64_t budget) {
    require(n >= 1, "subset size must be positive");
    require(n <= box.size(), "subset size exceeds the box");
    require(box.dimension() == t.dimension(), "point set and operator dimensions differ");
    Integer count;
    mpz_bin_uiui(count.get_mpz_t(), box.size(), n);
    if (count > Integer(static_cast<unsigned long>(budget)))
        fail(ErrorKind::BudgetExceeded, "C(" + std::to_string(box.size()) + ", " + std::to_string(n) + ") = " +
                                            count.get_str() + " subsets exceed the budget " + std::to_string(budget));
    const std::size_t d = box.dimension();
    const std::vector<IntVector> all = box.points();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    BruteForceResult best;
    bool have = false;
    SumsetOptions opts;
    opts.kernel = SumsetKernel::Pairs;
    while (true) {
        std::vector<IntVector> pts;
        pts.reserve(n);
        for (auto i : idx) pts.push_back(all[i]);
        PointSet sub = PointSet::from_points(d, pts);
        const std::size_t s = sub.compact() ? t_sumset_size(sub, t, opts) : t_sumset_size(sub, t);
        ++best.subsets_checked;
        if (!have || s < best.min_size) {
            best.min_size = s;
            best.witness = std::move(sub);
            have = true;
        }
        // Next combination in lexicographic order.
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == all.size() - n + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

}  // namespace sumgrowth
