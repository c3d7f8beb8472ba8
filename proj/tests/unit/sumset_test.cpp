#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/io.hpp"
#include "sumgrowth/sumset.hpp"

using namespace sumgrowth;

namespace {

PointSet to_set(const std::vector<oracle::Point>& pts, std::size_t d) {
    std::vector<IntVector> v;
    for (const auto& p : pts) {
        IntVector q;
        for (auto c : p) q.emplace_back(static_cast<long>(c));
        v.push_back(q);
    }
    return PointSet::from_points(d, v);
}

LatticeOperator to_op(const oracle::Matrix& m) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : m) {
        rows.emplace_back();
        for (auto c : r) rows.back().emplace_back(static_cast<long>(c));
    }
    return LatticeOperator::from_rows(rows);
}

oracle::Matrix random_matrix(std::mt19937_64& rng, std::size_t d, long long lo, long long hi) {
    std::uniform_int_distribution<long long> u(lo, hi);
    oracle::Matrix m(d, std::vector<long long>(d));
    for (auto& r : m)
        for (auto& c : r) c = u(rng);
    return m;
}

const SumsetKernel kAllKernels[] = {SumsetKernel::Auto, SumsetKernel::Runs, SumsetKernel::Pairs, SumsetKernel::Convolution,
                                    SumsetKernel::BigInteger};

}  // namespace

TEST(PointSet, SortedAndStrict) {
    auto a = PointSet::from_points(2, {{1, 0}, {0, 5}, {0, -1}});
    EXPECT_EQ(a.point(0), (IntVector{0, -1}));
    EXPECT_EQ(a.point(2), (IntVector{1, 0}));
    EXPECT_TRUE(a.contains({0, 5}));
    EXPECT_FALSE(a.contains({5, 0}));
    EXPECT_THROW(PointSet::from_points(1, {{1}, {1}}), Error);
    EXPECT_THROW(PointSet::from_points(2, {{1}}), Error);
    EXPECT_EQ(PointSet::collect(1, {{2}, {1}, {2}}).size(), 2u);
}

TEST(PointSet, BigCoordinates) {
    Integer huge("100000000000000000000000");
    auto a = PointSet::from_points(1, {{huge}, {-huge}, {0}});
    EXPECT_FALSE(a.compact());
    EXPECT_EQ(a.point(0)[0], -huge);
    EXPECT_TRUE(a.contains({huge}));
}

TEST(PointSet, BoxAndInterval) {
    EXPECT_EQ(PointSet::interval(4).size(), 4u);
    auto b = PointSet::box({0, 0}, {2, 1});
    EXPECT_EQ(b.size(), 6u);
    EXPECT_EQ(b.point(1), (IntVector{0, 1}));
}

TEST(Sumset, Examples) {
    auto s = t_sumset(PointSet::interval(3), LatticeOperator{{2}});
    EXPECT_EQ(s, PointSet::interval(7));

    auto grid = PointSet::box({0, 0}, {2, 2});
    auto s2 = t_sumset(grid, LatticeOperator{{0, 2}, {1, 0}});
    EXPECT_EQ(s2, PointSet::box({0, 0}, {6, 4}));

    auto single = PointSet::from_points(3, {{4, -2, 9}});
    EXPECT_EQ(t_sumset(single, LatticeOperator{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).size(), 1u);
}

TEST(Sumset, DimensionMismatch) {
    EXPECT_THROW(t_sumset(PointSet::interval(3), LatticeOperator::identity(2)), Error);
}

TEST(Sumset, RingExamples) {
    NumberRingContext two(IntPolynomial::parse("x-2"));
    EXPECT_EQ(ring_sumset(PointSet::interval(2), two), PointSet::interval(4));

    NumberRingContext root2(IntPolynomial::parse("x^2-2"));
    auto a = PointSet::from_points(2, {{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(ring_sumset(a, root2).size(), 8u);
    EXPECT_EQ(ring_sumset(PointSet::box({0, 0}, {2, 2}), root2).size(), 35u);
    EXPECT_EQ(root2.multiply({0, 1}), (IntVector{2, 0}));

    EXPECT_THROW(NumberRingContext(IntPolynomial::parse("x^2-1")), Error);
    EXPECT_THROW(NumberRingContext(IntPolynomial::parse("2*x-1")), Error);
}

TEST(Sumset, KernelsAgreeWithOracle) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 120; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 3);
        // Ranges keep the flattened sum box within the convolution limit.
        const long long r = d == 3 ? 5 : d == 2 ? 10 : 30;
        auto pts = oracle::random_points(rng, 1 + static_cast<std::size_t>(t % 40), d, -r, r);
        auto m = random_matrix(rng, d, -3 + (d == 3), 3 - (d == 3));
        const auto expected = oracle::naive_sumset_size(pts, m);
        const auto a = to_set(pts, d);
        const auto T = to_op(m);
        const PointSet reference = t_sumset(a, T, {1, SumsetKernel::BigInteger});
        EXPECT_EQ(reference.size(), expected);
        for (auto kernel : kAllKernels)
            for (unsigned threads : {1u, 3u}) EXPECT_EQ(t_sumset(a, T, {threads, kernel}), reference);
    }
}

TEST(Sumset, LargeCoordinatesFallBack) {
    Integer big("5000000000000000000000");
    auto a = PointSet::from_points(1, {{0}, {big}, {big * 3}});
    auto s = t_sumset(a, LatticeOperator{{2}});
    // {0, 1, 3} + 2 {0, 1, 3} = {0, 1, 2, 3, 5, 6, 7, 9}, scaled by big.
    EXPECT_EQ(s.size(), 8u);
    EXPECT_TRUE(s.contains({big * 9}));
    EXPECT_FALSE(s.compact());
}

TEST(Sumset, LongInterval) {
    const std::int64_t n = 200000;
    auto s = t_sumset(PointSet::interval(n), LatticeOperator{{2}});
    EXPECT_EQ(s.size(), static_cast<std::size_t>(3 * n - 2));
}

TEST(SumsetProperty, TranslationAndDilationInvariance) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> shift(-1000, 1000);
    for (int t = 0; t < 80; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 3);
        auto a = to_set(oracle::random_points(rng, 2 + static_cast<std::size_t>(t % 25), d, -20, 20), d);
        auto T = to_op(random_matrix(rng, d, -4, 4));
        const std::size_t base = t_sumset_size(a, T);
        IntVector x(d);
        for (auto& c : x) c = shift(rng);
        EXPECT_EQ(t_sumset_size(a.translated(x), T), base);
        for (long s : {-3L, 2L, 7L}) EXPECT_EQ(t_sumset_size(a.scaled(s), T), base);
    }
}

TEST(SumsetProperty, ThreadDeterminism) {
    std::mt19937_64 rng(8);
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
    for (int t = 0; t < 20; ++t) {
        auto a = to_set(oracle::random_points(rng, 300, 2, -400, 400), 2);
        auto T = to_op(random_matrix(rng, 2, -5, 5));
        auto one = t_sumset(a, T, {1, SumsetKernel::Pairs});
        EXPECT_EQ(t_sumset(a, T, {2, SumsetKernel::Pairs}), one);
        EXPECT_EQ(t_sumset(a, T, {hw, SumsetKernel::Pairs}), one);
    }
}

TEST(SumsetProperty, CauchyDavenportFloor) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 300; ++t) {
        auto pts = oracle::random_points(rng, 1 + static_cast<std::size_t>(t % 50), 1, -100, 100);
        auto a = to_set(pts, 1);
        for (long sign : {1L, -1L})
            EXPECT_GE(t_sumset_size(a, LatticeOperator{{sign}}), 2 * a.size() - 1);
    }
}

TEST(RatioReport, Examples) {
    auto r = ratio_report(PointSet::interval(10), LatticeOperator{{2}});
    EXPECT_EQ(r.set_size, 10u);
    EXPECT_EQ(r.sumset_size, 28u);
    EXPECT_EQ(r.ratio, Rational(14, 5));
    EXPECT_EQ(r.reference.lo(), 3);
    EXPECT_EQ(r.gap, Rational(-1, 5));
    EXPECT_EQ(r.csv_row(), "10,28,2.8,3,3,-0.2");

    auto one = ratio_report(PointSet::interval(1), LatticeOperator{{2}});
    EXPECT_EQ(one.ratio, 1);
    EXPECT_LT(one.gap, 0);

    auto g = ratio_report(PointSet::box({0, 0}, {2, 2}), LatticeOperator{{0, 2}, {1, 0}});
    EXPECT_EQ(g.ratio, Rational(35, 9));
    EXPECT_NEAR(g.reference.midpoint().get_d(), 5.828427, 1e-6);
    EXPECT_NE(g.json().find("\"sumset_size\":35"), std::string::npos);
}

TEST(BruteForce, Examples) {
    auto box = PointSet::interval(4);
    LatticeOperator two{{2}};
    auto pairs = brute_force_min(2, box, two, 100);
    EXPECT_EQ(pairs.min_size, 4u);
    EXPECT_EQ(pairs.subsets_checked, 6u);
    auto triples = brute_force_min(3, box, two, 100);
    EXPECT_EQ(triples.min_size, 7u);
    EXPECT_EQ(triples.witness, PointSet::interval(3));
    EXPECT_EQ(brute_force_min(1, box, two, 100).min_size, 1u);
}

TEST(BruteForce, Budget) {
    try {
        brute_force_min(4, PointSet::interval(20), LatticeOperator{{2}}, 100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(BruteForceProperty, EverySubsetMatchesRecount) {
    // Exhaustive cross-check on a 2-d box: the brute-force minimum equals the
    // minimum of naive recounts over the same subsets.
    oracle::Matrix m = {{1, 1}, {1, 0}};
    std::vector<oracle::Point> box;
    for (long long x = 0; x < 3; ++x)
        for (long long y = 0; y < 2; ++y) box.push_back({x, y});
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = i + 1; j < box.size(); ++j)
            for (std::size_t k = j + 1; k < box.size(); ++k)
                best = std::min(best, oracle::naive_sumset_size({box[i], box[j], box[k]}, m));
    auto r = brute_force_min(3, to_set(box, 2), to_op(m), 1000);
    EXPECT_EQ(r.min_size, best);
    EXPECT_EQ(r.subsets_checked, 20u);
}

TEST(PointSetIo, RoundTrip) {
    std::istringstream in("# a comment\n3 4\n\n-1 2  # trailing\n0 0\n");
    auto a = read_point_set(in);
    EXPECT_EQ(a.size(), 3u);
    std::ostringstream out;
    write_point_set(out, a);
    EXPECT_EQ(out.str(), "-1 2\n0 0\n3 4\n");
}

TEST(PointSetIo, Rejections) {
    std::istringstream dup("1 2\n1 2\n");
    EXPECT_THROW(read_point_set(dup), Error);
    std::istringstream ragged("1 2\n3\n");
    EXPECT_THROW(read_point_set(ragged), Error);
    std::istringstream junk("1 x\n");
    EXPECT_THROW(read_point_set(junk), Error);
    std::istringstream empty("# nothing\n");
    EXPECT_THROW(read_point_set(empty), Error);
}

TEST(MatrixIo, ReadsSquare) {
    std::istringstream in("0 2\n1 0\n");
    EXPECT_EQ(read_matrix(in), (LatticeOperator{{0, 2}, {1, 0}}));
    std::istringstream bad("1 2 3\n4 5 6\n");
    EXPECT_THROW(read_matrix(bad), Error);
}
