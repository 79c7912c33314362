#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "infosum/clt_experiments.hpp"

using namespace infosum;

namespace {

const DistributionSpec kMix =
    DistributionSpec::mixture({{0.5, -1.0, 0.25}, {0.5, 1.0, 0.25}});
const DistributionSpec kWideMix =
    DistributionSpec::mixture({{0.5, -2.0, 1.0}, {0.5, 2.0, 1.0}});

void check_row_shape(const CltSweepResult& r, int n_max) {
    REQUIRE(r.rows.size() == static_cast<std::size_t>(n_max));
    for (int k = 0; k < n_max; ++k) {
        const CltSweepRow& row = r.rows[static_cast<std::size_t>(k)];
        CHECK(row.n == k + 1);
        CHECK(row.entropy_power == std::exp(2.0 * row.entropy));
    }
    CHECK(r.rows.front().gap_prev == 0.0);
}

}  // namespace

TEST_CASE("iid sweep: the normal family is the fixed point") {
    const CltSweepResult r =
        iid_info_sequence(DistributionSpec::gaussian(0, 1), 6);
    check_row_shape(r, 6);
    for (const CltSweepRow& row : r.rows) {
        CHECK(row.entropy == doctest::Approx(1.4189385332046727).epsilon(1e-4));
        CHECK(row.fisher == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(row.variance == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(std::abs(row.gap_prev) <= 1e-4);
        CHECK(row.entropy_nondecreasing);
        CHECK(row.fisher_nonincreasing);
        CHECK(row.fisher_defined);
    }
}

TEST_CASE("iid sweep: smoothed uniform marches up in entropy, down in D") {
    const CltSweepResult coarse =
        iid_info_sequence(DistributionSpec::uniform(0, 1), 6, 0.01);
    const CltSweepResult fine = iid_info_sequence(
        DistributionSpec::uniform(0, 1), 6, 0.01, GridConfig{8.0, 8192});
    check_row_shape(coarse, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(std::abs(coarse.rows[k].entropy - fine.rows[k].entropy) < 1e-3);
        CHECK(coarse.rows[k].fisher ==
              doctest::Approx(fine.rows[k].fisher).epsilon(1e-3));
        CHECK(coarse.rows[k].variance ==
              doctest::Approx(1.0 / 12.0 + 0.01).epsilon(1e-3));
    }
    for (const CltSweepResult* r : {&coarse, &fine}) {
        for (std::size_t k = 1; k < 6; ++k) {
            CHECK(r->rows[k].gap_prev > 1e-5);  // strictly up, beyond noise
            CHECK(r->rows[k].fisher < r->rows[k - 1].fisher);
            CHECK(r->rows[k].rel_entropy_gaussian <
                  r->rows[k - 1].rel_entropy_gaussian);
            CHECK(r->rows[k].entropy_nondecreasing);
            CHECK(r->rows[k].fisher_nonincreasing);
        }
        CHECK(r->rows.back().rel_entropy_gaussian < 1e-3);
    }
}

TEST_CASE("iid sweep: bimodal mixture Fisher information decays") {
    const CltSweepResult coarse = iid_info_sequence(kMix, 6);
    const CltSweepResult fine =
        iid_info_sequence(kMix, 6, 0.0, GridConfig{8.0, 8192});
    check_row_shape(coarse, 6);
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(coarse.rows[k].fisher ==
              doctest::Approx(fine.rows[k].fisher).epsilon(1e-3));
    for (const CltSweepResult* r : {&coarse, &fine}) {
        for (std::size_t k = 1; k < 6; ++k) {
            CHECK(r->rows[k].fisher < r->rows[k - 1].fisher);
            CHECK(r->rows[k].gap_prev > 1e-5);
        }
        // Y_n keeps variance 1.25, so I is pinned above 1/1.25.
        CHECK(r->rows.back().fisher > 0.8);
        CHECK(r->rows.back().fisher < r->rows.front().fisher / 3.0);
    }
}

TEST_CASE("iid sweep: argument validation") {
    CHECK_THROWS_AS(iid_info_sequence(kMix, 1), config_error);
    CHECK_THROWS_AS(iid_info_sequence(kMix, 13), config_error);
}

TEST_CASE("monotone_on_average: distinct normals sit on the equality surface") {
    const SumSystem sys({DistributionSpec::gaussian(0, 1),
                         DistributionSpec::gaussian(0, 2),
                         DistributionSpec::gaussian(0, 3)});
    const SubsetCollection c = standard_collection("leave_one_out", 3);
    const InequalityReport r = monotone_on_average(sys, c);
    CHECK(r.satisfied);
    CHECK(r.equation == "linc");
    CHECK(r.lhs == doctest::Approx(1.4189385332046727).epsilon(1e-3));

    const auto eta = r.metadata.at("eta").get<std::vector<double>>();
    // v = (3, 4, 5) over r * v_n = 12, sets in canonical order.
    REQUIRE(eta.size() == 3);
    CHECK(eta[0] == doctest::Approx(3.0 / 12.0).epsilon(1e-12));
    CHECK(eta[1] == doctest::Approx(4.0 / 12.0).epsilon(1e-12));
    CHECK(eta[2] == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
    double eta_sum = 0.0;
    for (double e : eta) eta_sum += e;
    CHECK(std::abs(eta_sum - 1.0) < 1e-12);

    for (const char* key : {"entropy", "inv_fisher", "entropy_power"}) {
        const auto& v = r.metadata.at(key);
        const double gap = v.at("gap").get<double>();
        CHECK(std::abs(gap) <= v.at("tolerance").get<double>());
    }
    CHECK(r.metadata.at("inv_fisher").at("lhs").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.metadata.at("entropy_power").at("lhs").get<double>() ==
          doctest::Approx(2.0 * std::numbers::pi * std::numbers::e)
              .epsilon(1e-3));
}

TEST_CASE("monotone_on_average: mixture system keeps a strict gap") {
    const SubsetCollection c = standard_collection("all_m_subsets", 3, 2);
    const SumSystem coarse({kMix, kMix, kWideMix});
    const SumSystem fine({kMix, kMix, kWideMix}, GridConfig{8.0, 8192});
    const InequalityReport a = monotone_on_average(coarse, c);
    const InequalityReport b = monotone_on_average(fine, c);
    CHECK(a.gap > 10.0 * a.tolerance);
    CHECK(std::abs(a.lhs - b.lhs) < 1e-3);
    CHECK(std::abs(a.rhs - b.rhs) < 1e-3);
    for (const char* key : {"entropy", "inv_fisher", "entropy_power"}) {
        CHECK(a.metadata.at(key).at("gap").get<double>() > 0.0);
        CHECK(b.metadata.at(key).at("gap").get<double>() > 0.0);
    }

    CHECK_THROWS_AS(
        monotone_on_average(coarse, standard_collection("sliding_window", 3, 2)),
        precondition_violation);
}

TEST_CASE("standardization identity: H(V_n) = H(T_n) - log(v_n)/2") {
    const SumSystem sys({kMix, kMix, kWideMix});
    const std::vector<int> full = sys.full_set();
    const double vn = sys.subset_variance(full);
    const GridDensity v_total =
        scale_density(sys.subset_sum(full), 1.0 / std::sqrt(vn));
    CHECK(entropy(v_total) ==
          doctest::Approx(sys.subset_entropy(full) - 0.5 * std::log(vn))
              .epsilon(1e-6));
}

TEST_CASE("averaged entropy monotonicity holds for mixed non-identical inputs") {
    // H(T_4/2) >= mean over 2-subsets of H(T^(s)/sqrt(2)) via the balanced
    // collection of all 2-subsets.
    const SumSystem sys({DistributionSpec::gaussian(0, 1),
                         DistributionSpec::uniform(0, 1), kMix,
                         DistributionSpec::gaussian(2, 0.5)});
    const double lhs =
        entropy(scale_density(sys.subset_sum(sys.full_set()), 0.5));
    const SubsetCollection c = standard_collection("all_m_subsets", 4, 2);
    double rhs = 0.0;
    for (const auto& s : c.sets)
        rhs += entropy(scale_density(sys.subset_sum(s), 1.0 / std::sqrt(2.0)));
    rhs /= static_cast<double>(c.sets.size());
    CHECK(lhs >= rhs - 1e-6);
}

TEST_CASE("halton radical inverses match hand values") {
    CHECK(halton_point(0, 2) == 0.0);
    CHECK(halton_point(1, 2) == 0.5);
    CHECK(halton_point(2, 2) == 0.25);
    CHECK(halton_point(3, 2) == 0.75);
    CHECK(halton_point(4, 2) == 0.125);
    CHECK(halton_point(1, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(halton_point(5, 3) == doctest::Approx(7.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("projection gap: linear scores project exactly") {
    const SumSystem sys(std::vector<DistributionSpec>(
        3, DistributionSpec::gaussian(0, 1)));
    const double g = projection_gap(sys, standard_collection("leave_one_out", 3),
                                    WeightVector::uniform(3), 4096, 7);
    CHECK(g >= 0.0);
    CHECK(g < 1e-3);
}

TEST_CASE("projection gap: point mass on the full set is exactly zero") {
    const SumSystem sys(std::vector<DistributionSpec>(
        3, DistributionSpec::gaussian(0, 1)));
    const SubsetCollection c =
        SubsetCollection::make(3, {{1}, {2}, {3}, {1, 2, 3}});
    // Canonical set order is lexicographic: {1,2,3} is the second entry.
    REQUIRE(c.sets[1] == std::vector<int>{1, 2, 3});
    CHECK(projection_gap(sys, c, WeightVector::make({0, 1, 0, 0}), 1024, 3) ==
          0.0);
}

TEST_CASE("projection gap: mixtures leave residual, Pythagoras closes") {
    const SumSystem sys({kMix, kMix, kMix});
    const SubsetCollection c = standard_collection("leave_one_out", 3);
    const WeightVector w = WeightVector::uniform(3);
    const ProjectionGapResult r = projection_gap_detail(sys, c, w, 4096, 7);
    CHECK(r.gap > 0.05);
    CHECK(r.gap < 0.15);
    CHECK(r.seed == 7);
    CHECK(r.points == 4096);
    // E[(combo - rho_n)^2] + I(T_n) = E[combo^2] for unit-sum weights.
    const double itot = fisher_information(sys.total());
    CHECK(std::abs(r.gap + itot - r.combo_second_moment) <= 5e-2);

    // Deterministic for a fixed seed; stable across seeds.
    CHECK(projection_gap(sys, c, w, 4096, 7) == r.gap);
    CHECK(std::abs(projection_gap(sys, c, w, 4096, 8) - r.gap) < 5e-2);
}

TEST_CASE("projection gap: argument validation") {
    const SumSystem sys(std::vector<DistributionSpec>(
        2, DistributionSpec::gaussian(0, 1)));
    const SubsetCollection c = standard_collection("singletons", 2);
    CHECK_THROWS_AS(projection_gap(sys, c, WeightVector::uniform(3)),
                    config_error);
    CHECK_THROWS_AS(projection_gap(sys, c, WeightVector::uniform(2), 8),
                    config_error);
}
