// Copyright 2026 The pmx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The OpenMP kernels against their serial references.

#include <gtest/gtest.h>
#include <omp.h>

#include <sstream>

#include "pmx/bound_optimizer.hpp"
#include "pmx/werner_scan.hpp"

namespace pmx {
namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
   protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

   private:
    int saved_ = 1;
};

TEST_P(ThreadCount, OptimizerMatchesSerial) {
    OptimizerConfig cfg;
    cfg.restarts = 2;
    cfg.max_iterations = 400;
    for (const ProcessMatrix &w : {make_ocb(), make_werner({-0.4, 0.7})}) {
        const auto par = maximize_success(w, cfg);
        const auto ser = maximize_success_serial(w, cfg);
        EXPECT_EQ(par.best_value, ser.best_value);
        EXPECT_EQ(par.f_mask, ser.f_mask);
        EXPECT_EQ(par.g_mask, ser.g_mask);
        EXPECT_EQ(par.best_restart, ser.best_restart);
        EXPECT_EQ(par.restart_bests, ser.restart_bests);
        EXPECT_EQ(par.evaluations, ser.evaluations);
        EXPECT_EQ(par.best.alice.m[0], ser.best.alice.m[0]);
        EXPECT_EQ(par.best.bob.t, ser.best.bob.t);
    }
}

TEST_P(ThreadCount, ScanMatchesSerialByteForByte) {
    std::ostringstream par, ser;
    write_scan_csv(par, scan_werner(31));
    write_scan_csv(ser, scan_werner_serial(31));
    EXPECT_EQ(par.str(), ser.str());
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));

TEST(Scan, RowsFollowGridOrder) {
    const auto rows = scan_werner(5);
    ASSERT_EQ(rows.size(), 25u);
    EXPECT_EQ(rows[0].eta1, -1.0);
    EXPECT_EQ(rows[0].eta2, -1.0);
    EXPECT_EQ(rows[1].eta2, -0.5);
    EXPECT_EQ(rows[5].eta1, -0.5);
    EXPECT_EQ(rows[12].eta1, 0.0);
    EXPECT_EQ(rows[12].eta2, 0.0);
    EXPECT_THROW(scan_werner(1), std::invalid_argument);
    EXPECT_THROW(scan_werner_serial(0), std::invalid_argument);
}

TEST(Scan, SpecialPoints) {
    const auto origin = scan_point(0, 0);
    EXPECT_TRUE(origin.psd);
    EXPECT_TRUE(*origin.separable);
    EXPECT_EQ(*origin.distance, 0.0);
    EXPECT_NEAR(*origin.p_succ, 0.5, 1e-12);

    const double r = 1 / std::sqrt(2.0);
    const auto rim = scan_point(r, r);
    EXPECT_TRUE(rim.psd);
    EXPECT_FALSE(*rim.separable);
    EXPECT_NEAR(*rim.distance, 0.085786, 1e-6);
    EXPECT_NEAR(*rim.p_succ, 0.853553, 1e-6);

    const auto outside = scan_point(0.9, 0.9);
    EXPECT_FALSE(outside.psd);
    EXPECT_FALSE(outside.separable.has_value());
}

TEST(Scan, CsvLayout) {
    std::ostringstream out;
    write_scan_csv(out, {scan_point(0, 0), scan_point(0.9, 0.9)});
    std::istringstream in(out.str());
    std::string header, first, second;
    std::getline(in, header);
    std::getline(in, first);
    std::getline(in, second);
    EXPECT_EQ(header, "eta1,eta2,psd,separable,distance,p_succ_paper_strategies");
    EXPECT_EQ(first, "0,0,1,1,0,0.5");
    EXPECT_EQ(second, "0.9,0.9,0,,,");
}

}  // namespace
}  // namespace pmx
