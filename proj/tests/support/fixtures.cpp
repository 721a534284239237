#include "support/fixtures.hpp"

namespace mci::fixtures {

CausalGraph fig1() {
    return CausalGraph(
        6,
        {{F1_S1, F1_S2}, {F1_S2, F1_X}, {F1_V3, F1_X}, {F1_V1, F1_V2}, {F1_V2, F1_S1}},
        {{F1_S1, F1_S2},
         {F1_V1, F1_X},
         {F1_V1, F1_S2},
         {F1_S1, F1_X},
         {F1_V2, F1_S2},
         {F1_V3, F1_X}},
        std::vector<Cost>(6, Cost::finite(1)),
        {"s1", "s2", "x", "v1", "v2", "v3"});
}

CausalGraph fig2() {
    std::vector<Cost> costs(7, Cost::finite(1));
    for (int v : {F2_V1, F2_V2, F2_V3, F2_V4}) costs[v] = Cost::finite(5);
    return CausalGraph(
        7,
        {{F2_S1, F2_S2}, {F2_S2, F2_S3}, {F2_V4, F2_V3}, {F2_V3, F2_S2}, {F2_V1, F2_V2},
         {F2_V2, F2_S1}},
        {{F2_V3, F2_S3},
         {F2_V4, F2_S3},
         {F2_V4, F2_S2},
         {F2_S1, F2_S3},
         {F2_V2, F2_S2},
         {F2_V1, F2_S2},
         {F2_V1, F2_S1}},
        std::move(costs), {"s1", "s2", "s3", "v1", "v2", "v3", "v4"});
}

}  // namespace mci::fixtures
