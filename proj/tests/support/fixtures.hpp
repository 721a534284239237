#pragma once

#include "mci/graph.hpp"

namespace mci::fixtures {

// Example graph with one c-component; Q[{s1,s2}] has exactly two hedges,
// {s1,s2,v2} and {s1,s2,v1,v2}. Vertex order: s1,s2,x,v1,v2,v3.
inline constexpr int F1_S1 = 0, F1_S2 = 1, F1_X = 2, F1_V1 = 3, F1_V2 = 4, F1_V3 = 5;
CausalGraph fig1();

// Example where the optimal collection is not a singleton: S={s1,s2,s3}
// splits into {s1,s3} and {s2}; the optimum is {{s1},{s2}} at cost 2 while
// any single identifying set costs at least 10. Vertex order:
// s1,s2,s3,v1,v2,v3,v4 with costs 1,1,1,5,5,5,5.
inline constexpr int F2_S1 = 0, F2_S2 = 1, F2_S3 = 2, F2_V1 = 3, F2_V2 = 4, F2_V3 = 5,
                     F2_V4 = 6;
CausalGraph fig2();

}  // namespace mci::fixtures
