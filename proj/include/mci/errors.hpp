#pragma once

#include <stdexcept>

namespace mci {

// No finite-cost solution exists (e.g. an identifying intervention would have
// to include a non-intervenable vertex).
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured work cap was exceeded (hedge budget, partition count, ...).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mci
