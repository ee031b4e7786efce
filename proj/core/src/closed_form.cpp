#include "heun/closed_form.hpp"

namespace heun {

std::int64_t count_chains(int m, int n) {
    std::int64_t count = 0;
    for_each_chain(m, n, [&](const std::vector<std::pair<int, int>>&) { ++count; });
    return count;
}

} // namespace heun
