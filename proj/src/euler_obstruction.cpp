#include "spherediv/euler_obstruction.hpp"

namespace spherediv {

long euler_characteristic(const std::vector<long>& counts)
{
    long chi = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
    return chi;
}

bool euler_check(const std::vector<long>& counts, std::size_t d)
{
    if (d % 2 == 0) throw PreconditionError("the Euler characteristic check needs odd d");
    if (counts.size() != d) return false;
    return euler_characteristic(counts) == 2;
}

DivisibilityObstruction divisibility_obstruction(const std::vector<long>& counts, long r)
{
    if (r < 1) throw InputError("r must be positive");
    DivisibilityObstruction out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] % r != 0) {
            out.obstructed = true;
            out.witness_dim = i;
            break;
        }
    }
    return out;
}

} // namespace spherediv
