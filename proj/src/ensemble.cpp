#include "rbmcs/ensemble.hpp"

#include <cmath>

namespace rbmcs {

bool Ensemble::finite() const
{
    for (double value : x)
        if (!std::isfinite(value))
            return false;
    for (double value : v)
        if (!std::isfinite(value))
            return false;
    return std::isfinite(t);
}

} // namespace rbmcs
