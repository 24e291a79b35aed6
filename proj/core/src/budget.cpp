#include "semifib/budget.hpp"

#include <cstdlib>

namespace semifib {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("SEMIFIB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            b.enumeration_elements = v;
            b.sweep_limit = v;
        }
    }
    return b;
}

} // namespace semifib
