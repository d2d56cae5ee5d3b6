#include "happy/enumerate.hpp"

#include <climits>

namespace happy {

unsigned long long extension_count(const Instance &instance) {
    const int ell = instance.precoloring.palette_size();
    const int uncolored = instance.precoloring.uncolored_count();
    unsigned long long total = 1;
    for (int i = 0; i < uncolored; ++i) {
        if (total > ULLONG_MAX / static_cast<unsigned long long>(ell))
            return ULLONG_MAX;
        total *= static_cast<unsigned long long>(ell);
    }
    return total;
}

void for_each_extension(const Instance &instance,
                        const std::function<void(const Coloring &)> &fn) {
    const Precoloring &p = instance.precoloring;
    const int ell = p.palette_size();
    const std::vector<int> uncolored = p.uncolored_vertices();

    Coloring c(p.size(), ell);
    for (int v = 1; v <= p.size(); ++v)
        if (p.is_colored(v))
            c.set(v, p.color_of(v));
    for (int v : uncolored)
        c.set(v, 1);

    // odometer over the uncolored positions
    std::vector<int> digits(uncolored.size(), 1);
    while (true) {
        fn(c);
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == ell) {
            digits[pos] = 1;
            c.set(uncolored[pos], 1);
            ++pos;
        }
        if (pos == digits.size())
            break;
        ++digits[pos];
        c.set(uncolored[pos], digits[pos]);
    }
}

} // namespace happy
