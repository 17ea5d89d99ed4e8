#include "ygseq/fixtures.hpp"

#include <stdexcept>

namespace ygseq::fixtures {

std::vector<std::int64_t> expected_autocorr(unsigned k, std::uint32_t count) {
    const std::int64_t* block = nullptr;
    std::size_t len = 0;
    switch (k) {
        case 2: block = kAutocorrBlockK2.data(); len = kAutocorrBlockK2.size(); break;
        case 3: block = kAutocorrBlockK3.data(); len = kAutocorrBlockK3.size(); break;
        case 4: block = kAutocorrBlockK4.data(); len = kAutocorrBlockK4.size(); break;
        default:
            throw std::invalid_argument("reference blocks exist for k = 2, 3, 4 only");
    }
    std::vector<std::int64_t> out(count);
    for (std::uint32_t i = 0; i < count; ++i) out[i] = block[i % len];
    return out;
}

} // namespace ygseq::fixtures
