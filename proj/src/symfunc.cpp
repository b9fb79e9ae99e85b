#include "gkm/symfunc.hpp"

#include <stdexcept>

namespace gkm {

mpz_class elementary_symmetric(const IntSeq& xs, int i) {
    if (i < 0) throw std::invalid_argument("elementary_symmetric: negative index");
    const int n = static_cast<int>(xs.size());
    if (i > n) return 0;
    if (i == 0) return 1;
    std::vector<mpz_class> e(static_cast<std::size_t>(i) + 1, 0);
    e[0] = 1;
    for (int m = 0; m < n; ++m) {
        const int top = std::min(i, m + 1);
        for (int j = top; j >= 1; --j) {
            e[j] += xs[m] * e[j - 1];
        }
    }
    return e[i];
}

IntSeq shifted(IntSeq xs, long delta) {
    for (long& x : xs) x += delta;
    return xs;
}

mpz_class r_poly(const IntSeq& xs, int i) {
    if (i < 0) throw std::invalid_argument("r_poly: negative index");
    const IntSeq down = shifted(xs, -1);
    mpz_class total = 0;
    for (int j = 0; j <= i; ++j) total += elementary_symmetric(down, j);
    return total;
}

}  // namespace gkm
