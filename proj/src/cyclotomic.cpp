#include "gwlp/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gwlp {

namespace {

// exact division of a by the monic b
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

}  // namespace

IntPoly cyclotomic_polynomial(int D) {
    if (D < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(D); it != cache.end()) return it->second;
    }
    // x^D - 1 divided by Phi_d for every proper divisor d
    IntPoly p(static_cast<std::size_t>(D) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    for (int d = 1; d < D; ++d)
        if (D % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    cache.emplace(D, p);
    return p;
}

std::optional<IntPoly> reduce_mod_cyclotomic(IntPoly poly, int D) {
    const auto phi = cyclotomic_polynomial(D);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        const std::int64_t c = poly[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) {
            std::int64_t prod = 0;
            if (__builtin_mul_overflow(c, phi[j], &prod) ||
                __builtin_sub_overflow(poly[i - deg + j], prod, &poly[i - deg + j]))
                return std::nullopt;
        }
    }
    poly.resize(deg, 0);
    return poly;
}

std::optional<Rational> rational_value(const IntPoly& poly, int D) {
    const auto rem = reduce_mod_cyclotomic(poly, D);
    if (!rem) return std::nullopt;
    if (std::any_of(rem->begin() + 1, rem->end(), [](std::int64_t c) { return c != 0; })) return std::nullopt;
    return Rational(rem->empty() ? 0 : rem->front());
}

}  // namespace gwlp
