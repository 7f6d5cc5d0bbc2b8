#include "sedecim/classgroup.hpp"

#include <stdexcept>

namespace sedecim {

namespace {

void check_discriminant(std::int64_t D) {
    if (!is_valid_discriminant(D))
        throw std::invalid_argument("discriminant must be negative and 0 or 1 mod 4");
}

}  // namespace

bool is_valid_discriminant(std::int64_t D) {
    if (D >= 0) return false;
    const std::int64_t r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

std::int64_t class_number(std::int64_t D) {
    check_discriminant(D);
    std::int64_t h = 0;
    for (std::int64_t b = (-D) & 1; b * b <= (-D) / 3; b += 2) {
        const std::int64_t M = (b * b - D) / 4;  // = a c
        for (std::int64_t a = b > 0 ? b : 1; a * a <= M; ++a) {
            if (M % a != 0) continue;
            h += (b == 0 || b == a || a * a == M) ? 1 : 2;
        }
    }
    return h;
}

std::int64_t class_number_symmetric(std::int64_t D) {
    check_discriminant(D);
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b & 1) ^ (D & 1)) != 0) continue;
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;  // (a,-b,a) pairs with (a,b,a)
            ++h;
        }
    }
    return h;
}

std::int64_t ambiguous_count(std::int64_t D) {
    check_discriminant(D);
    std::int64_t n = 0;
    for (std::int64_t b = (-D) & 1; b * b <= (-D) / 3; b += 2) {
        const std::int64_t M = (b * b - D) / 4;
        for (std::int64_t a = b > 0 ? b : 1; a * a <= M; ++a) {
            if (M % a == 0 && (b == 0 || b == a || a * a == M)) ++n;
        }
    }
    return n;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t D) {
    check_discriminant(D);
    std::vector<QuadraticForm> out;
    for (std::int64_t b = (-D) & 1; b * b <= (-D) / 3; b += 2) {
        const std::int64_t M = (b * b - D) / 4;
        for (std::int64_t a = b > 0 ? b : 1; a * a <= M; ++a) {
            if (M % a != 0) continue;
            const std::int64_t c = M / a;
            out.push_back({a, b, c});
            if (!(b == 0 || b == a || a == c)) out.push_back({a, -b, c});
        }
    }
    return out;
}

}  // namespace sedecim
