#pragma once

#include <cstdint>
#include <vector>

namespace sedecim {

/** A binary quadratic form a x^2 + b xy + c y^2. */
struct QuadraticForm {
    std::int64_t a, b, c;
    bool operator==(const QuadraticForm&) const = default;
};

/** True if D < 0 and D = 0 or 1 mod 4. */
bool is_valid_discriminant(std::int64_t D);

/**
 * Number of reduced forms (|b| <= a <= c, b >= 0 when |b| = a or a = c)
 * of discriminant D < 0.  For fundamental D, every form is primitive and
 * this is the class number h(D) of Q(sqrt D).
 */
std::int64_t class_number(std::int64_t D);

/** Same count from an independently structured enumeration (a major, b minor). */
std::int64_t class_number_symmetric(std::int64_t D);

/** Number of ambiguous reduced forms (b = 0, b = a or a = c) of discriminant D. */
std::int64_t ambiguous_count(std::int64_t D);

/** All reduced forms of discriminant D; intended for small |D|. */
std::vector<QuadraticForm> reduced_forms(std::int64_t D);

}  // namespace sedecim
