#pragma once

#include "germlab/proj/ppmap.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace germlab::proj {

/// a(t) = t + 1.
/// b(t) = t (t <= 0), t/(1-t) (0 <= t <= 1/2), 3 - 1/t (1/2 <= t <= 1),
///        t + 1 (t >= 1).
/// c(t) = 2t/(1+t) on [0,1], t elsewhere.
const PPMap& lm_a();
const PPMap& lm_b();
const PPMap& lm_c();

/// Word over {a,b,c} (upper case = inverse), rightmost letter first.
PPMap lm_word(std::string_view letters);

/// b^n([0,1]), computed by composing b with itself n times.
Interval bn_image(int n);

/// Shortest word g over {a,b,c}^{+-1} with g(i1) inside i2, by breadth-first
/// search that skips words equal (as maps) to shorter ones. Ties go to the
/// first letter in the order a, A, b, B, c, C. Throws BudgetExceeded when the
/// number of distinct elements passes `budget`.
std::optional<std::string> interval_compression_witness(const Interval& i1, const Interval& i2, int max_len,
                                                        std::size_t budget = 200000);

}  // namespace germlab::proj
