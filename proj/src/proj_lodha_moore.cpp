#include "germlab/proj/lodha_moore.hpp"

#include "germlab/error.hpp"

#include <cctype>
#include <deque>
#include <set>

namespace germlab::proj {

namespace {

QuadExt q(long long p, long long d = 1) { return QuadExt(Rational(p, d)); }

}  // namespace

const PPMap& lm_a() {
  static const PPMap f = PPMap::from_pieces({}, {Mobius(1, 1, 0, 1)});
  return f;
}

const PPMap& lm_b() {
  static const PPMap f = PPMap::from_pieces({q(0), q(1, 2), q(1)},
                                            {Mobius(), Mobius(1, 0, -1, 1), Mobius(3, -1, 1, 0), Mobius(1, 1, 0, 1)});
  return f;
}

const PPMap& lm_c() {
  static const PPMap f = PPMap::from_pieces({q(0), q(1)}, {Mobius(), Mobius(2, 0, 1, 1), Mobius()});
  return f;
}

namespace {

const PPMap& letter(char l) {
  static const PPMap A = inverse(lm_a());
  static const PPMap B = inverse(lm_b());
  static const PPMap C = inverse(lm_c());
  switch (l) {
    case 'a': return lm_a();
    case 'b': return lm_b();
    case 'c': return lm_c();
    case 'A': return A;
    case 'B': return B;
    case 'C': return C;
  }
  throw ParseError(std::string("letter '") + l + "' is not a Lodha-Moore generator");
}

}  // namespace

PPMap lm_word(std::string_view letters) {
  PPMap acc;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) acc = letter(*it) * acc;
  return acc;
}

Interval bn_image(int n) {
  if (n < 1) throw PreconditionError("bn_image needs n >= 1");
  PPMap f = lm_b();
  for (int i = 1; i < n; ++i) f = lm_b() * f;
  return f.image({q(0), q(1)});
}

std::optional<std::string> interval_compression_witness(const Interval& i1, const Interval& i2, int max_len,
                                                        std::size_t budget) {
  if (!(i1.lo < i1.hi) || !(i2.lo < i2.hi)) throw PreconditionError("intervals must be non-degenerate");
  if (i2.contains(i1)) return std::string();
  std::set<PPMap> seen{PPMap()};
  std::vector<std::pair<PPMap, std::string>> frontier{{PPMap(), ""}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<PPMap, std::string>> next;
    for (const auto& [g, w] : frontier) {
      for (const char l : std::string_view("aAbBcC")) {
        PPMap h = letter(l) * g;
        if (!seen.insert(h).second) continue;
        if (seen.size() > budget) throw BudgetExceeded("interval compression search passed its element budget");
        std::string hw = l + w;
        if (i2.contains(h.image(i1))) return hw;
        next.emplace_back(std::move(h), std::move(hw));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace germlab::proj
