#pragma once

#include <compare>
#include <string>

namespace germlab::cantor {

/// Finite binary word; C_w is the set of sequences starting with w.
using Word = std::string;

/// Eventually periodic binary sequence pre * period^infinity, kept with the
/// shortest period and shortest preperiod so equality is structural.
class EventuallyPeriodic {
 public:
  EventuallyPeriodic(Word pre, Word period);  // period must be non-empty

  /// "pre,period" or "pre(period)"; period defaults to "0" when absent.
  static EventuallyPeriodic parse(const std::string& text);

  const Word& pre() const { return pre_; }
  const Word& period() const { return period_; }

  char at(std::size_t i) const;
  /// First n digits.
  Word prefix(std::size_t n) const;
  bool starts_with(const Word& w) const;
  /// Sequence with the first n digits removed.
  EventuallyPeriodic drop(std::size_t n) const;
  /// w followed by this sequence.
  EventuallyPeriodic prepend(const Word& w) const;

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
  friend auto operator<=>(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;

  /// e.g. "01(10)" for 01 101010...
  std::string str() const;

 private:
  Word pre_;
  Word period_;
};

bool is_prefix(const Word& p, const Word& w);
/// C_a and C_b intersect (one word is a prefix of the other).
bool cylinders_meet(const Word& a, const Word& b);

}  // namespace germlab::cantor
