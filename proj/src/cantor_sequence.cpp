#include "germlab/cantor/sequence.hpp"

#include "germlab/error.hpp"

#include <algorithm>

namespace germlab::cantor {

namespace {

bool binary(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.substr(0, p);
  }
  return w;
}

}  // namespace

EventuallyPeriodic::EventuallyPeriodic(Word pre, Word period) : pre_(std::move(pre)), period_(std::move(period)) {
  if (period_.empty()) throw PreconditionError("eventually periodic sequence needs a non-empty period");
  if (!binary(pre_) || !binary(period_)) throw PreconditionError("sequence digits must be 0 or 1");
  period_ = primitive_root(period_);
  // Absorb the tail of the preperiod into the period: u a (v a)^inf = u (a v)^inf.
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

EventuallyPeriodic EventuallyPeriodic::parse(const std::string& text) {
  try {
    if (const auto open = text.find('('); open != std::string::npos) {
      const auto close = text.find(')', open);
      if (close == std::string::npos) throw ParseError("unbalanced parenthesis");
      return {text.substr(0, open), text.substr(open + 1, close - open - 1)};
    }
    if (const auto comma = text.find(','); comma != std::string::npos)
      return {text.substr(0, comma), text.substr(comma + 1)};
    return {text, "0"};
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad sequence '") + text + "': " + e.what());
  }
}

char EventuallyPeriodic::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

Word EventuallyPeriodic::prefix(std::size_t n) const {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(at(i));
  return w;
}

bool EventuallyPeriodic::starts_with(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (at(i) != w[i]) return false;
  return true;
}

EventuallyPeriodic EventuallyPeriodic::drop(std::size_t n) const {
  if (n <= pre_.size()) return {pre_.substr(n), period_};
  const std::size_t shift = (n - pre_.size()) % period_.size();
  return {"", period_.substr(shift) + period_.substr(0, shift)};
}

EventuallyPeriodic EventuallyPeriodic::prepend(const Word& w) const { return {w + pre_, period_}; }

std::string EventuallyPeriodic::str() const { return pre_ + "(" + period_ + ")"; }

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool cylinders_meet(const Word& a, const Word& b) { return is_prefix(a, b) || is_prefix(b, a); }

}  // namespace germlab::cantor
