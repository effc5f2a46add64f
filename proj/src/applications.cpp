#include "burst/applications.hpp"

#include <algorithm>
#include <stdexcept>

namespace burst {

Interval GenieLocator::locate(const Word&, std::int64_t n) const {
  if (P_ >= n) return {1, n};
  if (error_.length() > P_) throw std::invalid_argument("genie locator: error span longer than P");
  const std::int64_t start = std::max<std::int64_t>(1, std::min(error_.lo, n - P_ + 1));
  return {start, start + P_ - 1};
}

std::unique_ptr<Locator> make_locator(const std::string& name, Interval error, std::int64_t P) {
  if (name == "trivial") return std::make_unique<TrivialLocator>();
  if (name == "genie") return std::make_unique<GenieLocator>(error, P);
  throw std::invalid_argument("unknown locator '" + name + "' (expected genie or trivial)");
}

Word decode_inversion(const Word& z, const CttParams& p) { return decode_ctt(z, p); }

Word decode_absorption_A(const Word& z, const LiftedBurstParams& p) {
  if (p.t != 2 || p.s != 1) throw std::invalid_argument("absorption A needs a (2,1) code");
  return decode_cts(z, p);
}

Word decode_absorption_B(const Word& z, const C22Params& p) { return decode_c22(z, p); }

namespace {

Interval checked_window(const Locator& locator, const Word& z, std::int64_t n, std::int64_t P) {
  const Interval w = locator.locate(z, n);
  if (w.lo < 1 || w.hi > n || w.length() > P) throw DecodeFailure("locator returned a window outside [1, n] or longer than P");
  return w;
}

}  // namespace

LeqBurstDeletionParams leq_burst_del_class_of(const Word& x, int t, std::int64_t P) {
  LeqBurstDeletionParams p{static_cast<std::int64_t>(x.size()), x.q(), t, P, {}};
  for (int i = 1; i <= t; ++i) p.inner.push_back(cts_class_of(x, i, 0, P));
  return p;
}

bool member_leq_burst_del(const Word& x, const LeqBurstDeletionParams& p, const Locator& locator) {
  if (!locator.accepts(indicator(x))) return false;
  return std::all_of(p.inner.begin(), p.inner.end(), [&](const LiftedBurstParams& c) { return member_cts(x, c); });
}

Word decode_leq_burst_del(const Word& z, const LeqBurstDeletionParams& p, const Locator& locator) {
  const std::int64_t i = p.n - static_cast<std::int64_t>(z.size());
  if (i == 0) return z;
  if (i < 0 || i > p.t) throw DecodeFailure("received length is not n - i for any i in [0, t]");
  const Interval w = checked_window(locator, z, p.n, p.P);
  return decode_cts(z, p.inner[static_cast<std::size_t>(i - 1)], w);
}

LocalizedDeletionParams localized_class_of(const Word& x, int t, std::int64_t P) {
  LocalizedDeletionParams p{static_cast<std::int64_t>(x.size()), x.q(), t, P, {}};
  for (int i = 1; i <= t; ++i) p.inner.push_back(cts_class_of(x, t, t - i, P));
  return p;
}

bool member_localized(const Word& x, const LocalizedDeletionParams& p, const Locator& locator) {
  if (!locator.accepts(indicator(x))) return false;
  return std::all_of(p.inner.begin(), p.inner.end(), [&](const LiftedBurstParams& c) { return member_cts(x, c); });
}

Word decode_localized(const Word& z, const LocalizedDeletionParams& p, const Locator& locator) {
  const std::int64_t i = p.n - static_cast<std::int64_t>(z.size());
  if (i == 0) return z;
  if (i < 0 || i > p.t) throw DecodeFailure("received length is not n - i for any i in [0, t]");
  const Interval w = checked_window(locator, z, p.n, p.P);
  return decode_cts(z, p.inner[static_cast<std::size_t>(i - 1)], w);
}

}  // namespace burst
