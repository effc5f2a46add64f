#pragma once

#include <memory>
#include <string>
#include <vector>

#include "burst/codes.hpp"

namespace burst {

/// Finds an interval of length at most P that contains every erroneous coordinate.
///
/// Real locators are constraint codes on the indicator vector; accepts() is the
/// membership hook for that constraint. The two shipped locators impose none.
class Locator {
 public:
  virtual ~Locator() = default;
  virtual Interval locate(const Word& received, std::int64_t n) const = 0;
  virtual bool accepts(const Word& /*indicator*/) const { return true; }
  virtual std::string name() const = 0;
};

/// Returns the whole word. Only useful with P = n codes.
class TrivialLocator final : public Locator {
 public:
  Interval locate(const Word&, std::int64_t n) const override { return {1, n}; }
  std::string name() const override { return "trivial"; }
};

/// Test locator told where the error is. Returns a length-P window covering it.
class GenieLocator final : public Locator {
 public:
  GenieLocator(Interval error, std::int64_t P) : error_(error), P_(P) {}
  Interval locate(const Word& received, std::int64_t n) const override;
  std::string name() const override { return "genie"; }

 private:
  Interval error_;
  std::int64_t P_;
};

std::unique_ptr<Locator> make_locator(const std::string& name, Interval error = {}, std::int64_t P = 0);

/// Inversions of length at most t are (t,t)-bursts.
Word decode_inversion(const Word& z, const CttParams& p);
/// Type-A absorption is a (2,1)-burst (or a single deletion at the last coordinate).
Word decode_absorption_A(const Word& z, const LiftedBurstParams& p);
/// Type-B absorption is a (2,2)-burst.
Word decode_absorption_B(const Word& z, const C22Params& p);

/// Intersection of P-bounded (i,0)-burst codes, i = 1..t.
struct LeqBurstDeletionParams {
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 1;
  std::int64_t P = 0;
  std::vector<LiftedBurstParams> inner;  // inner[i-1] corrects an i-burst-deletion
  auto operator<=>(const LeqBurstDeletionParams&) const = default;
};

LeqBurstDeletionParams leq_burst_del_class_of(const Word& x, int t, std::int64_t P);
bool member_leq_burst_del(const Word& x, const LeqBurstDeletionParams& p, const Locator& locator);
Word decode_leq_burst_del(const Word& z, const LeqBurstDeletionParams& p, const Locator& locator);

/// Intersection of P-bounded (t,t-i)-burst codes, i = 1..t.
struct LocalizedDeletionParams {
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 1;
  std::int64_t P = 0;
  std::vector<LiftedBurstParams> inner;  // inner[i-1] is the (t, t-i) code
  auto operator<=>(const LocalizedDeletionParams&) const = default;
};

LocalizedDeletionParams localized_class_of(const Word& x, int t, std::int64_t P);
bool member_localized(const Word& x, const LocalizedDeletionParams& p, const Locator& locator);
Word decode_localized(const Word& z, const LocalizedDeletionParams& p, const Locator& locator);

}  // namespace burst
