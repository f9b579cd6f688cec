#pragma once

#include <optional>
#include <vector>

#include "h14/errors.hpp"
#include "h14/qseq.hpp"
#include "h14/report.hpp"
#include "h14/witness.hpp"

namespace h14 {

struct CertificateEntry {
  int l = 0;
  FVec fvec;
  LaurentPoly q;
};

/// The witness family q_0..q_lmax together with everything needed to
/// re-derive it.
struct Certificate {
  WitnessPack witness;  // h, Pi, t, e filled in
  RingMap theta = RingMap::identity(VarSet());
  LaurentPoly pi;
  int d = 0;
  int e = 0;
  std::vector<CertificateEntry> entries;
  Report report;
};

/// A pack that failed validation, with the report explaining why.
class PackRejected : public WitnessError {
 public:
  PackRejected(const std::string& what, Report r) : WitnessError(what), report_(std::move(r)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// validate_pack plus the group-invariance check when the pack has a group.
WitnessValidation check_witness(const WitnessPack& pack, const WitnessOptions& opts = {});

struct BuildOptions {
  int l_max = 8;
  std::optional<std::vector<int>> t_override;
};

/// Builds entries l = 0..l_max. Throws PackRejected for invalid packs and
/// WitnessError if a constructed entry fails its checks.
Certificate build_certificate(const WitnessPack& pack, const BuildOptions& opts = {});

struct VerifyOptions {
  /// Stop at the first failing check.
  bool fail_fast = false;
};

/// Re-derives and checks everything in the certificate from scratch; only
/// the pack's field-theoretic assertion is trusted.
Report verify_certificate(const Certificate& cert, const VerifyOptions& opts = {});

}  // namespace h14
