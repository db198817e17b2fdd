#include "insets/report.hpp"

namespace insets {

std::string_view toString(IdentityId id) {
  switch (id) {
    case IdentityId::mReduction: return "m-reduction";
    case IdentityId::vandermonde: return "vandermonde";
    case IdentityId::kRecurrence: return "k-recurrence";
    case IdentityId::kRecurrenceBinomial: return "k-recurrence-binomial";
    case IdentityId::blockRemoval: return "block-removal";
    case IdentityId::blockDecrement: return "block-decrement";
    case IdentityId::primeDivisibility: return "prime-divisibility";
    case IdentityId::powerExpansion: return "power-expansion";
    case IdentityId::chebyshevTable: return "chebyshev-table";
    case IdentityId::chebyshevExplicit: return "chebyshev-explicit";
    case IdentityId::chebyshevRecurrence: return "chebyshev-recurrence";
    case IdentityId::cRecurrence: return "c-recurrence";
  }
  return "?";
}

IdentityReport makeEqualityReport(IdentityId id, std::vector<Parameter> parameters, BigInt lhs, BigInt rhs) {
  IdentityReport report{id, std::move(parameters), std::move(lhs), std::move(rhs), false};
  report.pass = report.lhs == report.rhs;
  return report;
}

bool isConsistent(const IdentityReport& report) {
  if (report.id == IdentityId::primeDivisibility) {
    return report.rhs != 0 && report.pass == (report.lhs % report.rhs == 0);
  }
  return report.pass == (report.lhs == report.rhs);
}

}  // namespace insets
