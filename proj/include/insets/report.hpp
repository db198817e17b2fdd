#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "insets/exactmath.hpp"

namespace insets {

enum class IdentityId {
  mReduction,            // F(n,k,P,m) = sum_i C(m,i) F(n,k-i,P,0)
  vandermonde,           // C(p+m,k+1) = sum_i C(m,i) C(p,k-i+1)
  kRecurrence,           // F(n,k,P,m) = sum_i (-1)^i C(s,i) F(n,k+s,P,m+s-i)
  kRecurrenceBinomial,   // C(p,k+1) = sum_i (-1)^i C(s,i) C(p+s-i,k+s+1)
  blockRemoval,          // F(n,k,P,m) = sum_i C(p_j,i) F(n-1,k-i+1,P\p_j,m)
  blockDecrement,        // decrement formula, see BlockDecrementVariant
  primeDivisibility,     // q | r^q - C(rq+m,q) + C(m,q)
  powerExpansion,        // p^n = sum_i (-1)^i C(n,i) C(pn+m-pi,n)
  chebyshevTable,        // combinatorial coefficient vs classical recurrence
  chebyshevExplicit,     // mapped c-value vs explicit alternating sum
  chebyshevRecurrence,   // a(r,s) = 2a(r-1,s-1) - a(r-2,s)
  cRecurrence,           // c(n,k,m) = 2c(n-1,k,m) + c(n-1,k-1,m)
};

std::string_view toString(IdentityId id);

struct Parameter {
  std::string name;
  std::variant<std::int64_t, std::vector<std::int64_t>> value;
};

/// One instantiated identity. pass == (lhs == rhs), except for
/// primeDivisibility where rhs holds the modulus and pass == (rhs | lhs).
struct IdentityReport {
  IdentityId id;
  std::vector<Parameter> parameters;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

IdentityReport makeEqualityReport(IdentityId id, std::vector<Parameter> parameters, BigInt lhs, BigInt rhs);

/// True when pass agrees with the comparison the report claims to record.
bool isConsistent(const IdentityReport& report);

}  // namespace insets
