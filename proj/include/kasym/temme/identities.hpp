#pragma once

#include <string>
#include <vector>

namespace kasym::temme {

struct IdentityResult {
    std::string name;
    bool passed = false;
    std::string scope;   // e.g. "n<=8, exact"
    std::string detail;  // first failure, empty on success
};

/// Every exact identity relating the coefficient tables, checked with
/// rational arithmetic:
///   recursion, parity, normalization        (A_s, B_s up to the table order)
///   lowered-identities, lowered-recursion   (a_s, b_s against A_s, B_s)
///   reciprocal-law                          F(u,mu) F(u,-mu) = 1
///   basis-shift                             Â_s(0) = seeds[s] and recursion
///   temme-agreement                         a_n = a_n^dagger, b_n = b_n^dagger
///   temme-pde, temme-parity                 properties of c_k
///   gamma-ratio-odd-zero                    d_n = 0 for odd n
///   slope-bridge, lowered-value-bridge      B_n'(0), a_n(0), b_n'(0) vs d, d~
///   bernoulli-generating-function           B_n^(l)(x) satisfy the generating ODE
std::vector<IdentityResult> run_identity_suite(int n_max = 8);

}  // namespace kasym::temme
