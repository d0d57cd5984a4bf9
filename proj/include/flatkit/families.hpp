#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flatkit/sequences.hpp"

namespace flatkit {

enum class FamilyKind { dirichlet, random_sign, rudin_shapiro, fekete, binary_random, from_string };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::dirichlet;
  std::int64_t size = 0;            // q, 2^k, or prime depending on kind
  std::optional<std::uint64_t> seed;
  std::optional<double> density;    // binary_random only
  std::string text;                 // from_string only
};

// i.i.d. uniform signs; identical (q, seed) gives identical output
// everywhere (integer-only generator).
SignSequence random_littlewood(std::int64_t q, std::uint64_t seed);

// Pair recurrence P_{k+1} = P_k ++ Q_k, Q_{k+1} = P_k ++ (-Q_k),
// starting from P_0 = Q_0 = [+]; returns P_k of length 2^k.
SignSequence rudin_shapiro(int k);

// Legendre-symbol signs for an odd prime: eps_j = (j|p) for j >= 1 and
// eps_0 = +1 to stay inside the +/-1 class.
SignSequence fekete(std::int64_t p);

enum class NewmanVariant { plus, minus };

// Support indicator of the +1 signs (plus) or of the -1 signs (minus).
BinarySequence newman_from_signs(const SignSequence& s, NewmanVariant variant);

// i.i.d. Bernoulli(d) bits, deterministic per seed. May come out all-zero
// for tiny d*q; callers that need mass must guard.
BinarySequence random_binary(std::int64_t q, double d, std::uint64_t seed);

// Norm-preserving symmetries of a sign sequence: global negation, index
// reversal, and the half-turn twist eps_j -> (-1)^j eps_j.
std::vector<SignSequence> symmetry_orbit(const SignSequence& s);

// Lexicographically smallest orbit member whose leading sign is +1.
SignSequence canonical_representative(const SignSequence& s);

struct EnumerationSummary {
  std::int64_t classes = 0;
  std::int64_t total = 0;  // 2^q
};

// Streams exactly one representative per symmetry class, in increasing
// lexicographic order; q <= 28 keeps the scan within budget.
EnumerationSummary enumerate_signs(int q, const std::function<void(const SignSequence&)>& emit);

bool is_prime(std::int64_t n);

// Instantiates a sign family member; for rudin_shapiro the size parameter
// is the recursion depth k, elsewhere it is the length.
SignSequence make_sign_family(const FamilySpec& spec, std::int64_t size_param);

}  // namespace flatkit
