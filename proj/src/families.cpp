#include "flatkit/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatkit/rng.hpp"

namespace flatkit {

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::dirichlet: return "dirichlet";
    case FamilyKind::random_sign: return "random_sign";
    case FamilyKind::rudin_shapiro: return "rudin_shapiro";
    case FamilyKind::fekete: return "fekete";
    case FamilyKind::binary_random: return "binary_random";
    case FamilyKind::from_string: return "from_string";
  }
  throw std::logic_error("family_kind_name: unreachable");
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "dirichlet") return FamilyKind::dirichlet;
  if (name == "random_sign" || name == "random") return FamilyKind::random_sign;
  if (name == "rudin_shapiro" || name == "rudin-shapiro") return FamilyKind::rudin_shapiro;
  if (name == "fekete") return FamilyKind::fekete;
  if (name == "binary_random" || name == "binary") return FamilyKind::binary_random;
  if (name == "from_string") return FamilyKind::from_string;
  throw std::invalid_argument("unknown family kind: " + name);
}

SignSequence random_littlewood(std::int64_t q, std::uint64_t seed) {
  if (q < 1) throw std::invalid_argument("random_littlewood: q must be >= 1");
  SplitMix64 rng(seed);
  std::vector<int> entries(static_cast<std::size_t>(q));
  for (auto& e : entries) e = rng.next_sign();
  return SignSequence(std::move(entries));
}

SignSequence rudin_shapiro(int k) {
  if (k < 0) throw std::invalid_argument("rudin_shapiro: k must be >= 0");
  if (k > 24) throw std::invalid_argument("rudin_shapiro: k > 24 exceeds the memory guard");
  std::vector<int> p{+1}, q{+1};
  for (int step = 0; step < k; ++step) {
    std::vector<int> next_p(p);
    next_p.insert(next_p.end(), q.begin(), q.end());
    std::vector<int> next_q(p);
    for (int e : q) next_q.push_back(-e);
    p = std::move(next_p);
    q = std::move(next_q);
  }
  return SignSequence(std::move(p));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == f) return true;
    if (n % f == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
      if (exp & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      exp >>= 1;
    }
    return r;
  };
  const auto m = static_cast<std::uint64_t>(n);
  std::uint64_t d = m - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

SignSequence fekete(std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("fekete: needs an odd prime");
  auto mulmod = [&](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  auto powmod = [&](std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    base %= p;
    while (exp) {
      if (exp & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      exp >>= 1;
    }
    return r;
  };
  std::vector<int> entries(static_cast<std::size_t>(p));
  entries[0] = +1;
  for (std::int64_t j = 1; j < p; ++j) {
    // Euler's criterion: j^((p-1)/2) is 1 for residues and p-1 otherwise.
    entries[static_cast<std::size_t>(j)] = powmod(j, (p - 1) / 2) == 1 ? +1 : -1;
  }
  return SignSequence(std::move(entries));
}

BinarySequence newman_from_signs(const SignSequence& s, NewmanVariant variant) {
  std::vector<int> bits(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const bool plus = s[j] > 0;
    bits[j] = (variant == NewmanVariant::plus) == plus ? 1 : 0;
  }
  return BinarySequence(std::move(bits));
}

BinarySequence random_binary(std::int64_t q, double d, std::uint64_t seed) {
  if (q < 1) throw std::invalid_argument("random_binary: q must be >= 1");
  if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("random_binary: density must be in (0,1)");
  SplitMix64 rng(seed);
  std::vector<int> bits(static_cast<std::size_t>(q));
  for (auto& b : bits) b = rng.next_double() < d ? 1 : 0;
  return BinarySequence(std::move(bits));
}

namespace {

// Bitmask encoding: bit (q-1-j) set when eps_j = -1. Numeric order on the
// masks then matches lexicographic order on sign strings ('+' < '-').
std::uint32_t mask_of(const SignSequence& s) {
  std::uint32_t x = 0;
  const int q = static_cast<int>(s.size());
  for (int j = 0; j < q; ++j)
    if (s[j] < 0) x |= 1u << (q - 1 - j);
  return x;
}

SignSequence mask_to_sequence(std::uint32_t x, int q) {
  std::vector<int> entries(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) entries[static_cast<std::size_t>(j)] = (x >> (q - 1 - j)) & 1u ? -1 : +1;
  return SignSequence(std::move(entries));
}

std::uint32_t reverse_bits(std::uint32_t x, int q) {
  std::uint32_t r = 0;
  for (int b = 0; b < q; ++b)
    if (x >> b & 1u) r |= 1u << (q - 1 - b);
  return r;
}

struct OrbitMasks {
  std::uint32_t members[8];
};

OrbitMasks orbit_masks(std::uint32_t x, int q, std::uint32_t full, std::uint32_t twist) {
  OrbitMasks o;
  int n = 0;
  for (int use_twist = 0; use_twist < 2; ++use_twist) {
    std::uint32_t t = use_twist ? x ^ twist : x;
    for (int use_rev = 0; use_rev < 2; ++use_rev) {
      std::uint32_t r = use_rev ? reverse_bits(t, q) : t;
      o.members[n++] = r;
      o.members[n++] = r ^ full;
    }
  }
  return o;
}

std::uint32_t twist_mask(int q) {
  // Flip signs at odd positions j; bit index is q-1-j.
  std::uint32_t m = 0;
  for (int j = 1; j < q; j += 2) m |= 1u << (q - 1 - j);
  return m;
}

}  // namespace

std::vector<SignSequence> symmetry_orbit(const SignSequence& s) {
  const int q = static_cast<int>(s.size());
  if (q > 28) throw std::invalid_argument("symmetry_orbit: q > 28 exceeds the mask width");
  const std::uint32_t full = q == 32 ? ~0u : (1u << q) - 1u;
  const OrbitMasks o = orbit_masks(mask_of(s), q, full, twist_mask(q));
  std::vector<std::uint32_t> masks(o.members, o.members + 8);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<SignSequence> orbit;
  orbit.reserve(masks.size());
  for (std::uint32_t m : masks) orbit.push_back(mask_to_sequence(m, q));
  return orbit;
}

SignSequence canonical_representative(const SignSequence& s) {
  const int q = static_cast<int>(s.size());
  if (q > 28) throw std::invalid_argument("canonical_representative: q > 28 exceeds the mask width");
  const std::uint32_t full = (1u << q) - 1u;
  const std::uint32_t lead = 1u << (q - 1);  // set when eps_0 = -1
  const OrbitMasks o = orbit_masks(mask_of(s), q, full, twist_mask(q));
  std::uint32_t best = ~0u;
  for (std::uint32_t m : o.members)
    if ((m & lead) == 0) best = std::min(best, m);
  return mask_to_sequence(best, q);
}

EnumerationSummary enumerate_signs(int q, const std::function<void(const SignSequence&)>& emit) {
  if (q < 1) throw std::invalid_argument("enumerate_signs: q must be >= 1");
  if (q > 28) throw std::invalid_argument("enumerate_signs: q > 28 exceeds the enumeration budget");
  const std::uint32_t full = (1u << q) - 1u;
  const std::uint32_t lead = 1u << (q - 1);
  const std::uint32_t twist = twist_mask(q);

  EnumerationSummary summary;
  summary.total = std::int64_t{1} << q;
  const std::uint32_t limit = q == 1 ? 1u : 1u << (q - 1);
  for (std::uint32_t x = 0; x < limit; ++x) {
    const OrbitMasks o = orbit_masks(x, q, full, twist);
    bool smallest = true;
    for (std::uint32_t m : o.members) {
      if ((m & lead) == 0 && m < x) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    ++summary.classes;
    emit(mask_to_sequence(x, q));
  }
  return summary;
}

SignSequence make_sign_family(const FamilySpec& spec, std::int64_t size_param) {
  switch (spec.kind) {
    case FamilyKind::dirichlet:
      return SignSequence(std::vector<int>(static_cast<std::size_t>(size_param), +1));
    case FamilyKind::random_sign:
      if (!spec.seed) throw std::invalid_argument("random_sign family needs a seed");
      return random_littlewood(size_param, *spec.seed);
    case FamilyKind::rudin_shapiro:
      return rudin_shapiro(static_cast<int>(size_param));
    case FamilyKind::fekete:
      return fekete(size_param);
    case FamilyKind::from_string:
      return SignSequence::from_string(spec.text);
    case FamilyKind::binary_random:
      throw std::invalid_argument("binary_random is not a sign family");
  }
  throw std::logic_error("make_sign_family: unreachable");
}

}  // namespace flatkit
