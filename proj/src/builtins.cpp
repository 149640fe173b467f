#include "ringline/builtins.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ringline/ideals.hpp"
#include "ringline/ring_spec.hpp"

namespace ringline {

namespace {

std::optional<unsigned> gf_order(std::string_view name) {
  if (name.size() < 3 || name.substr(0, 2) != "GF") return std::nullopt;
  unsigned value = 0;
  for (char ch : name.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    value = value * 10 + static_cast<unsigned>(ch - '0');
    if (value > 100000) return std::nullopt;
  }
  return value;
}

}  // namespace

Ring builtin_ring(std::string_view name) {
  if (name == "R_triangle") {
    Ring gf2 = make_gf(2);
    return direct_product({gf2, gf2, gf2});
  }
  if (name == "GF2xGF2") {
    Ring gf2 = make_gf(2);
    return direct_product({gf2, gf2});
  }
  if (auto p = gf_order(name)) return make_gf(*p);
  std::string known;
  for (const std::string& n : builtin_ring_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw std::invalid_argument("unknown ring '" + std::string(name) +
                              "'; built-ins: " + known +
                              "; or use file:<path>");
}

std::vector<std::string> builtin_ring_names() {
  return {"R_triangle", "GF2", "GF3", "GF2xGF2", "GF<p> (p prime, p <= 97)"};
}

Ring resolve_ring_argument(std::string_view arg) {
  constexpr std::string_view kFilePrefix = "file:";
  if (arg.substr(0, kFilePrefix.size()) == kFilePrefix) {
    std::string path(arg.substr(kFilePrefix.size()));
    std::ifstream in(path);
    if (!in)
      throw std::invalid_argument("cannot open ring spec file '" + path + "'");
    std::ostringstream content;
    content << in.rdbuf();
    return ring_from_spec(content.str());
  }
  return builtin_ring(arg);
}

std::optional<std::string> builtin_isomorphism_class(const Ring& r) {
  // The only candidate among products of prime fields with matching size
  // is the one given by the prime factorization.
  std::size_t n = r.size();
  std::vector<unsigned> primes;
  std::size_t rest = n;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= rest; ++p)
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  if (rest > 1) primes.push_back(static_cast<unsigned>(rest));
  for (unsigned p : primes)
    if (p > kMaxPrime) return std::nullopt;
  if (n > kIsomorphismSizeCap) return std::nullopt;

  std::vector<Ring> factors;
  for (unsigned p : primes) factors.push_back(make_gf(p));
  Ring candidate =
      factors.size() == 1 ? factors[0] : direct_product(std::move(factors));
  if (!find_isomorphism(r, candidate)) return std::nullopt;
  return candidate.label();
}

}  // namespace ringline
