#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmfq/arith.hpp"
#include "gmfq/elliptic.hpp"
#include "gmfq/eta.hpp"

namespace gmfq {

/// Normalized weight-2 Hecke eigenform on Gamma0(level), coefficients
/// b(1..bound) as exact integers.
struct Eigenform {
    std::int64_t level = 0;
    std::vector<std::int64_t> coeffs; // index 0 unused, kept 0
    bool cm = false;
    std::string source; // "eta" | "curve" | "file"

    std::int64_t bound() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    std::int64_t coeff(std::int64_t n) const;
    // level 0 marks a file-loaded form of unknown level; no primes excluded.
    bool good_prime(std::int64_t p) const { return level == 0 || level % p != 0; }
};

/// A level with both backends attached. The two are cross-checked against
/// each other on load, so every entry is self-validating.
struct CatalogueEntry {
    std::int64_t level;
    std::vector<EtaFactor> eta;
    EllipticCurve curve;
    bool cm;
};

const std::vector<CatalogueEntry>& catalogue();
const CatalogueEntry& catalogue_entry(std::int64_t level); // throws CatalogueError

/// Extend a_p at primes to b(n) for all n <= bound:
///   b(p^{r+1}) = b(p) b(p^r) - p b(p^{r-1})   for p not dividing level,
///   b(p^r)     = b(p)^r                        for p | level,
///   b(mn)      = b(m) b(n)                     for coprime m, n.
/// `ap` must cover every prime <= bound.
std::vector<std::int64_t> hecke_extend(const std::map<std::int64_t, std::int64_t>& ap,
                                       std::int64_t level, std::int64_t bound,
                                       const PrimeTable& table);

struct LoadOptions {
    std::string backend = "auto"; // auto | eta | curve
    std::filesystem::path cache_dir; // empty disables the a_p cache
    int threads = 1;
    std::int64_t crosscheck_bound = 1000; // auto backend checks eta==curve up to min(M, this)
};

/// a_p for all primes <= bound, cache-first: rows already in the per-curve
/// cache file are reused, missing primes are computed and the file is
/// extended. Bad primes come from the catalogue.
std::map<std::int64_t, std::int64_t> ap_table(const EllipticCurve& curve, std::int64_t bound,
                                              const PrimeTable& table,
                                              const LoadOptions& options = {});

/// Load a catalogue level ("11", "36", ...) or a coefficient CSV path with
/// coefficients through `bound`. With the auto backend the eta expansion and
/// curve coefficients are compared up to min(bound, crosscheck_bound); any
/// disagreement is an integrity error.
Eigenform load_eigenform(const std::string& key, std::int64_t bound, const PrimeTable& table,
                         const LoadOptions& options = {});

/// CSV import/export, header "n,bn", n ascending from 1.
Eigenform eigenform_from_csv(const std::filesystem::path& path,
                             std::optional<std::int64_t> bound = std::nullopt);
void eigenform_to_csv(const Eigenform& form, const std::filesystem::path& path);

} // namespace gmfq
