#include "gmfq/eigenform.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gmfq/errors.hpp"

namespace gmfq {

std::int64_t Eigenform::coeff(std::int64_t n) const {
    if (n < 1 || n > bound()) {
        throw ShapeError("coefficient b(" + std::to_string(n) + ") not available, bound is " +
                         std::to_string(bound()));
    }
    return coeffs[static_cast<std::size_t>(n)];
}

const std::vector<CatalogueEntry>& catalogue() {
    // Weight-2 rational newforms with an eta-quotient model. Bad-prime a_p
    // values were derived from the eta expansions and are pinned here so the
    // curve backend never needs reduction-type analysis.
    static const std::vector<CatalogueEntry> entries = {
        {11,
         {{1, 2}, {11, 2}},
         {0, -1, 1, -10, -20, 11, {{11, 1}}},
         false},
        {14,
         {{1, 1}, {2, 1}, {7, 1}, {14, 1}},
         {1, 0, 1, 4, -6, 14, {{2, -1}, {7, 1}}},
         false},
        {15,
         {{1, 1}, {3, 1}, {5, 1}, {15, 1}},
         {1, 1, 1, -10, -10, 15, {{3, -1}, {5, 1}}},
         false},
        {20,
         {{2, 2}, {10, 2}},
         {0, 1, 0, 4, 4, 20, {{2, 0}, {5, -1}}},
         false},
        {24,
         {{2, 1}, {4, 1}, {6, 1}, {12, 1}},
         {0, -1, 0, -4, 4, 24, {{2, 0}, {3, -1}}},
         false},
        {27,
         {{3, 2}, {9, 2}},
         {0, 0, 1, 0, -7, 27, {{3, 0}}},
         true},
        {32,
         {{4, 2}, {8, 2}},
         {0, 0, 0, 4, 0, 32, {{2, 0}}},
         true},
        {36,
         {{6, 4}},
         {0, 0, 0, 0, 1, 36, {{2, 0}, {3, 0}}},
         true},
    };
    return entries;
}

const CatalogueEntry& catalogue_entry(std::int64_t level) {
    for (const auto& entry : catalogue()) {
        if (entry.level == level) return entry;
    }
    throw CatalogueError("no catalogue form at level " + std::to_string(level));
}

std::vector<std::int64_t> hecke_extend(const std::map<std::int64_t, std::int64_t>& ap,
                                       std::int64_t level, std::int64_t bound,
                                       const PrimeTable& table) {
    if (bound < 1) throw DomainError("hecke_extend requires bound >= 1");
    std::vector<std::int64_t> b(static_cast<std::size_t>(bound) + 1, 0);
    b[1] = 1;
    for (std::int64_t p : table.primes()) {
        if (p > bound) break;
        auto it = ap.find(p);
        if (it == ap.end()) {
            throw IntegrityError("missing a_p for prime " + std::to_string(p));
        }
        std::int64_t prev = 1, cur = it->second, pe = p;
        while (pe <= bound) {
            b[static_cast<std::size_t>(pe)] = cur;
            std::int64_t next = (level % p == 0) ? it->second * cur : it->second * cur - p * prev;
            prev = cur;
            cur = next;
            if (pe > bound / p) break;
            pe *= p;
        }
    }
    // b(n) = b(p^e) b(n / p^e) with p the smallest prime factor of n.
    for (std::int64_t n = 2; n <= bound; ++n) {
        auto factors = table.factor(n);
        if (factors.size() == 1) continue; // prime power, already filled
        std::int64_t pe = 1;
        for (int i = 0; i < factors[0].second; ++i) pe *= factors[0].first;
        b[static_cast<std::size_t>(n)] =
            b[static_cast<std::size_t>(pe)] * b[static_cast<std::size_t>(n / pe)];
    }
    return b;
}

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, std::int64_t conductor) {
    return dir / ("ap_N" + std::to_string(conductor) + ".csv");
}

std::map<std::int64_t, std::int64_t> read_ap_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open a_p cache " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "p,ap") {
        throw IoError("malformed a_p cache header in " + path.string());
    }
    std::map<std::int64_t, std::int64_t> out;
    std::int64_t last = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw IoError("malformed a_p cache row '" + line + "' in " + path.string());
        }
        std::int64_t p = 0, ap = 0;
        try {
            p = std::stoll(line.substr(0, comma));
            ap = std::stoll(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw IoError("malformed a_p cache row '" + line + "' in " + path.string());
        }
        if (p <= last) throw IoError("a_p cache rows out of order in " + path.string());
        last = p;
        out.emplace(p, ap);
    }
    return out;
}

void write_ap_csv(const std::filesystem::path& path,
                  const std::map<std::int64_t, std::int64_t>& ap) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write a_p cache " + path.string());
    out << "p,ap\n";
    for (const auto& [p, value] : ap) out << p << "," << value << "\n";
    if (!out) throw IoError("failed writing a_p cache " + path.string());
}

} // namespace

std::map<std::int64_t, std::int64_t> ap_table(const EllipticCurve& curve, std::int64_t bound,
                                              const PrimeTable& table,
                                              const LoadOptions& options) {
    if (bound > table.bound()) {
        throw ShapeError("a_p bound exceeds prime table bound");
    }
    std::map<std::int64_t, std::int64_t> known;
    std::filesystem::path file;
    bool use_cache = !options.cache_dir.empty();
    if (use_cache) {
        std::error_code ec;
        std::filesystem::create_directories(options.cache_dir, ec);
        if (ec) throw IoError("cannot create cache directory " + options.cache_dir.string());
        file = cache_file(options.cache_dir, curve.conductor);
        if (std::filesystem::exists(file)) known = read_ap_csv(file);
    }

    std::vector<std::int64_t> missing;
    for (std::int64_t p : table.primes()) {
        if (p > bound) break;
        if (!known.count(p)) missing.push_back(p);
    }
    if (!missing.empty()) {
        auto values = curve_ap_range(curve, missing, options.threads);
        for (std::size_t i = 0; i < missing.size(); ++i) known.emplace(missing[i], values[i]);
        if (use_cache) write_ap_csv(file, known);
    }

    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t p : table.primes()) {
        if (p > bound) break;
        out.emplace(p, known.at(p));
    }
    return out;
}

namespace {

Eigenform from_eta(const CatalogueEntry& entry, std::int64_t bound) {
    EtaQuotient quotient(entry.eta);
    auto ints = quotient.expand_integer(bound);
    Eigenform form;
    form.level = entry.level;
    form.cm = entry.cm;
    form.source = "eta";
    form.coeffs.resize(ints.size());
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (!ints[i].fits_slong_p()) {
            throw IntegrityError("eta coefficient overflows at n = " + std::to_string(i));
        }
        form.coeffs[i] = ints[i].get_si();
    }
    if (form.bound() >= 1 && form.coeffs[1] != 1) {
        throw IntegrityError("eta backend for level " + std::to_string(entry.level) +
                             " is not normalized");
    }
    return form;
}

Eigenform from_curve(const CatalogueEntry& entry, std::int64_t bound, const PrimeTable& table,
                     const LoadOptions& options) {
    auto ap = ap_table(entry.curve, bound, table, options);
    for (const auto& [p, value] : entry.curve.bad_ap) {
        if (p <= bound) ap[p] = value;
    }
    Eigenform form;
    form.level = entry.level;
    form.cm = entry.cm;
    form.source = "curve";
    form.coeffs = hecke_extend(ap, entry.level, bound, table);
    return form;
}

} // namespace

Eigenform load_eigenform(const std::string& key, std::int64_t bound, const PrimeTable& table,
                         const LoadOptions& options) {
    if (bound < 1) throw DomainError("coefficient bound must be >= 1");
    bool numeric = !key.empty() && key.find_first_not_of("0123456789") == std::string::npos;
    if (!numeric) {
        return eigenform_from_csv(key, bound);
    }
    const CatalogueEntry& entry = catalogue_entry(std::stoll(key));
    if (options.backend == "eta") return from_eta(entry, bound);
    if (options.backend == "curve") return from_curve(entry, bound, table, options);
    if (options.backend != "auto") {
        throw DomainError("unknown backend '" + options.backend + "'");
    }

    Eigenform primary = from_curve(entry, bound, table, options);
    std::int64_t check = std::min(bound, options.crosscheck_bound);
    Eigenform reference = from_eta(entry, check);
    for (std::int64_t n = 1; n <= check; ++n) {
        if (primary.coeffs[n] != reference.coeffs[n]) {
            throw IntegrityError("backend disagreement at level " + std::to_string(entry.level) +
                                 ", n = " + std::to_string(n) + ": curve says " +
                                 std::to_string(primary.coeffs[n]) + ", eta says " +
                                 std::to_string(reference.coeffs[n]));
        }
    }
    return primary;
}

Eigenform eigenform_from_csv(const std::filesystem::path& path,
                             std::optional<std::int64_t> bound) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open coefficient file " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "n,bn") {
        throw IoError("malformed coefficient header in " + path.string());
    }
    std::vector<std::int64_t> coeffs{0};
    std::int64_t expected = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t comma = line.find(',');
        std::int64_t n = 0, value = 0;
        try {
            n = std::stoll(line.substr(0, comma));
            value = std::stoll(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw IoError("malformed coefficient row '" + line + "' in " + path.string());
        }
        if (n != expected) {
            throw IoError("coefficient rows must run n = 1,2,... without gaps in " +
                          path.string());
        }
        coeffs.push_back(value);
        ++expected;
        if (bound && expected > *bound) break;
    }
    if (coeffs.size() < 2) throw IoError("no coefficients in " + path.string());
    if (coeffs[1] != 1) {
        throw IntegrityError("coefficient file " + path.string() +
                             " is not normalized: b(1) = " + std::to_string(coeffs[1]));
    }
    if (bound && static_cast<std::int64_t>(coeffs.size()) - 1 < *bound) {
        throw ShapeError("coefficient file " + path.string() + " ends at n = " +
                         std::to_string(coeffs.size() - 1) + ", need " + std::to_string(*bound));
    }
    Eigenform form;
    form.level = 0;
    form.coeffs = std::move(coeffs);
    form.cm = false;
    form.source = "file";
    return form;
}

void eigenform_to_csv(const Eigenform& form, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write coefficient file " + path.string());
    out << "n,bn\n";
    for (std::int64_t n = 1; n <= form.bound(); ++n) {
        out << n << "," << form.coeffs[static_cast<std::size_t>(n)] << "\n";
    }
    if (!out) throw IoError("failed writing coefficient file " + path.string());
}

} // namespace gmfq
