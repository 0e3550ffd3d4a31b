#pragma once

#include "tbcert/certifier.hpp"

namespace tbcert {

struct ScanConfig {
    Int max_det = 0;    // determinant sweep over odd D <= max_det when positive
    int max_m = 0;      // continued fraction sweep over odd lengths <= 2*max_m+1
    Int max_term = 0;   // term bound for the cf sweep
    bool dedupe = false;
    int workers = 0;    // 0 = library default
    long long max_alexander = kMaxDeterminant;
};

// fractions the scan will certify: q/D reduced, D odd, sorted by (D, q);
// with dedupe, the smallest numerator of each Same/Mirror class present
std::vector<Fraction> scan_targets(const ScanConfig& cfg);

// plain loop over an explicit target list, in order
std::vector<Certificate> certify_batch_serial(const std::vector<Fraction>& targets,
                                              long long max_alexander = kMaxDeterminant);

// OpenMP over an explicit target list; same output as the serial batch for
// every worker count (0 = all available)
std::vector<Certificate> certify_batch(const std::vector<Fraction>& targets, int workers,
                                       long long max_alexander = kMaxDeterminant);

// serial reference: one certificate per target, in target order
std::vector<Certificate> scan_serial(const ScanConfig& cfg);

// OpenMP engine; byte-identical to scan_serial for every worker count
std::vector<Certificate> scan_parallel(const ScanConfig& cfg);

// row renderings, all read from the certificate's JSON form
std::string csv_header();
std::string to_csv_row(const nlohmann::ordered_json& cert);
std::string to_text(const nlohmann::ordered_json& cert);

// On-disk certificate store keyed by the canonical fraction, one JSON object
// per file. Values are trusted as-is on hit; misses recompute. Last write
// wins, which is harmless because certification is pure.
class CertCache {
  public:
    explicit CertCache(std::string path);  // loads the file if it exists
    const nlohmann::ordered_json* find(const std::string& fraction) const;
    void put(const std::string& fraction, nlohmann::ordered_json cert);
    void save() const;  // write to a temp file, then rename over
    size_t size() const { return entries_.size(); }

  private:
    std::string path_;
    nlohmann::ordered_json entries_ = nlohmann::ordered_json::object();
};

}  // namespace tbcert
