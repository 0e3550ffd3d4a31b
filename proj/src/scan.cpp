#include "tbcert/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace tbcert {

namespace {

struct FractionLess {
    bool operator()(const Fraction& a, const Fraction& b) const {
        return a.den != b.den ? a.den < b.den : a.num < b.num;
    }
};

// smallest numerator in the Same/Mirror class {q, q^-1, D-q, D-q^-1}
Int class_key(const Fraction& f) {
    Int inv = mod_inverse(f.num, f.den);
    Int best = f.num;
    if (inv < best) best = inv;
    if (f.den - f.num < best) best = f.den - f.num;
    if (f.den - inv < best) best = f.den - inv;
    return best;
}

void dedupe_in_order(std::vector<Fraction>& v) {
    std::set<std::pair<Int, Int>> seen;
    std::erase_if(v, [&](const Fraction& f) {
        return !seen.insert({f.den, class_key(f)}).second;
    });
}

}  // namespace

std::vector<Fraction> scan_targets(const ScanConfig& cfg) {
    if (cfg.max_det > 0 && cfg.max_m > 0)
        throw std::invalid_argument("scan_targets: determinant and cf sweeps are exclusive");
    std::vector<Fraction> out;
    if (cfg.max_det > 0) {
        for (Int d = 3; d <= cfg.max_det; d += 2)
            for (Int q = 1; q < d; ++q)
                if (boost::multiprecision::gcd(q, d) == 1) out.emplace_back(q, d);
    } else if (cfg.max_m > 0) {
        if (cfg.max_term < 1) throw std::invalid_argument("scan_targets: max_term must be positive");
        long long mt = to_int64(cfg.max_term, "scan_targets");
        // every positive odd-length list is the canonical expansion of its
        // value, so the sweep never repeats a fraction
        for (int m = 1; m <= cfg.max_m; ++m) {
            std::vector<long long> t(2 * m + 1, 1);
            while (true) {
                ContinuedFraction cf;
                for (long long v : t) cf.terms.emplace_back(v);
                Fraction f = cf_value(cf);
                if (f.den % 2 != 0) out.push_back(std::move(f));
                size_t k = 0;
                while (k < t.size() && ++t[k] > mt) t[k++] = 1;
                if (k == t.size()) break;
            }
        }
        std::sort(out.begin(), out.end(), FractionLess{});
    }
    if (cfg.dedupe) dedupe_in_order(out);
    return out;
}

std::vector<Certificate> certify_batch_serial(const std::vector<Fraction>& targets,
                                              long long max_alexander) {
    std::vector<Certificate> out;
    out.reserve(targets.size());
    for (const auto& f : targets) out.push_back(certify(f, max_alexander));
    return out;
}

std::vector<Certificate> certify_batch(const std::vector<Fraction>& targets, int workers,
                                       long long max_alexander) {
    std::vector<std::optional<Certificate>> slots(targets.size());
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
    int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(targets.size()); ++i) {
        try {
            slots[i].emplace(certify(targets[i], max_alexander));
        } catch (...) {
#pragma omp critical
            {
                if (!err) err = std::current_exception();
            }
        }
    }
#else
    (void)workers;
    for (size_t i = 0; i < targets.size(); ++i) slots[i].emplace(certify(targets[i], max_alexander));
#endif
    if (err) std::rethrow_exception(err);
    std::vector<Certificate> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<Certificate> scan_serial(const ScanConfig& cfg) {
    return certify_batch_serial(scan_targets(cfg), cfg.max_alexander);
}

std::vector<Certificate> scan_parallel(const ScanConfig& cfg) {
    return certify_batch(scan_targets(cfg), cfg.workers, cfg.max_alexander);
}

std::string csv_header() {
    return "fraction,cf,winding,tb,rot,sl,grading,k0,delta_k0,rank,bound,path";
}

namespace {

std::string csv_field(const nlohmann::ordered_json& v) {
    if (v.is_null()) return "";
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string cf_text(const nlohmann::ordered_json& cf) {
    std::string out = "[";
    for (size_t i = 0; i < cf.size(); ++i) {
        if (i) out += ' ';
        out += cf[i].dump();
    }
    return out + "]";
}

}  // namespace

std::string to_csv_row(const nlohmann::ordered_json& cert) {
    std::ostringstream out;
    out << cert["input"].get<std::string>() << ",\"" << cf_text(cert["cf"]) << "\","
        << csv_field(cert["winding"]) << ',' << csv_field(cert["tb"]) << ','
        << csv_field(cert["rot"]) << ',' << csv_field(cert["sl"]) << ','
        << csv_field(cert["grading"]) << ',' << csv_field(cert["k0"]) << ",\""
        << csv_field(cert["delta_k0"]) << "\"," << csv_field(cert["rank_r"]) << ','
        << csv_field(cert["bound_n"]) << ',' << cert["path"].get<std::string>();
    return out.str();
}

std::string to_text(const nlohmann::ordered_json& cert) {
    std::ostringstream out;
    out << cert["input"].get<std::string>() << " = " << cf_text(cert["cf"]) << "\n";
    out << "verdict: " << cert["verdict"].get<std::string>();
    if (!cert["bound_n"].is_null()) out << " (N = " << csv_field(cert["bound_n"]) << ")";
    out << ", path: " << cert["path"].get<std::string>() << "\n";
    if (!cert["reason"].is_null()) out << "reason: " << cert["reason"].get<std::string>() << "\n";
    if (!cert["winding"].is_null()) {
        out << "winding " << csv_field(cert["winding"]);
        if (!cert["writhe"].is_null())
            out << ", writhe " << csv_field(cert["writhe"]) << ", cusps "
                << csv_field(cert["up_cusps"]) << " up / " << csv_field(cert["down_cusps"])
                << " down\n"
                << "tb " << csv_field(cert["tb"]) << ", rot " << csv_field(cert["rot"]) << ", sl "
                << csv_field(cert["sl"]) << ", grading " << csv_field(cert["grading"]) << "\n";
        else
            out << "\n";
    }
    if (!cert["k0"].is_null())
        out << "companion model K0 = " << csv_field(cert["k0"]) << ", delta = "
            << csv_field(cert["delta_k0"]) << ", rank " << csv_field(cert["rank_r"]) << "\n";
    if (!cert["family"].empty())
        out << "family: " << cert["family"].size() << " half twist splittings (k, l)\n";
    for (const auto& n : cert["notes"]) out << "note: " << n.get<std::string>() << "\n";
    return out.str();
}

CertCache::CertCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    entries_ = nlohmann::ordered_json::parse(in);
    if (!entries_.is_object()) throw std::runtime_error("cache file is not a JSON object: " + path_);
}

const nlohmann::ordered_json* CertCache::find(const std::string& fraction) const {
    auto it = entries_.find(fraction);
    return it == entries_.end() ? nullptr : &*it;
}

void CertCache::put(const std::string& fraction, nlohmann::ordered_json cert) {
    entries_[fraction] = std::move(cert);
}

void CertCache::save() const {
    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << entries_.dump(1) << '\n';
    }
    if (std::rename(tmp.c_str(), path_.c_str()) != 0)
        throw std::runtime_error("cannot move cache file into place: " + path_);
}

}  // namespace tbcert
