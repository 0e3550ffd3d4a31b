#include "tbcert/scan.hpp"
#include "tbcert/tables.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace tbcert;
using nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

const std::vector<std::string> kFormats{"json", "csv", "text"};

struct CertifyArgs {
    std::vector<std::string> input;
    std::string format = "json";
    std::string cache;
};

struct TablesArgs {
    int which = 1;
    std::string format = "text";
};

struct ScanArgs {
    long long max_det = 0;
    int max_m = 0;
    long long max_term = 0;
    bool dedupe = false;
    int workers = 0;
    std::string format = "csv";
    std::string cache;
};

struct InvariantsArgs {
    std::vector<std::string> input;
    std::string format = "text";
};

int run_certify(const CertifyArgs& a) {
    std::string text = join(a.input);
    bool is_cf = text.find('/') == std::string::npos;
    Fraction f = is_cf ? cf_value(parse_cf(text)) : parse_fraction(text);
    std::string key = to_string(f);

    std::optional<CertCache> cache;
    if (!a.cache.empty()) cache.emplace(a.cache);

    ordered_json j;
    if (cache)
        if (const ordered_json* hit = cache->find(key)) j = *hit;
    if (j.is_null()) {
        Certificate cert = is_cf ? certify(parse_cf(text)) : certify(f);
        j = cert.to_json();
        if (cache) {
            cache->put(key, j);
            cache->save();
        }
    }

    if (a.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (a.format == "csv")
        std::cout << csv_header() << "\n" << to_csv_row(j) << "\n";
    else
        std::cout << to_text(j);

    std::string v = j["verdict"].get<std::string>();
    return v == "non_simple" ? 0 : v == "inconclusive" ? 1 : 2;
}

int run_tables(const TablesArgs& a) {
    auto checks = reproduce_table(a.which);
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass();

    if (a.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json row;
            row["label"] = c.row->label;
            row["cf"] = c.row->cf;
            row["computed"] = to_string(c.cert.input);
            row["relation"] = to_string(c.label_vs_computed);
            row["delta_ok"] = c.delta_ok;
            row["grading_ok"] = c.grading_ok;
            row["rank_ok"] = c.rank_ok;
            row["pass"] = c.pass();
            row["note"] = c.row->note ? ordered_json(c.row->note) : ordered_json(nullptr);
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << "label,cf,computed,relation,delta_ok,grading_ok,rank_ok,pass\n";
        for (const auto& c : checks) {
            ContinuedFraction cf;
            for (long long t : c.row->cf) cf.terms.emplace_back(t);
            std::cout << c.row->label << ",\"" << to_string(cf) << "\","
                      << to_string(c.cert.input) << ',' << to_string(c.label_vs_computed) << ','
                      << c.delta_ok << ',' << c.grading_ok << ',' << c.rank_ok << ',' << c.pass()
                      << "\n";
        }
    } else {
        for (const auto& c : checks) {
            ContinuedFraction cf;
            for (long long t : c.row->cf) cf.terms.emplace_back(t);
            std::cout << c.row->label << " = " << to_string(cf) << " -> "
                      << to_string(c.cert.input) << " (" << to_string(c.label_vs_computed) << ")"
                      << "  delta " << (c.delta_ok ? "ok" : "MISMATCH") << ", grading "
                      << (c.grading_ok ? "ok" : "MISMATCH") << ", rank "
                      << (c.row->rank < 0 ? "n/a" : c.rank_ok ? "ok" : "MISMATCH") << "  "
                      << (c.pass() ? "PASS" : "FAIL") << "\n";
            if (c.row->note) std::cout << "  note: " << c.row->note << "\n";
        }
        std::cout << "table " << a.which << ": " << checks.size() << " rows, "
                  << (all_pass ? "all reproduced" : "MISMATCHES FOUND") << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_scan(const ScanArgs& a) {
    ScanConfig cfg;
    cfg.max_det = a.max_det;
    cfg.max_m = a.max_m;
    cfg.max_term = a.max_term;
    cfg.dedupe = a.dedupe;
    cfg.workers = a.workers;
    if (cfg.max_det <= 0 && cfg.max_m <= 0)
        throw std::invalid_argument("scan needs --max-det or --max-m/--max-term");

    std::vector<Fraction> targets = scan_targets(cfg);
    std::vector<ordered_json> rows(targets.size());

    if (a.cache.empty()) {
        auto certs = certify_batch(targets, cfg.workers, cfg.max_alexander);
        for (size_t i = 0; i < certs.size(); ++i) rows[i] = certs[i].to_json();
    } else {
        CertCache cache(a.cache);
        std::vector<size_t> miss_at;
        std::vector<Fraction> misses;
        for (size_t i = 0; i < targets.size(); ++i) {
            if (const ordered_json* hit = cache.find(to_string(targets[i])))
                rows[i] = *hit;
            else {
                miss_at.push_back(i);
                misses.push_back(targets[i]);
            }
        }
        auto certs = certify_batch(misses, cfg.workers, cfg.max_alexander);
        for (size_t k = 0; k < certs.size(); ++k) {
            rows[miss_at[k]] = certs[k].to_json();
            cache.put(to_string(misses[k]), rows[miss_at[k]]);
        }
        if (!misses.empty()) cache.save();
    }

    if (a.format == "json") {
        ordered_json arr = ordered_json::array();
        for (auto& r : rows) arr.push_back(std::move(r));
        std::cout << arr.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& r : rows) std::cout << to_csv_row(r) << "\n";
    } else {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << to_text(rows[i]);
        }
    }
    return 0;
}

int run_invariants(const InvariantsArgs& a) {
    std::string text = join(a.input);
    Fraction f = text.find('/') == std::string::npos ? cf_value(parse_cf(text)) : parse_fraction(text);
    ContinuedFraction cf = cf_expand_odd(f);
    LaurentPolynomial delta = alexander_two_bridge(f);
    Int sigma = signature_two_bridge(f);
    HfkTable hfk = hfk_alternating(delta, sigma);

    if (a.format == "json") {
        ordered_json j;
        j["fraction"] = to_string(f);
        j["determinant"] = to_int64(f.den, "determinant");
        ordered_json cfj = ordered_json::array();
        for (const Int& t : cf.terms) cfj.push_back(to_int64(t, "cf term"));
        j["cf"] = std::move(cfj);
        j["delta"] = delta.to_text();
        j["signature"] = to_int64(sigma, "signature");
        ordered_json rows = ordered_json::array();
        for (const auto& r : hfk.rows) {
            ordered_json row;
            row["alexander"] = r.alexander;
            row["maslov"] = to_int64(r.maslov, "maslov");
            row["rank"] = to_int64(r.rank, "rank");
            rows.push_back(std::move(row));
        }
        j["hfk"] = std::move(rows);
        j["total_rank"] = to_int64(hfk.total_rank(), "total rank");
        std::cout << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << "alexander,maslov,rank\n";
        for (const auto& r : hfk.rows)
            std::cout << r.alexander << ',' << r.maslov << ',' << r.rank << "\n";
    } else {
        std::cout << "fraction " << to_string(f) << ", determinant " << f.den << ", cf "
                  << to_string(cf) << "\n";
        std::cout << "delta: " << delta.to_text() << "\n";
        std::cout << "signature: " << sigma << "\n";
        for (const auto& r : hfk.rows)
            std::cout << "hfk: alexander " << r.alexander << ", maslov " << r.maslov << ", rank "
                      << r.rank << "\n";
        std::cout << "total rank " << hfk.total_rank() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifies Legendrian and transverse non-simplicity of two-bridge knots"};
    app.require_subcommand(1);

    CertifyArgs ca;
    TablesArgs ta;
    ScanArgs sa;
    InvariantsArgs ia;

    auto* certify_cmd = app.add_subcommand("certify", "certify one knot from q/D or [a1 a2 ...]");
    certify_cmd->add_option("input", ca.input, "fraction q/D or continued fraction terms")
        ->required();
    certify_cmd->add_option("--format", ca.format)->check(CLI::IsMember(kFormats));
    certify_cmd->add_option("--cache", ca.cache, "certificate store (JSON file)");

    auto* tables_cmd = app.add_subcommand("tables", "recompute a published example table");
    tables_cmd->add_option("table", ta.which, "table number")->required()->check(CLI::Range(1, 2));
    tables_cmd->add_option("--format", ta.format)->check(CLI::IsMember(kFormats));

    auto* scan_cmd = app.add_subcommand("scan", "certify every two-bridge knot in a range");
    scan_cmd->add_option("--max-det", sa.max_det, "sweep odd determinants up to this bound");
    scan_cmd->add_option("--max-m", sa.max_m, "sweep continued fractions with up to m pattern terms");
    scan_cmd->add_option("--max-term", sa.max_term, "term bound for the cf sweep");
    scan_cmd->add_flag("--dedupe", sa.dedupe, "one representative per same/mirror class");
    scan_cmd->add_option("--workers", sa.workers, "worker threads (0 = all)");
    scan_cmd->add_option("--format", sa.format)->check(CLI::IsMember(kFormats));
    scan_cmd->add_option("--cache", sa.cache, "certificate store (JSON file)");

    auto* inv_cmd = app.add_subcommand("invariants", "print delta, signature and the HFK table");
    inv_cmd->add_option("input", ia.input, "fraction q/D or continued fraction terms")->required();
    inv_cmd->add_option("--format", ia.format)->check(CLI::IsMember(kFormats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (certify_cmd->parsed()) return run_certify(ca);
        if (tables_cmd->parsed()) return run_tables(ta);
        if (scan_cmd->parsed()) return run_scan(sa);
        if (inv_cmd->parsed()) return run_invariants(ia);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
