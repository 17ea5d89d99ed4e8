// Command-line surface over the ygseq library: sequence generation, table
// reproduction, the verification suite, and the number-theoretic scans.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ygseq/adic.hpp"
#include "ygseq/correlate.hpp"
#include "ygseq/fixtures.hpp"
#include "ygseq/gf2k.hpp"
#include "ygseq/seqgen.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

constexpr const char* kReportVersion = "ygseq-report/1";

struct Record {
    std::string label;
    std::string modulus;   // hex, most-significant digit first
    std::string expected;  // hex
    std::string actual;    // hex
    std::string pass;      // "pass", "fail", or "info"
};

std::string hex(const ygseq::BigInt& v) {
    if (v < 0) return "-0x" + ygseq::BigInt(-v).get_str(16);
    return "0x" + v.get_str(16);
}

std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

class Report {
public:
    void add(Record r) { records_.push_back(std::move(r)); }
    void check(std::string label, std::string modulus, std::string expected,
               std::string actual) {
        bool ok = expected == actual;
        add({std::move(label), std::move(modulus), std::move(expected),
             std::move(actual), ok ? "pass" : "fail"});
    }
    void info(std::string label, std::string actual) {
        add({std::move(label), "", "", std::move(actual), "info"});
    }

    bool all_pass() const {
        for (const auto& r : records_)
            if (r.pass == "fail") return false;
        return true;
    }

    void emit(std::ostream& os, const std::string& format) const {
        if (format == "csv") {
            os << "# " << kReportVersion << "\n";
            os << "label,modulus,expected,actual,pass\n";
            for (const auto& r : records_)
                os << r.label << ',' << r.modulus << ',' << r.expected << ','
                   << r.actual << ',' << r.pass << '\n';
        } else if (format == "struct") {
            os << "version " << kReportVersion << "\n";
            for (const auto& r : records_) {
                os << "record label=" << r.label;
                if (!r.modulus.empty()) os << " modulus=" << r.modulus;
                if (!r.expected.empty()) os << " expected=" << r.expected;
                os << " actual=" << r.actual << " pass=" << r.pass << "\n";
            }
        } else {  // paper-style grouped text
            for (const auto& r : records_) {
                os << r.label << ": " << r.actual;
                if (r.pass == "fail") os << "  (expected " << r.expected << ")";
                if (r.pass != "info") os << "  [" << r.pass << "]";
                os << "\n";
            }
        }
    }

private:
    std::vector<Record> records_;
};

int emit_and_exit(const Report& rep, const std::string& format,
                  const std::string& out_path) {
    if (out_path.empty()) {
        rep.emit(std::cout, format);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open output path: " << out_path << "\n";
            return kExitUsage;
        }
        rep.emit(f, format);
    }
    return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

std::optional<ygseq::FieldElem> parse_modulus(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return static_cast<ygseq::FieldElem>(std::stoull(s, nullptr, 16));
}

// "3" or "2..5" -> inclusive list
std::vector<unsigned> parse_k_range(const std::string& s) {
    const auto dots = s.find("..");
    unsigned lo, hi;
    if (dots == std::string::npos) {
        lo = hi = static_cast<unsigned>(std::stoul(s));
    } else {
        lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
        hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    }
    if (lo < 1 || hi < lo) throw CLI::ValidationError("--k", "bad k range");
    std::vector<unsigned> ks;
    for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

int cmd_generate(unsigned k, int delta, const std::string& modulus_hex,
                 const std::string& format, const std::string& out) {
    std::optional<ygseq::FieldContext> ctx;
    if (auto mod = parse_modulus(modulus_hex))
        ctx.emplace(ygseq::FieldContext::build(2 * k, *mod));
    auto s = ygseq::yu_gong(k, delta, ctx ? &*ctx : nullptr);

    Report rep;
    rep.info("k", std::to_string(k));
    rep.info("delta", std::to_string(delta));
    rep.info("modulus", hex(std::uint64_t{s.modulus}));
    rep.info("N", std::to_string(s.period()));
    rep.info("weight", std::to_string(s.bits.weight()));
    rep.info("ascii", s.bits.to_ascii());
    rep.info("hex", s.bits.to_hex());
    return emit_and_exit(rep, format, out);
}

// which = 1, 2, 3: the full off-peak profile for k = 2, 3, 4, grouped in
// quadruples, against the embedded reference block
int cmd_table_profile(unsigned which, unsigned workers,
                      const std::string& format, const std::string& out) {
    const unsigned k = which + 1;
    auto prof = ygseq::full_profile(ygseq::yu_gong(k).bits, workers);
    auto want = ygseq::fixtures::expected_autocorr(k, prof.period - 1);

    Report rep;
    bool all_ok = true;
    for (std::uint32_t tau = 1; tau < prof.period; tau += 4) {
        std::ostringstream got, exp;
        bool ok = true;
        for (std::uint32_t t = tau; t < std::min(tau + 4, prof.period); ++t) {
            got << (t > tau ? "," : "") << prof.values[t];
            exp << (t > tau ? "," : "") << want[t - 1];
            ok = ok && prof.values[t] == want[t - 1];
        }
        std::ostringstream label;
        label << "k=" << k << " tau=" << tau << ".." << tau + 3;
        if (ok)
            rep.add({label.str(), "", exp.str(), got.str(), "pass"});
        else
            rep.add({label.str(), "", exp.str(), got.str(), "fail"});
        all_ok = all_ok && ok;
    }
    (void)all_ok;
    return emit_and_exit(rep, format, out);
}

// which = 4: k, N, actual complexity, reported bound. The bound column is a
// hard expectation; the actual column is compared informationally.
int cmd_table_bounds(unsigned k_max, const std::string& format,
                     const std::string& out) {
    Report rep;
    for (unsigned k = 1; k <= k_max; ++k) {
        auto s = ygseq::yu_gong(k);
        auto adic = ygseq::two_adic_complexity(s.bits, k);
        std::ostringstream row;
        row << "k=" << k << " N=" << s.period() << " actual=" << adic.phi2
            << " bound=" << *adic.bound;
        rep.info("row", row.str());
        if (k <= 8) {
            rep.check("bound k=" + std::to_string(k), "",
                      std::to_string(ygseq::fixtures::kAdicBounds[k - 1]),
                      std::to_string(*adic.bound));
            const bool matches =
                adic.phi2 == static_cast<std::uint64_t>(
                                 ygseq::fixtures::kAdicActuals[k - 1]);
            rep.info("actual k=" + std::to_string(k),
                     matches ? "matches published value"
                             : "differs from published value");
        }
    }
    return emit_and_exit(rep, format, out);
}

int cmd_verify(const std::string& k_range, const std::vector<std::string>& only,
               const std::string& modulus_hex, unsigned workers,
               unsigned size_cap, const std::string& format,
               const std::string& out) {
    auto ks = parse_k_range(k_range);
    auto wants = [&only](const std::string& name) {
        return only.empty() ||
               std::find(only.begin(), only.end(), name) != only.end();
    };
    auto mod_override = parse_modulus(modulus_hex);
    if (mod_override && ks.size() != 1)
        throw CLI::ValidationError("--modulus",
                                   "modulus override needs a single k");

    Report rep;
    for (unsigned k : ks) {
        if (wants("theorem1") && k >= 2) {
            auto ctx = mod_override
                           ? ygseq::FieldContext::build(2 * k, *mod_override)
                           : ygseq::FieldContext::build(2 * k);
            for (int delta : {+1, -1}) {
                auto t1 = ygseq::verify_theorem1(k, delta, ctx, workers);
                std::ostringstream label;
                label << "theorem1 k=" << k << " delta=" << delta;
                rep.add({label.str(), hex(std::uint64_t{ctx.modulus()}),
                         "no mismatches",
                         t1.pass ? "no mismatches" : t1.failures.front(),
                         t1.pass ? "pass" : "fail"});
            }
        }
        if (k < 2) {
            rep.info("k=" + std::to_string(k),
                     "outside the verification suite's scope (k >= 2)");
            continue;
        }
        if (wants("congruences")) {
            auto cg = ygseq::verify_congruences(ygseq::yu_gong(k).bits, k);
            for (const auto& r : cg.records) {
                std::ostringstream label;
                label << "congruence k=" << k << " " << r.label;
                rep.add({label.str(), hex(r.modulus), hex(r.expected),
                         hex(r.actual), r.pass ? "pass" : "fail"});
            }
        }
        if (wants("lemma2") && k >= 2) {
            auto lm = ygseq::lemma2_checks(k, size_cap);
            std::ostringstream label;
            label << "lemma2 k=" << k;
            std::ostringstream gcds;
            gcds << "gcds " << hex(lm.gcd_quintic) << " "
                 << hex(lm.gcd_mersenne);
            rep.add({label.str(), "", "all clauses", gcds.str(),
                     lm.pass ? "pass" : "fail"});
        }
    }
    return emit_and_exit(rep, format, out);
}

int cmd_scan(bool primes, bool conjecture, unsigned k_max,
             const std::vector<unsigned>& ks, unsigned size_cap,
             const std::string& format, const std::string& out) {
    if (primes == conjecture)
        throw CLI::ValidationError("scan",
                                   "pick exactly one of --primes/--conjecture");
    Report rep;
    if (primes) {
        auto hits = ygseq::scan_prime_k(k_max);
        for (unsigned k = 4; k <= k_max; k += 4) {
            bool prime =
                std::find(hits.begin(), hits.end(), k) != hits.end();
            rep.info("k=" + std::to_string(k),
                     prime ? "prime" : "composite");
        }
        std::ostringstream all;
        for (std::size_t i = 0; i < hits.size(); ++i)
            all << (i ? ", " : "") << hits[i];
        rep.info("prime k", all.str());
    } else {
        std::vector<unsigned> want = ks.empty() ? std::vector<unsigned>{4, 8}
                                                : ks;
        for (const auto& e : ygseq::conjecture_scan(want, size_cap)) {
            std::string label = "k=" + std::to_string(e.k);
            if (e.skipped) {
                rep.info(label, "skipped (size cap)");
            } else {
                rep.info(label, "gcd " + hex(e.gcd_value) +
                                    (e.counterexample ? " COUNTEREXAMPLE"
                                                      : ""));
            }
        }
    }
    return emit_and_exit(rep, format, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interleaved-sequence toolkit: generation, autocorrelation, "
                 "2-adic complexity, verification, scans"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "struct";
    std::string out;
    unsigned workers = 1;
    unsigned size_cap = 16;
    app.add_option("--format", format)
        ->check(CLI::IsMember({"csv", "struct", "paper"}));
    app.add_option("--out", out);
    app.add_option("--workers", workers);
    app.add_option("--size-cap", size_cap);

    unsigned gen_k = 2;
    int gen_delta = 1;
    std::string modulus_hex;
    auto* gen = app.add_subcommand("generate", "emit one sequence");
    gen->add_option("--k", gen_k)->check(CLI::Range(1u, 16u));
    gen->add_option("--delta", gen_delta)->check(CLI::IsMember({1, -1}));
    gen->add_option("--modulus", modulus_hex);

    unsigned which = 1;
    unsigned k_max = 8;
    auto* tables = app.add_subcommand("tables", "reproduce reference tables");
    tables->add_option("--which", which)->required()->check(CLI::Range(1u, 4u));
    tables->add_option("--k-max", k_max)->check(CLI::Range(1u, 16u));

    std::string k_range = "2..5";
    std::vector<std::string> only;
    std::string verify_modulus;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--k", k_range);
    verify->add_option("--only", only)
        ->check(CLI::IsMember({"theorem1", "congruences", "lemma2"}));
    verify->add_option("--modulus", verify_modulus);

    bool primes = false, conjecture = false;
    unsigned scan_k_max = 24;
    std::vector<unsigned> scan_ks;
    auto* scan = app.add_subcommand("scan", "number-theoretic scans");
    scan->add_flag("--primes", primes);
    scan->add_flag("--conjecture", conjecture);
    scan->add_option("--k-max,--max-k", scan_k_max)->check(CLI::Range(1u, 64u));
    scan->add_option("--ks", scan_ks)->delimiter(',');

    try {
        app.parse(argc, argv);
        if (*gen)
            return cmd_generate(gen_k, gen_delta, modulus_hex, format, out);
        if (*tables)
            return which == 4 ? cmd_table_bounds(k_max, format, out)
                              : cmd_table_profile(which, workers, format, out);
        if (*verify)
            return cmd_verify(k_range, only, verify_modulus, workers, size_cap,
                              format, out);
        return cmd_scan(primes, conjecture, scan_k_max, scan_ks, size_cap,
                        format, out);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    } catch (const ygseq::ResourceCapError& e) {
        std::cerr << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
