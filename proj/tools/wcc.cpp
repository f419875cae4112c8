// wcc - construct the weight-class families of binary cyclic codes, verify
// the lemma/dimension/bound claims about them, and run the distance engines.
//
// Exit codes: 0 success, 1 failed claim, 2 usage error, 3 engine limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcc/bitpoly.hpp"
#include "wcc/cycliccode.hpp"
#include "wcc/families.hpp"
#include "wcc/field.hpp"
#include "wcc/znsets.hpp"

namespace {

using namespace wcc;

struct MRange {
    int lo = 0, hi = 0;
};

MRange parse_range(const std::string& s) {
    auto pos = s.find("..");
    MRange r;
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, pos));
            r.hi = std::stoi(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--m", "expected M or LO..HI, got '" + s + "'");
    }
    if (r.lo < 2 || r.hi < r.lo)
        throw CLI::ValidationError("--m", "invalid range '" + s + "'");
    return r;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
        os = &file;
    }
};

struct Row {
    CodeRecord rec;
    std::string gen_bits;
    std::string gen_mono;
};

void emit_rows(const std::vector<Row>& rows, const std::string& format, std::ostream& os,
               bool with_gen) {
    if (format == "csv") {
        os << csv_header();
        if (with_gen) os << ",gen_bits,gen";
        os << "\n";
        for (const Row& row : rows) {
            os << to_csv(row.rec);
            if (with_gen) os << "," << row.gen_bits << "," << row.gen_mono;
            os << "\n";
        }
    } else {
        for (const Row& row : rows) {
            std::string line = to_json(row.rec);
            if (with_gen) {
                line.pop_back();  // strip closing brace
                line += ",\"gen_bits\":\"" + row.gen_bits + "\",\"gen\":\"" +
                        row.gen_mono + "\"}";
            }
            os << line << "\n";
        }
    }
}

// Record for one code: certificate lower bound always, exact distance when an
// engine can afford it (exhaustive for k <= 26, MITM when wmax > 0).
CodeRecord describe(const std::string& family, int m, const CyclicCode& c, int wmax) {
    CodeRecord rec;
    rec.family = family;
    rec.m = m;
    rec.n = c.n;
    rec.k = c.k;
    if (c.k == 0) {
        rec.method = "none";
        return rec;
    }
    BchCertificate cert = best_bch_certificate(c);
    rec.certificate = cert;
    rec.d_lower = cert.bound();
    if (c.k <= 26) {
        rec.d_exact = min_distance_exhaustive(c);
        rec.method = "exhaustive";
    } else if (wmax > 0) {
        if (auto d = min_distance_mitm(c, wmax)) {
            rec.d_exact = *d;
            rec.method = "mitm";
        } else {
            rec.method = "bch";
        }
    } else {
        rec.method = "bch";
    }
    return rec;
}

int run_table(const std::string& family, const MRange& mr, const std::string& format,
              const std::string& out, int wmax, int prm_r, bool with_gen) {
    OutputSink sink;
    sink.open(out);
    std::vector<Row> rows;
    auto push = [&](const std::string& fam, int m, const CyclicCode& c) {
        rows.push_back({describe(fam, m, c, wmax), to_bit_string(c.g),
                        to_monomial_string(c.g)});
    };
    for (int m = mr.lo; m <= mr.hi; ++m) {
        if (family == "mod3" || family == "mod3-dual") {
            FieldSpec f = make_field(m);
            for (int i = 0; i < 3; ++i) {
                CyclicCode c = build_mod3_code(i, m, f);
                if (family == "mod3")
                    push("mod3:" + std::to_string(i), m, c);
                else
                    push("mod3-dual:" + std::to_string(i), m, dual(c));
            }
        } else if (family == "duadic") {
            if (m % 2 == 0 || m < 3) continue;
            FieldSpec f = make_field(m);
            auto classes = duadic_pair_classes(m);
            auto pair = duadic_pair(m, f);
            const CyclicCode* codes[2] = {&pair.first, &pair.second};
            const std::pair<int, int> cls[2] = {classes.first, classes.second};
            for (int i = 0; i < 2; ++i) {
                std::string tag = std::to_string(cls[i].first) + std::to_string(cls[i].second);
                push("duadic:" + tag, m, *codes[i]);
                push("duadic-dual:" + tag, m, dual(*codes[i]));
            }
        } else if (family == "prm") {
            if (prm_r < 0 || prm_r >= m) continue;
            FieldSpec f = make_field(m);
            CyclicCode c = from_defining_set(prm_defining_set(prm_r, m), f);
            push("prm:" + std::to_string(prm_r), m, c);
        } else {
            throw CLI::ValidationError("--family", "unknown family '" + family + "'");
        }
    }
    emit_rows(rows, format, *sink.os, with_gen);
    return 0;
}

int run_verify(const std::string& what, int m_max, int m_single, const std::string& out) {
    OutputSink sink;
    sink.open(out);
    std::vector<CheckResult> checks;
    if (what == "lemmas") {
        checks = verify_all_lemmas(m_max > 0 ? m_max : 25);
    } else if (what == "theorems") {
        checks = verify_all_dimensions(m_max > 0 ? m_max : 20);
    } else if (what == "certificates") {
        checks = verify_certificate_dominance(m_max > 0 ? m_max : 15);
    } else if (what == "duadic") {
        if (m_max > 0) {
            for (int m = 5; m <= m_max; m += 2) {
                auto part = verify_duadic_structure(m);
                checks.insert(checks.end(), part.begin(), part.end());
            }
        } else {
            checks = verify_duadic_structure(m_single > 0 ? m_single : 5);
        }
    } else {
        throw CLI::ValidationError(
            "verify", "expected lemmas|theorems|certificates|duadic, got '" + what + "'");
    }
    *sink.os << checks_to_json(checks) << "\n";
    return all_passed(checks) ? 0 : 1;
}

CyclicCode build_selected(const std::string& family, int m, int member, int prm_r) {
    FieldSpec f = make_field(m);
    if (family == "mod3" || family == "mod3-dual") {
        if (member < 0 || member > 2)
            throw CLI::ValidationError("--i", "mod3 member must be 0, 1 or 2");
        CyclicCode c = build_mod3_code(member, m, f);
        return family == "mod3" ? c : dual(c);
    }
    if (family == "duadic" || family == "duadic-dual") {
        if (member < 0 || member > 1)
            throw CLI::ValidationError("--member", "duadic member must be 0 or 1");
        auto pair = duadic_pair(m, f);
        CyclicCode c = member == 0 ? pair.first : pair.second;
        return family == "duadic" ? c : dual(c);
    }
    if (family == "prm" || family == "prm-dual") {
        CyclicCode c = from_defining_set(prm_defining_set(prm_r, m), f);
        return family == "prm" ? c : dual(c);
    }
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

int run_mindist(const std::string& family, int m, int member, int prm_r,
                const std::string& method, int wmax, int target, long iterations,
                std::optional<std::uint64_t> seed, const std::string& format,
                const std::string& out) {
    OutputSink sink;
    sink.open(out);
    CyclicCode c = build_selected(family, m, member, prm_r);
    std::string suffix;
    if (family.starts_with("prm")) {
        suffix = std::to_string(prm_r);
    } else if (family.starts_with("duadic")) {
        auto classes = duadic_pair_classes(m);
        auto cls = member == 0 ? classes.first : classes.second;
        suffix = std::to_string(cls.first) + std::to_string(cls.second);
    } else {
        suffix = std::to_string(member);
    }
    std::string tag = family + ":" + suffix;
    CodeRecord rec;
    rec.family = tag;
    rec.m = m;
    rec.n = c.n;
    rec.k = c.k;
    if (c.k > 0) {
        BchCertificate cert = best_bch_certificate(c);
        rec.certificate = cert;
        rec.d_lower = cert.bound();
    }
    if (method == "exhaustive") {
        rec.method = "exhaustive";
        if (c.k > 0) rec.d_exact = min_distance_exhaustive(c);
    } else if (method == "mitm") {
        rec.method = "mitm";
        if (auto d = min_distance_mitm(c, wmax)) rec.d_exact = *d;
    } else if (method == "randomized") {
        if (!seed)
            throw CLI::ValidationError("--seed", "randomized method requires a seed");
        if (target <= 0)
            throw CLI::ValidationError("--target",
                                       "randomized method requires a target weight");
        rec.method = "randomized";
        rec.seed = *seed;
        if (auto word = low_weight_search(c, target, iterations, *seed))
            rec.d_upper = word->weight();
    } else {
        throw CLI::ValidationError("--method",
                                   "expected exhaustive|mitm|randomized, got '" + method + "'");
    }
    emit_rows({{rec, "", ""}}, format, *sink.os, false);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary cyclic codes from 2-adic weight classes: family tables, "
                 "claim verification, minimum-distance engines"};
    app.require_subcommand(1);

    std::string t_family = "mod3", t_m = "3..4", t_format = "jsonl", t_out;
    int t_wmax = 0, t_prm_r = 3;
    bool t_gen = false;
    CLI::App* table = app.add_subcommand("table", "emit one parameter record per family member");
    table->add_option("--family", t_family, "mod3 | mod3-dual | duadic | prm");
    table->add_option("--m", t_m, "extension degree or range, e.g. 5 or 3..4");
    table->add_option("--format", t_format, "jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    table->add_option("--out", t_out, "output path (default stdout)");
    table->add_option("--wmax", t_wmax, "try the MITM engine up to this weight when k > 26");
    table->add_option("--r", t_prm_r, "order for the prm family");
    table->add_flag("--with-gen", t_gen,
                    "append the generator polynomial (bit string and monomial form)");

    std::string v_what, v_out;
    int v_mmax = -1, v_m = -1;
    CLI::App* verify = app.add_subcommand("verify", "machine-check the catalog claims");
    verify->add_option("what", v_what, "lemmas | theorems | certificates | duadic")->required();
    verify->add_option("--m-max", v_mmax, "largest extension degree to check");
    verify->add_option("--m", v_m, "single extension degree (duadic)");
    verify->add_option("--out", v_out, "output path (default stdout)");

    std::string d_family = "mod3", d_method = "exhaustive", d_format = "jsonl", d_out;
    int d_m = 5, d_member = 0, d_prm_r = 3, d_wmax = 8, d_target = -1;
    long d_iter = 1000000;
    std::optional<std::uint64_t> d_seed;
    CLI::App* mindist = app.add_subcommand("mindist", "run a distance engine on one code");
    mindist->add_option("--family", d_family,
                        "mod3 | mod3-dual | duadic | duadic-dual | prm | prm-dual");
    mindist->add_option("--m", d_m, "extension degree")->required();
    mindist->add_option("--i,--member", d_member, "family member (mod3: 0..2, duadic: 0..1)");
    mindist->add_option("--r", d_prm_r, "order for the prm family");
    mindist->add_option("--method", d_method, "exhaustive | mitm | randomized");
    mindist->add_option("--wmax", d_wmax, "MITM weight cap");
    mindist->add_option("--target", d_target, "randomized: stop at this weight");
    mindist->add_option("--iterations", d_iter, "randomized: iteration budget");
    mindist->add_option("--seed", d_seed, "randomized: RNG seed (required)");
    mindist->add_option("--format", d_format, "jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    mindist->add_option("--out", d_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (table->parsed())
            return run_table(t_family, parse_range(t_m), t_format, t_out, t_wmax,
                             t_prm_r, t_gen);
        if (verify->parsed()) return run_verify(v_what, v_mmax, v_m, v_out);
        if (mindist->parsed())
            return run_mindist(d_family, d_m, d_member, d_prm_r, d_method, d_wmax,
                               d_target, d_iter, d_seed, d_format, d_out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const wcc::EngineLimitError& e) {
        std::cerr << "engine limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
