// Command-line front end: triangle/euler queries, family enumeration, the
// individual bijections, the verification oracle, the n=4 golden table and
// the tangent-number tables. All JSON output is line-delimited with keys in
// a fixed order.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 malformed
// input object.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entringer/altbij.hpp"
#include "entringer/bintree.hpp"
#include "entringer/grword.hpp"
#include "entringer/json_io.hpp"
#include "entringer/lrcode.hpp"
#include "entringer/permutation.hpp"
#include "entringer/seidel.hpp"
#include "entringer/tangent.hpp"
#include "entringer/uword.hpp"
#include "entringer/verify.hpp"

namespace {

using entringer::io::json;
namespace perm = entringer::perm;
namespace lrcode = entringer::lrcode;
namespace bintree = entringer::bintree;
namespace altbij = entringer::altbij;
namespace grword = entringer::grword;
namespace uword = entringer::uword;
namespace harness = entringer::harness;
namespace io = entringer::io;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_bad_input = 3;

int run_triangle(int n, const std::string& format) {
    entringer::seidel::EntringerTriangle tri(n);
    if (format == "csv") {
        for (int row = 1; row <= n; ++row) {
            const auto& values = tri.row(row);
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << (i ? "," : "") << values[i].str();
            std::cout << "\n";
        }
        return exit_ok;
    }
    json out;
    out["n"] = n;
    json rows = json::array();
    for (int row = 1; row <= n; ++row) {
        json r = json::array();
        for (const auto& v : tri.row(row)) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    out["rows"] = rows;
    std::cout << out.dump() << "\n";
    return exit_ok;
}

int run_euler(int n) {
    json out;
    out["n"] = n;
    out["euler"] = entringer::seidel::euler_number(n).str();
    std::cout << out.dump() << "\n";
    return exit_ok;
}

std::vector<perm::Permutation> mm_family(int n, perm::Family fam, std::optional<int> k) {
    std::vector<perm::Permutation> out;
    for (const auto& p : perm::enumerate_alternating(n))
        for (const auto& tag : perm::classify(p))
            if (tag.family == fam && (!k || tag.k == *k)) {
                out.push_back(p);
                break;
            }
    return out;
}

int run_enumerate(const std::string& family, int n, std::optional<int> k,
                  const std::string& format) {
    if (n < 1) throw harness::UsageError("enumerate: --n must be >= 1");
    if (k && (*k < 1 || *k > n)) throw harness::UsageError("enumerate: --k must be in 1..n");
    if (family == "btp" && n < 2) throw harness::UsageError("enumerate: btp needs --n >= 2");
    const bool text = format == "text";
    const auto emit_perms = [&](const std::vector<perm::Permutation>& words) {
        for (const auto& p : words)
            std::cout << (text ? io::to_text(p) : io::to_json(p).dump()) << "\n";
    };

    if (family == "du") {
        emit_perms(perm::enumerate_downup(n, k));
    } else if (family == "dup") {
        std::vector<perm::Permutation> words;
        for (const auto& p : perm::enumerate_downup(n)) {
            const int stat = n == 1 ? 1 : n + 1 - (p.at(0) - p.at(1));
            if (!k || stat == *k) words.push_back(p);
        }
        emit_perms(words);
    } else if (family == "es") {
        for (const auto& seq : lrcode::enumerate(n, k))
            std::cout << (text ? lrcode::to_text(seq) : io::to_json(seq).dump()) << "\n";
    } else if (family == "bt" || family == "btp") {
        const auto stat =
            family == "bt" ? bintree::Statistic::leaf : bintree::Statistic::parent_of_n;
        for (const auto& t : bintree::enumerate(n, stat, k))
            std::cout << (text ? io::to_text(t) : io::to_json(t).dump()) << "\n";
    } else if (family == "mm" || family == "mmp" || family == "mmpp") {
        const perm::Family fam = family == "mm"    ? perm::Family::MM
                                 : family == "mmp" ? perm::Family::MMp
                                                   : perm::Family::MMpp;
        emit_perms(mm_family(n, fam, k));
    } else if (family == "gw" || family == "rw") {
        const auto kind = family == "gw" ? grword::Kind::G : grword::Kind::R;
        for (const auto& w : grword::enumerate(n, kind, k))
            std::cout << (text ? io::to_text(w.word) : io::to_json(w).dump()) << "\n";
    } else if (family == "uw" || family == "uwp") {
        const auto variant = family == "uw" ? uword::Variant::UW : uword::Variant::UWp;
        for (const auto& w : uword::enumerate(n, variant, k))
            std::cout << (text ? io::to_text(w) : io::to_json(w).dump()) << "\n";
    } else {
        throw harness::UsageError("unknown family: " + family);
    }
    return exit_ok;
}

int run_apply(const std::string& map, const std::string& input) {
    json in;
    try {
        in = json::parse(input);
    } catch (const json::parse_error& e) {
        throw io::ParseError(std::string("input is not JSON: ") + e.what());
    }
    json out;

    if (map == "psi") {
        out = io::to_json(lrcode::encode(io::permutation_from_json(in)));
    } else if (map == "psi-inv") {
        out = io::to_json(lrcode::decode(io::sequence_from_json(in)));
    } else if (map == "phi") {
        out = io::to_json(bintree::phi(io::sequence_from_json(in)));
    } else if (map == "phi-inv") {
        out = io::to_json(bintree::phi_inverse(io::tree_from_json(in)));
    } else if (map == "Psi") {
        out = io::to_json(bintree::psi_total(io::permutation_from_json(in)));
    } else if (map == "theta") {
        out = io::to_json(altbij::theta(io::permutation_from_json(in)));
    } else if (map == "theta-inv") {
        out = io::to_json(altbij::theta_inverse(io::permutation_from_json(in)));
    } else if (map == "beta") {
        out = io::to_json(altbij::beta(io::permutation_from_json(in)));
    } else if (map == "rho") {
        out = io::to_json(altbij::rho(io::permutation_from_json(in)));
    } else if (map == "rho-inv") {
        out = io::to_json(altbij::rho_inverse(io::permutation_from_json(in)));
    } else if (map == "rho-prime") {
        out = io::to_json(altbij::rho_prime(io::permutation_from_json(in)));
    } else if (map == "delta") {
        out = io::to_json(grword::delta(io::grword_from_json(in, grword::Kind::G)));
    } else if (map == "gamma") {
        out = io::to_json(uword::gamma(io::permutation_from_json(in)));
    } else if (map == "gamma-inv") {
        out = io::to_json(uword::gamma_inverse(io::uword_from_json(in)));
    } else if (map == "alpha") {
        out = io::to_json(uword::alpha_map(io::uword_from_json(in)));
    } else {
        throw harness::UsageError("unknown map: " + map);
    }

    json line;
    line["map"] = map;
    line["input"] = in;
    line["output"] = out;
    std::cout << line.dump() << "\n";
    return exit_ok;
}

int run_verify(int n, const std::vector<std::string>& family_args, bool as_json, bool force) {
    harness::VerifyOptions opt;
    opt.max_n = n;
    opt.allow_overscale = force;
    for (const auto& name : family_args) {
        const auto id = harness::family_from_name(name);
        if (!id) throw harness::UsageError("unknown family: " + name);
        opt.families.insert(*id);
    }
    const harness::VerificationReport report = harness::verify(opt);
    if (as_json) {
        std::cout << harness::to_json(report).dump() << "\n";
    } else {
        for (const auto& check : report.checks) {
            if (check.pass)
                std::cout << "ok   " << check.key << "\n";
            else
                std::cout << "FAIL " << check.key << ": expected " << check.expected << ", got "
                          << check.actual << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << " (" << report.checks.size()
                  << " checks, " << report.elapsed_ms << " ms)\n";
    }
    return report.pass ? exit_ok : exit_verification;
}

int run_golden(bool as_json) {
    const harness::GoldenReport report = harness::golden_table();
    if (as_json) {
        std::cout << harness::to_json(report).dump() << "\n";
    } else {
        for (std::size_t row = 0; row < report.rows.size(); ++row) {
            std::cout << "(" << row + 1 << ") " << entringer::fixtures::golden_row_label[row]
                      << ":";
            for (const auto& cell : report.rows[row]) {
                std::cout << "  " << cell.computed;
                if (cell.status == harness::CellStatus::erratum)
                    std::cout << " [ERRATUM, printed as " << cell.expected << "]";
                else if (cell.status == harness::CellStatus::mismatch)
                    std::cout << " [MISMATCH, expected " << cell.expected << "]";
            }
            std::cout << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? exit_ok : exit_verification;
}

int run_tangent(int n, int cap) {
    if (n < 1) throw harness::UsageError("tangent: --n must be >= 1");
    if (n > cap)
        throw harness::UsageError("tangent: --n exceeds the cap; raise it with --max-n");
    const auto t = entringer::tangent::t_table(n, cap);
    const auto s = entringer::tangent::s_table(n, cap);
    std::cout << "k: trees  split-pairs\n";
    std::set<int> ks;
    for (const auto& [k, v] : t) ks.insert(k);
    for (const auto& [k, v] : s) ks.insert(k);
    for (int k : ks) {
        const auto tv = t.count(k) ? t.at(k) : 0;
        const auto sv = s.count(k) ? s.at(k) : 0;
        std::cout << k << ": " << tv << "  " << sv << "\n";
    }
    const bool equal = t == s;
    std::cout << (equal ? "EQUAL" : "UNEQUAL") << "\n";
    return equal ? exit_ok : exit_verification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entringer-number toolkit: triangle, twelve families, bijections, oracle"};
    app.require_subcommand(1);

    auto* triangle = app.add_subcommand("triangle", "print the Entringer triangle");
    int tri_n = 7;
    std::string tri_format = "json";
    triangle->add_option("--n", tri_n, "number of rows")->required();
    triangle->add_option("--format", tri_format)->check(CLI::IsMember({"json", "csv"}));

    auto* euler = app.add_subcommand("euler", "print the Euler number E_n");
    int euler_n = 0;
    euler->add_option("--n", euler_n)->required()->check(CLI::NonNegativeNumber);

    auto* enumerate = app.add_subcommand("enumerate", "list one of the twelve families");
    std::string en_family;
    int en_n = 4;
    std::optional<int> en_k;
    std::string en_format = "json";
    enumerate->add_option("--family", en_family, "du|es|bt|btp|dup|mm|mmp|mmpp|gw|rw|uw|uwp")
        ->required();
    enumerate->add_option("--n", en_n)->required();
    enumerate->add_option("--k", en_k, "restrict to statistic value k");
    enumerate->add_option("--format", en_format)->check(CLI::IsMember({"json", "text"}));

    auto* apply = app.add_subcommand("apply", "apply one bijection to a JSON object");
    std::string ap_map, ap_input;
    apply
        ->add_option("--map", ap_map,
                     "psi|psi-inv|phi|phi-inv|Psi|theta|theta-inv|beta|rho|rho-inv|rho-prime|"
                     "delta|gamma|gamma-inv|alpha")
        ->required();
    apply->add_option("--input", ap_input, "JSON value (permutation, code, tree or U-word)")
        ->required();

    auto* verify = app.add_subcommand("verify", "run the exhaustive cross-family oracle");
    int ve_n = 9;
    std::vector<std::string> ve_families;
    bool ve_json = false, ve_force = false;
    verify->add_option("--n", ve_n, "verify families up to this size");
    verify->add_option("--families", ve_families, "subset of families (default: all)")
        ->delimiter(',');
    verify->add_flag("--json", ve_json, "emit the report as one JSON line");
    verify->add_flag("--force", ve_force, "allow n beyond the built-in caps");

    auto* golden = app.add_subcommand("golden", "recompute the twelve-family table at n=4");
    bool go_json = false;
    golden->add_flag("--json", go_json);

    auto* tangentcmd = app.add_subcommand("tangent", "0-2 tree vs split-pair tables");
    int ta_n = 2;
    int ta_cap = entringer::tangent::default_max_n;
    tangentcmd->add_option("--n", ta_n)->required();
    tangentcmd->add_option("--max-n", ta_cap, "raise the enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (triangle->parsed()) {
            if (tri_n < 1) throw harness::UsageError("triangle: --n must be >= 1");
            return run_triangle(tri_n, tri_format);
        }
        if (euler->parsed()) return run_euler(euler_n);
        if (enumerate->parsed()) return run_enumerate(en_family, en_n, en_k, en_format);
        if (apply->parsed()) return run_apply(ap_map, ap_input);
        if (verify->parsed()) return run_verify(ve_n, ve_families, ve_json, ve_force);
        if (golden->parsed()) return run_golden(go_json);
        if (tangentcmd->parsed()) return run_tangent(ta_n, ta_cap);
    } catch (const harness::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const io::ParseError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::domain_error& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    }
    return exit_usage;
}
