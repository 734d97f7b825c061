// Command-line front end: constructions, verification and table reruns.
//
// Exit status: 0 success, 1 verification failed (report dumped), 2 usage or
// input error. Reports go to standard output, diagnostics to standard error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dbc/dbc.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

/// Input or usage problem detected after argument parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

dbc::VerifyOptions verify_options(unsigned threads) {
    dbc::VerifyOptions opt;
    opt.threads = std::max(1u, threads);
    if (const char* env = std::getenv("DBC_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            opt.budget = v;
        } catch (const std::exception&) {
            throw UsageError(std::string("DBC_BUDGET must be a non-negative integer, got '") + env + "'");
        }
    }
    return opt;
}

/// Sequence references accepted on the command line: everything resolve_sequence
/// knows, plus table1:n,R for an interleaving entry of the first table.
dbc::SequenceFile resolve(const std::string& ref) {
    const std::string prefix = "table1:";
    if (ref.rfind(prefix, 0) == 0) {
        const auto body = ref.substr(prefix.size());
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw UsageError("table1 reference must be table1:n,R");
        const auto il = dbc::build_interleave(dbc::find_interleave_recipe(
            static_cast<unsigned>(std::stoul(body.substr(0, comma))),
            static_cast<unsigned>(std::stoul(body.substr(comma + 1)))));
        return {il.sequence, il.n, il.radius};
    }
    if (ref.rfind("file:", 0) == 0 && !fs::exists(ref.substr(5)))
        throw UsageError("cannot open " + ref.substr(5));
    return dbc::resolve_sequence(ref);
}

void emit_sequence(const dbc::CyclicSequence& s, unsigned n, unsigned r, const std::string& out) {
    if (out.empty()) {
        dbc::write_sequence(std::cout, s, n, r);
    } else {
        dbc::save_sequence(out, s, n, r);
        std::cout << "wrote " << out << '\n';
    }
}

void emit_array(const dbc::PeriodicArray& a, unsigned m, unsigned n, unsigned r, const std::string& out) {
    if (out.empty()) {
        dbc::write_array(std::cout, a, m, n, r);
    } else {
        dbc::save_array(out, a, m, n, r);
        std::cout << "wrote " << out << '\n';
    }
}

void emit_code(const dbc::SequenceCode& code, const std::string& dir) {
    if (dir.empty()) throw UsageError("--out-dir is required for multi-sequence codes");
    fs::create_directories(dir);
    for (std::size_t i = 0; i < code.members.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "member_%05zu.dbcs", i);
        dbc::save_sequence((fs::path(dir) / name).string(), code.members[i], code.n, code.radius);
    }
    std::cout << "wrote " << code.members.size() << " sequences to " << dir << '\n';
}

dbc::SequenceCode load_code(const std::string& dir) {
    if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".dbcs") files.push_back(e.path());
    if (files.empty()) throw UsageError("no .dbcs files in " + dir);
    std::sort(files.begin(), files.end());
    std::vector<dbc::CyclicSequence> members;
    std::optional<std::pair<unsigned, unsigned>> decl;
    for (const auto& f : files) {
        auto sf = dbc::load_sequence(f.string());
        if (decl && *decl != std::make_pair(sf.n, sf.radius))
            throw UsageError("member " + f.string() + " declares a different (n, R)");
        decl = std::make_pair(sf.n, sf.radius);
        members.push_back(std::move(sf.sequence));
    }
    return dbc::SequenceCode(std::move(members), decl->first, decl->second);
}

/// Prints the report; returns the exit status it implies.
int report_status(const dbc::CoverageReport& rep) {
    if (rep.verified) {
        std::cout << rep.summary() << '\n';
        return kOk;
    }
    std::cout << rep.describe();
    return kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"de Bruijn covering sequences, codes and arrays"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for verification")->check(CLI::Range(1u, 256u));

    std::function<int()> action;
    auto opt = [&] { return verify_options(threads); };

    // ---------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "Exactly verify a sequence, array or code");
    verify->require_subcommand(1);
    struct {
        std::string file, dir;
        std::optional<unsigned> m, n, r;
    } va;
    auto* vseq = verify->add_subcommand("seq", "Verify a sequence file as an (n,R) covering sequence");
    vseq->add_option("--file", va.file, "Sequence file")->required();
    vseq->add_option("--n", va.n, "Window length (default: from header)");
    vseq->add_option("--r", va.r, "Radius (default: from header)");
    vseq->callback([&] {
        action = [&] {
            if (!fs::exists(va.file)) throw UsageError("cannot open " + va.file);
            const auto sf = dbc::load_sequence(va.file);
            return report_status(dbc::check_dbcs(sf.sequence, va.n.value_or(sf.n), va.r.value_or(sf.radius), opt()));
        };
    });
    auto* varr = verify->add_subcommand("array", "Verify an array file as an (m,n,R) covering array");
    varr->add_option("--file", va.file, "Array file")->required();
    varr->add_option("--m", va.m, "Window rows (default: from header)");
    varr->add_option("--n", va.n, "Window columns (default: from header)");
    varr->add_option("--r", va.r, "Radius (default: from header)");
    varr->callback([&] {
        action = [&] {
            if (!fs::exists(va.file)) throw UsageError("cannot open " + va.file);
            const auto af = dbc::load_array(va.file);
            return report_status(dbc::check_dbca(af.array, va.m.value_or(af.m), va.n.value_or(af.n),
                                                 va.r.value_or(af.radius), opt()));
        };
    });
    auto* vcode = verify->add_subcommand("code", "Verify a directory of sequences as a covering code");
    vcode->add_option("--dir", va.dir, "Directory of .dbcs files")->required();
    vcode->add_option("--n", va.n, "Window length (default: from headers)");
    vcode->add_option("--r", va.r, "Radius (default: from headers)");
    vcode->callback([&] {
        action = [&] {
            const auto code = load_code(va.dir);
            return report_status(dbc::check_dbcsc(code, va.n.value_or(code.n), va.r.value_or(code.radius), opt()));
        };
    });

    // ------------------------------------------------------------- construct
    auto* construct = app.add_subcommand("construct", "Build and verify a sequence or code");
    construct->require_subcommand(1);
    struct {
        unsigned n = 0, r = 0, variant = 0, pad = 0;
        std::string poly, gen, a, b, x, y, in, out, out_dir;
    } ca;

    auto* cseed = construct->add_subcommand("seed", "Catalog seed sequence");
    cseed->add_option("--n", ca.n, "Window length")->required();
    cseed->add_option("--r", ca.r, "Radius")->required();
    cseed->add_option("--variant", ca.variant, "Catalog variant");
    cseed->add_option("--out", ca.out, "Output file (default: standard output)");
    cseed->callback([&] {
        action = [&] {
            const auto s = dbc::known_seed(ca.n, ca.r, ca.variant);
            const auto rep = dbc::check_dbcs(s, ca.n, ca.r, opt());
            if (!rep.verified) return report_status(rep);
            emit_sequence(s, ca.n, ca.r, ca.out);
            std::cerr << rep.summary() << " k=" << s.period() << '\n';
            return kOk;
        };
    });

    auto* cdb = construct->add_subcommand("debruijn", "Binary de Bruijn sequence with padding zeros");
    cdb->add_option("--n", ca.n, "Order")->required();
    cdb->add_option("--pad", ca.pad, "Extra zeros in the longest zero run");
    cdb->add_option("--out", ca.out, "Output file (default: standard output)");
    cdb->callback([&] {
        action = [&] {
            const auto s = dbc::debruijn_padded(ca.n, ca.pad);
            const auto rep = dbc::check_dbcs(s, ca.n, 0, opt());
            if (!rep.verified) return report_status(rep);
            emit_sequence(s, ca.n, 0, ca.out);
            std::cerr << rep.summary() << " k=" << s.period() << '\n';
            return kOk;
        };
    });

    auto* clfsr = construct->add_subcommand("lfsr", "Four-sequence code of a primitive polynomial");
    clfsr->add_option("--poly", ca.poly, "Polynomial, e.g. x9+x4+1 or 0x211")->required();
    clfsr->add_option("--r", ca.r, "Radius")->required();
    clfsr->add_option("--out-dir", ca.out_dir, "Directory for the member sequences")->required();
    clfsr->callback([&] {
        action = [&] {
            const auto code = dbc::lfsr_dbcsc(dbc::Gf2Polynomial::parse(ca.poly), ca.r);
            const auto rep = dbc::check_dbcsc(code, code.n, code.radius, opt());
            if (!rep.verified) return report_status(rep);
            emit_code(code, ca.out_dir);
            std::cout << rep.summary() << " n=" << code.n << " total=" << code.total_length() << '\n';
            return kOk;
        };
    });

    auto* ccyc = construct->add_subcommand("cyclic-code", "Rotation classes of a binary cyclic code");
    ccyc->add_option("--gen", ca.gen, "Generator polynomial")->required();
    ccyc->add_option("--n", ca.n, "Code length")->required();
    ccyc->add_option("--r", ca.r, "Declared radius")->default_val(1u);
    ccyc->add_option("--out-dir", ca.out_dir, "Directory for the class sequences")->required();
    ccyc->callback([&] {
        action = [&] {
            const auto profile = dbc::cyclic_code_classes(dbc::Gf2Polynomial::parse(ca.gen), ca.n);
            const auto code = dbc::class_sequences(profile, ca.r);
            const auto rep = dbc::check_dbcsc(code, code.n, code.radius, opt());
            if (!rep.verified) return report_status(rep);
            emit_code(code, ca.out_dir);
            std::cout << "classes:";
            for (auto it = profile.class_counts.rbegin(); it != profile.class_counts.rend(); ++it)
                std::cout << ' ' << it->first << ':' << it->second;
            std::cout << '\n' << rep.summary() << '\n';
            return kOk;
        };
    });

    auto* csd = construct->add_subcommand("selfdual", "Self-dual sequence code from seeds X, Y");
    csd->add_option("--x", ca.x, "Seed X (binary string)")->default_val("00011011");
    csd->add_option("--y", ca.y, "Seed Y (binary string)")->default_val("00011010");
    csd->add_option("--out-dir", ca.out_dir, "Directory for the member sequences")->required();
    csd->callback([&] {
        action = [&] {
            auto bits = [](const std::string& s) {
                const auto seq = dbc::CyclicSequence::from_string(s);
                return dbc::Tuple(seq.symbols().begin(), seq.symbols().end());
            };
            const auto code = dbc::self_dual_dbcsc(bits(ca.x), bits(ca.y));
            const auto rep = dbc::check_dbcsc(code, code.n, code.radius, opt());
            if (!rep.verified) return report_status(rep);
            emit_code(code, ca.out_dir);
            std::cout << rep.summary() << " total=" << code.total_length() << '\n';
            return kOk;
        };
    });

    auto* cil = construct->add_subcommand("interleave", "Interleave two sequences of coprime lengths");
    cil->add_option("--a", ca.a, "First sequence (seed:n,R[,v] | debruijn:n[+pad] | file:path)")->required();
    cil->add_option("--b", ca.b, "Second sequence")->required();
    cil->add_option("--out", ca.out, "Output file (default: standard output)");
    cil->callback([&] {
        action = [&] {
            const auto a = resolve(ca.a);
            const auto b = resolve(ca.b);
            const auto il = dbc::interleave(a.sequence, b.sequence, a.n, b.n, a.radius, b.radius);
            const auto rep = dbc::check_dbcs(il.sequence, il.n, il.radius, opt());
            if (!rep.verified) return report_status(rep);
            emit_sequence(il.sequence, il.n, il.radius, ca.out);
            std::cout << rep.summary() << " n=" << il.n << " R=" << il.radius << " k=" << il.sequence.period()
                      << '\n';
            return kOk;
        };
    });

    struct {
        std::string in, out;
        std::optional<unsigned> n, r;
    } aa;
    auto assemble_action = [&] {
        auto code = load_code(aa.in);
        const unsigned n = aa.n.value_or(code.n);
        const unsigned r = aa.r.value_or(code.radius);
        const auto result = dbc::dbcsc_to_dbcs(code, n, r, opt());
        emit_sequence(result.sequence, n, r, aa.out);
        std::cout << result.report.summary() << " k=" << result.sequence.period()
                  << " inputs=" << result.trace.input_count << " input_total=" << result.trace.input_total
                  << " overlap=" << result.trace.total_overlap() << '\n';
        return kOk;
    };
    auto add_assemble = [&](CLI::App* cmd) {
        cmd->add_option("--in", aa.in, "Directory of member sequences")->required();
        cmd->add_option("--n", aa.n, "Window length (default: from headers)");
        cmd->add_option("--r", aa.r, "Radius (default: from headers)");
        cmd->add_option("--out", aa.out, "Output file (default: standard output)");
        cmd->callback([&] { action = assemble_action; });
    };
    add_assemble(construct->add_subcommand("assemble", "Merge a sequence code into one covering sequence"));
    add_assemble(app.add_subcommand("assemble", "Merge a sequence code into one covering sequence"));

    // ------------------------------------------------------------ 2-D arrays
    struct {
        std::string in, out;
        unsigned m = 0, n = 0, r = 0, q = 2, t = 1, rr = 1;
        std::size_t rows = 0, cols = 0;
        std::optional<std::uint64_t> seed;
        dbc::Count trials = 2'000'000;
    } fa;

    auto* cfold = app.add_subcommand("fold", "Fold an (mn,R) sequence into an M x (2n-1) array");
    cfold->add_option("--in", fa.in, "Sequence (seed:.. | debruijn:.. | table1:n,R | file:path)")->required();
    cfold->add_option("--m", fa.m, "Window rows")->required();
    cfold->add_option("--n", fa.n, "Window columns")->required();
    cfold->add_option("--out", fa.out, "Output file (default: standard output)");
    cfold->callback([&] {
        action = [&] {
            const auto src = resolve(fa.in);
            const auto f = dbc::fold(src.sequence, src.n, src.radius, fa.m, fa.n, opt());
            emit_array(f.array, fa.m, fa.n, src.radius, fa.out);
            std::cout << f.report.summary() << " M=" << f.plan.rows << " N=" << f.plan.cols
                      << " pad=" << f.plan.pad << '\n';
            return kOk;
        };
    });

    auto* ctile = app.add_subcommand("tile", "Fold t*r segments and tile the blocks");
    ctile->add_option("--in", fa.in, "Sequence reference")->required();
    ctile->add_option("--m", fa.m, "Window rows")->required();
    ctile->add_option("--n", fa.n, "Window columns")->required();
    ctile->add_option("--t", fa.t, "Blocks per block-row")->required();
    ctile->add_option("--r", fa.rr, "Block-rows")->required();
    ctile->add_option("--out", fa.out, "Output file (default: standard output)");
    ctile->callback([&] {
        action = [&] {
            const auto src = resolve(fa.in);
            const auto t = dbc::tile_fold(src.sequence, src.n, src.radius, fa.m, fa.n, fa.t, fa.rr, opt());
            emit_array(t.array, fa.m, fa.n, src.radius, fa.out);
            std::cout << t.report.summary() << " M=" << t.array.rows() << " N=" << t.array.cols()
                      << " kappa=" << t.segment_length << " block=" << t.block_rows << 'x' << t.block_cols
                      << '\n';
            return kOk;
        };
    });

    auto* cshift = app.add_subcommand("shift2", "Triangular-shift array of an (n,R) sequence");
    cshift->add_option("--in", fa.in, "Sequence reference")->required();
    cshift->add_option("--out", fa.out, "Output file (default: standard output)");
    cshift->callback([&] {
        action = [&] {
            const auto src = resolve(fa.in);
            const auto a = dbc::shift_construct(src.sequence, src.n, src.radius, opt());
            emit_array(a.array, 2, src.n, 2 * src.radius, fa.out);
            std::cout << a.report.summary() << " M=" << a.array.rows() << " N=" << a.array.cols()
                      << " area=" << a.array.area() << '\n';
            return kOk;
        };
    });

    auto* cpatch = app.add_subcommand("patch-random", "Random array completed with patch strips");
    cpatch->add_option("--m", fa.m, "Window rows")->required();
    cpatch->add_option("--n", fa.n, "Window columns")->required();
    cpatch->add_option("--r", fa.r, "Radius")->required();
    cpatch->add_option("--q", fa.q, "Alphabet size")->default_val(2u);
    cpatch->add_option("--rows", fa.rows, "Array rows M")->required();
    cpatch->add_option("--seed", fa.seed, "Random seed")->required();
    cpatch->add_option("--out", fa.out, "Output file (default: standard output)");
    cpatch->callback([&] {
        action = [&] {
            const auto p = dbc::random_patch(fa.m, fa.n, fa.r, fa.q, fa.rows, *fa.seed, opt());
            emit_array(p.array, fa.m, fa.n, fa.r, fa.out);
            std::cout << p.report.summary() << " N0=" << p.initial_cols << " L=" << p.initial_uncovered
                      << " strips=" << p.strips << " area=" << p.array.area() << '\n';
            return kOk;
        };
    });

    auto* csearch = app.add_subcommand("search2d", "Search for an M x N covering array");
    csearch->add_option("--m", fa.m, "Window rows")->required();
    csearch->add_option("--n", fa.n, "Window columns")->required();
    csearch->add_option("--r", fa.r, "Radius")->required();
    csearch->add_option("--q", fa.q, "Alphabet size")->default_val(2u);
    csearch->add_option("--rows", fa.rows, "Array rows M")->required();
    csearch->add_option("--cols", fa.cols, "Array columns N")->required();
    csearch->add_option("--seed", fa.seed, "Seed for the local search (exhaustive sweeps ignore it)");
    csearch->add_option("--trials", fa.trials, "Cell changes allowed in local-search mode");
    csearch->add_option("--out", fa.out, "Output file (default: standard output)");
    csearch->callback([&] {
        action = [&] {
            dbc::SearchOptions s;
            s.trials = fa.trials;
            const bool exhaustive_ok = [&] {
                long double c = 1;
                for (std::size_t i = 0; i < fa.rows * fa.cols; ++i) c *= fa.q;
                return c <= static_cast<long double>(s.exhaustive_limit);
            }();
            if (!exhaustive_ok && !fa.seed) throw UsageError("--seed is required when the search is randomized");
            s.seed = fa.seed.value_or(1);
            const auto res = dbc::exhaustive_search(fa.m, fa.n, fa.r, fa.q, fa.rows, fa.cols, s, opt());
            std::cout << "status=" << dbc::to_string(res.status) << " mode="
                      << (res.exhaustive ? "exhaustive" : "local") << " examined=" << res.examined << '\n';
            if (res.array) emit_array(*res.array, fa.m, fa.n, fa.r, fa.out);
            return kOk;
        };
    });

    // ---------------------------------------------------------------- tables
    auto* t1 = app.add_subcommand("table1", "Rerun the sequence-length table (TSV)");
    t1->callback([&] {
        action = [&] {
            dbc::write_tsv(std::cout, dbc::table1_rows(opt()));
            return kOk;
        };
    });
    std::uint64_t t2_seed = 1;
    auto* t2 = app.add_subcommand("table2", "Rerun the array-size table (TSV)");
    t2->add_option("--trials", fa.trials, "Cell changes per local search");
    t2->add_option("--seed", t2_seed, "Seed for local searches")->default_val(1);
    t2->callback([&] {
        action = [&] {
            dbc::SearchOptions s;
            s.trials = fa.trials;
            s.seed = t2_seed;
            dbc::write_tsv(std::cout, dbc::table2_rows(s, opt()));
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const dbc::VerificationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cout << e.report().describe();
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
