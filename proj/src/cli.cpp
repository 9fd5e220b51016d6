#include "sqdepth/cli.hpp"

#include <CLI11.hpp>
#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sqdepth/constructions.hpp"
#include "sqdepth/corpus.hpp"
#include "sqdepth/errors.hpp"
#include "sqdepth/koszul.hpp"
#include "sqdepth/report.hpp"
#include "sqdepth/stanley.hpp"

namespace sqdepth {

namespace {

std::string read_stream_or_file(const std::string& path, std::istream& fallback) {
    if (path == "-") {
        std::stringstream buf;
        buf << fallback.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("file_open", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct InstanceSource {
    std::string file = "-";
    std::string example;
    long long characteristic = 0;
    bool char_given = false;

    void attach(CLI::App* sub) {
        sub->add_option("file", file, "instance file, - for stdin");
        sub->add_option("--example", example, "bundled example id instead of a file");
        sub->add_option("--char", characteristic, "field characteristic override")
            ->each([this](const std::string&) { char_given = true; });
    }

    Instance load(std::istream& in) const {
        FieldSpec field = make_field(characteristic);
        if (!example.empty()) return example_instance(example, field);
        Instance inst = parse_instance(read_stream_or_file(file, in));
        if (char_given) return make_instance(inst.n, inst.I.gens, inst.J.gens, field);
        return inst;
    }
};

std::uint64_t remap_bits(std::uint64_t bits, const std::vector<int>& index_map) {
    std::uint64_t out = 0;
    for (std::uint64_t b = bits; b; b &= b - 1)
        out |= std::uint64_t(1) << (index_map[std::size_t(std::countr_zero(b))] - 1);
    return out;
}

int cmd_depth(const InstanceSource& src, const std::string& module_label, bool with_betti,
              std::ostream& out) {
    Instance inst = src.load(std::cin);
    RestrictedInstance restricted = restrict_support(inst);
    SqModule m = module_label == "I/J"   ? SqModule::quotient(restricted.inst)
                 : module_label == "S/J" ? SqModule::ring_mod(restricted.inst.J)
                                         : SqModule::ring_mod(restricted.inst.I);
    KoszulOptions opts;
    opts.collect = with_betti;
    KoszulReport rep = koszul_homology(m, inst.field, opts);
    if (restricted.removed > 0)
        for (BettiEntry& entry : rep.entries)
            entry.multidegree = remap_bits(entry.multidegree, restricted.index_map);
    emit_depth_report(out, module_label, inst.n, inst.field, rep, restricted.removed,
                      with_betti);
    return kExitOk;
}

int cmd_sdepth(const InstanceSource& src, int k, bool has_k, long long budget,
               bool certificate, std::ostream& out) {
    Instance inst = src.load(std::cin);
    Poset poset = build_poset(inst);
    if (has_k) {
        DecisionResult dec = sdepth_decision(poset, k, budget);
        out << "k=" << k << '\n';
        out << "nodes=" << dec.nodes << '\n';
        switch (dec.status) {
            case SearchStatus::Proven:
                out << "decision=proven\n";
                if (certificate) emit_partition(out, *dec.certificate);
                return kExitOk;
            case SearchStatus::Refuted:
                out << "decision=refuted\n";
                return kExitVerificationFailed;
            case SearchStatus::Timeout:
                out << "decision=timeout\n";
                return kExitTimeout;
        }
    }
    SdepthResult res = sdepth(poset, budget);
    out << "sdepth=" << res.value << '\n';
    out << "exact=" << (res.exact ? "true" : "false") << '\n';
    out << "nodes=" << res.nodes << '\n';
    if (certificate) emit_partition(out, res.certificate);
    return res.exact ? kExitOk : kExitTimeout;
}

int cmd_verify(const InstanceSource& src, const std::string& lemma, bool theorem,
               const std::string& partition_file, int k, std::ostream& out) {
    Instance inst = src.load(std::cin);
    int selected = int(!lemma.empty()) + int(theorem) + int(!partition_file.empty());
    if (selected != 1)
        throw InputError("verify_mode",
                         "choose exactly one of --lemma, --theorem, --partition");
    if (!partition_file.empty()) {
        IntervalPartition part = parse_partition(read_stream_or_file(partition_file, std::cin));
        PartitionCheck check = verify_partition(build_poset(inst), part, k);
        out << "k=" << k << '\n';
        out << "value=" << check.value << '\n';
        for (const std::string& v : check.violations) out << "violation=" << v << '\n';
        out << "ok=" << (check.ok ? "true" : "false") << '\n';
        return check.ok ? kExitOk : kExitVerificationFailed;
    }
    CheckOutcome outcome = theorem ? verify_theorem(inst) : verify_lemma(inst, lemma);
    out << "check=" << (theorem ? "theorem" : "lemma:" + lemma) << '\n';
    out << "verdict=" << to_string(outcome.verdict) << '\n';
    if (!outcome.detail.empty()) out << "detail=" << outcome.detail << '\n';
    if (outcome.dump) out << "dump=" << *outcome.dump << '\n';
    return outcome.verdict == Verdict::Counterexample ? kExitVerificationFailed : kExitOk;
}

int cmd_search(int n, int d, int r, int i, const std::string& seeds, long long budget,
               const std::string& log_path, std::ostream& out) {
    SearchParams params;
    params.n = n;
    params.d = d;
    params.r = r;
    params.i = i;
    std::size_t sep = seeds.find("..");
    if (sep == std::string::npos)
        throw InputError("seed_range", "--seeds expects the form A..B");
    try {
        params.seed_begin = std::stoull(seeds.substr(0, sep));
        params.seed_end = std::stoull(seeds.substr(sep + 2));
    } catch (const std::exception&) {
        throw InputError("seed_range", "--seeds expects unsigned integers A..B");
    }
    params.sdepth_budget = budget;

    std::ofstream log_file;
    std::ostream* log = &out;
    if (!log_path.empty()) {
        log_file.open(log_path);
        if (!log_file) throw InputError("file_open", "cannot open " + log_path);
        log = &log_file;
    }
    std::vector<std::string> dumps;
    SearchSummary sum = search_question(params, log, &dumps);
    out << "generated=" << sum.generated << '\n';
    out << "applicable=" << sum.applicable << '\n';
    out << "holds=" << sum.holds << '\n';
    out << "rejections=" << sum.rejections << '\n';
    out << "counterexamples=" << sum.counterexamples.size() << '\n';
    for (const std::string& dump : dumps) out << "counterexample=" << dump << '\n';
    return sum.counterexamples.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_gen(const std::string& mode, int n, int d, int r, std::uint64_t seed,
            long long characteristic, const std::string& out_path, std::ostream& out) {
    FieldSpec field = make_field(characteristic);
    Instance inst = random_instance(n, d, r, seed, parse_gen_mode(mode), field);
    std::string text = serialize_instance(inst);
    if (out_path == "-") {
        out << text << '\n';
    } else {
        std::ofstream file(out_path);
        if (!file) throw InputError("file_open", "cannot open " + out_path);
        file << text << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"squarefree monomial quotient depth toolkit"};
    app.require_subcommand(1);

    InstanceSource analyze_src;
    CLI::App* analyze = app.add_subcommand("analyze", "derived sets, gcd families, hypotheses");
    analyze_src.attach(analyze);

    InstanceSource depth_src;
    std::string depth_module = "I/J";
    bool with_betti = false;
    CLI::App* depth = app.add_subcommand("depth", "Koszul depth and homology");
    depth_src.attach(depth);
    depth->add_option("--module", depth_module, "module to resolve")
        ->check(CLI::IsMember({"I/J", "S/J", "S/I"}));
    depth->add_flag("--betti", with_betti, "list nonzero homology dimensions");

    InstanceSource sdepth_src;
    int k = 0;
    bool certificate = false;
    long long budget = kDefaultNodeBudget;
    CLI::App* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth via interval partitions");
    sdepth_src.attach(sdepth_cmd);
    CLI::Option* k_opt = sdepth_cmd->add_option("--k", k, "decide sdepth >= k only");
    sdepth_cmd->add_flag("--certificate", certificate, "print the certifying partition");
    sdepth_cmd->add_option("--budget", budget, "backtracking node budget");

    InstanceSource verify_src;
    std::string lemma, partition_file;
    bool theorem = false;
    int verify_k = 0;
    CLI::App* verify = app.add_subcommand("verify", "check a lemma, the theorem, or a partition");
    verify_src.attach(verify);
    verify->add_option("--lemma", lemma, "lemma id: d, dprime, l2, l3, l4, pr");
    verify->add_flag("--theorem", theorem, "check the depth bound under its hypotheses");
    verify->add_option("--partition", partition_file, "interval partition file");
    verify->add_option("--k", verify_k, "required partition value");

    std::string example_id;
    long long repro_char = 0;
    CLI::App* reproduce = app.add_subcommand("reproduce", "audit a bundled example");
    reproduce->add_option("--example", example_id, "example id")->required();
    reproduce->add_option("--char", repro_char, "field characteristic");

    int s_n = 0, s_d = 0, s_r = 0, s_i = 1;
    std::string seeds, log_path;
    long long s_budget = 0;
    CLI::App* search = app.add_subcommand("search", "random search over the depth question");
    search->add_option("--n", s_n, "variables")->required();
    search->add_option("--d", s_d, "generator degree")->required();
    search->add_option("--r", s_r, "generator count")->required();
    search->add_option("--i", s_i, "question index");
    search->add_option("--seeds", seeds, "seed range A..B")->required();
    search->add_option("--log", log_path, "record log file");
    search->add_option("--budget", s_budget, "sdepth node budget per instance (0 = skip)");

    std::string gen_mode, gen_out = "-";
    int g_n = 0, g_d = 0, g_r = 0;
    std::uint64_t g_seed = 0;
    long long gen_char = 0;
    CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("--mode", gen_mode, "generic, pathological, common-generator")->required();
    gen->add_option("--n", g_n, "variables")->required();
    gen->add_option("--d", g_d, "generator degree")->required();
    gen->add_option("--r", g_r, "generator count")->required();
    gen->add_option("--seed", g_seed, "seed");
    gen->add_option("--char", gen_char, "field characteristic");
    gen->add_option("--out", gen_out, "output file, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (analyze->parsed()) {
            Instance inst = analyze_src.load(std::cin);
            DerivedSets ds = derive_sets(inst);
            emit_analysis(out, inst, ds, gcd_family(inst), check_theorem_hypotheses(inst, ds));
            return kExitOk;
        }
        if (depth->parsed()) return cmd_depth(depth_src, depth_module, with_betti, out);
        if (sdepth_cmd->parsed())
            return cmd_sdepth(sdepth_src, k, !k_opt->empty(), budget, certificate, out);
        if (verify->parsed())
            return cmd_verify(verify_src, lemma, theorem, partition_file, verify_k, out);
        if (reproduce->parsed()) {
            AuditReport rep = audit_example(example_id, make_field(repro_char));
            emit_audit(out, rep);
            return rep.all_asserts_pass ? kExitOk : kExitVerificationFailed;
        }
        if (search->parsed())
            return cmd_search(s_n, s_d, s_r, s_i, seeds, s_budget, log_path, out);
        if (gen->parsed())
            return cmd_gen(gen_mode, g_n, g_d, g_r, g_seed, gen_char, gen_out, out);
        err << "no subcommand selected\n";
        return kExitInvalidInput;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const TimeoutError& e) {
        err << "timeout: " << e.what() << '\n';
        return kExitTimeout;
    } catch (const Error& e) {
        err << "failure: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}

}  // namespace sqdepth
