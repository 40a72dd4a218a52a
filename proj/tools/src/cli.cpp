#include "augraph_cli/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "augraph/augment.hpp"
#include "augraph/dataset_io.hpp"
#include "augraph/encoder.hpp"
#include "augraph/eval.hpp"
#include "augraph/fidelity.hpp"
#include "augraph/parallel.hpp"
#include "augraph/rng.hpp"
#include "augraph/text_augment.hpp"
#include "augraph/version.hpp"
#include "manifest.hpp"

namespace augraph::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything an invocation accumulates for its manifests.
struct RunContext {
    std::vector<std::string> argv;
    std::string subcommand;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, std::string> input_digests;
    std::vector<std::string> output_paths;
    bool quiet = false;

    void add_input(const fs::path& path) {
        input_digests[path.string()] = digest_hex(digest_path(path));
    }

    json manifest() const {
        json m;
        m["version"] = kVersion;
        m["subcommand"] = subcommand;
        m["argv"] = argv;
        m["seeds"] = seeds;
        m["inputs"] = input_digests;
        m["outputs"] = output_paths;
        return m;
    }

    void note(const std::string& line) const {
        if (!quiet) std::cout << line << "\n";
    }
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

// Stages <final>.manifest.json next to every declared output.
void stage_manifests(OutputStager& stager, const RunContext& ctx) {
    const std::string body = ctx.manifest().dump(2) + "\n";
    for (const std::string& out : ctx.output_paths) {
        const fs::path manifest_path = out + ".manifest.json";
        write_text(stager.stage_file(manifest_path), body);
    }
}

EmbeddingMatrix load_embedding_matrix(const fs::path& emb_path, const fs::path& labels_path) {
    EmbeddingMatrix emb;
    emb.rows = read_matrix_csv(emb_path);
    emb.labels = read_labels(labels_path);
    if (emb.labels.size() != emb.rows.rows())
        throw std::runtime_error(labels_path.string() + ": " +
                                 std::to_string(emb.labels.size()) + " labels for " +
                                 std::to_string(emb.rows.rows()) + " embedding rows in " +
                                 emb_path.string());
    return emb;
}

// Remaps arbitrary integer document labels to contiguous 0-based ids, sorted
// by raw value, mirroring the TU loader.
GraphDataset corpus_to_dataset(const std::vector<Document>& docs, const EmbeddingTable& table,
                               std::size_t window, const std::string& name) {
    std::map<int, int> label_map;
    for (const Document& doc : docs) label_map.emplace(doc.label, 0);
    int next = 0;
    for (auto& [raw, id] : label_map) id = next++;

    GraphDataset ds;
    ds.name = name;
    ds.class_count = static_cast<int>(label_map.size());
    ds.feature_source = FeatureSource::Attributes;
    ds.graphs.reserve(docs.size());
    for (const Document& doc : docs) {
        Graph g = build_cooccurrence(doc, window, table);
        g.label = label_map.at(doc.label);
        ds.graphs.push_back(std::move(g));
    }
    return ds;
}

// ---------------------------------------------------------------------------
// Subcommand runners. Each loads inputs, computes, stages outputs, then
// commits; exceptions before commit() leave nothing behind.
// ---------------------------------------------------------------------------

int run_augment(RunContext& ctx, const fs::path& input, const std::string& op, double ratio,
                std::uint64_t seed, const fs::path& out,
                const std::optional<fs::path>& embeddings) {
    const AugmentationSpec spec = make_augmentation_spec(op, ratio, seed);
    const bool needs_table = spec.kind == AugmentKind::SynonymReplace ||
                             spec.kind == AugmentKind::RandomInsert;
    if (needs_table && !embeddings)
        throw UsageError("--embeddings is required for op \"" + op + "\"");

    ctx.add_input(input);
    std::optional<EmbeddingTable> table;
    if (embeddings) {
        ctx.add_input(*embeddings);
        table = load_embedding_table(*embeddings);
    }

    const GraphDataset ds = load_tu_dataset(input);
    const GraphDataset augmented = apply_dataset(spec, ds, table ? &*table : nullptr);

    ctx.output_paths.push_back(out.string());
    OutputStager stager;
    write_tu_dataset(augmented, stager.stage_dir(out));
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note("wrote " + out.string() + " (" + std::to_string(augmented.size()) + " graphs, op " +
             op + ")");
    return 0;
}

int run_text_build(RunContext& ctx, const fs::path& corpus, const fs::path& embeddings,
                   std::size_t window, const fs::path& out) {
    ctx.add_input(corpus);
    ctx.add_input(embeddings);
    const auto docs = load_corpus(corpus);
    const auto table = load_embedding_table(embeddings);
    const GraphDataset ds = corpus_to_dataset(docs, table, window, corpus.stem().string());

    ctx.output_paths.push_back(out.string());
    OutputStager stager;
    write_tu_dataset(ds, stager.stage_dir(out));
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note("wrote " + out.string() + " (" + std::to_string(ds.size()) + " graphs, window " +
             std::to_string(window) + ")");
    return 0;
}

int run_text_augment(RunContext& ctx, const fs::path& input, const fs::path& embeddings,
                     const std::string& config_text, std::uint64_t seed, const fs::path& out) {
    ContextAugConfig config = parse_context_config(config_text);
    ctx.add_input(input);
    ctx.add_input(embeddings);
    const auto table = load_embedding_table(embeddings);
    const GraphDataset ds = load_tu_dataset(input);

    GraphDataset augmented = ds;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        ContextAugConfig per_item = config;
        per_item.seed = split_seed(seed, i);
        augmented.graphs[i] = apply_context(per_item, ds.graphs[i], table);
    }

    ctx.output_paths.push_back(out.string());
    OutputStager stager;
    write_tu_dataset(augmented, stager.stage_dir(out));
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note("wrote " + out.string() + " (" + std::to_string(augmented.size()) + " graphs)");
    return 0;
}

int run_fidelity(RunContext& ctx, const fs::path& a, const fs::path& b, double coverage,
                 const fs::path& out) {
    ctx.add_input(a);
    ctx.add_input(b);
    const GraphDataset ds_a = load_tu_dataset(a);
    const GraphDataset ds_b = load_tu_dataset(b);
    if (ds_a.size() != ds_b.size())
        throw std::runtime_error("datasets differ in size: " + std::to_string(ds_a.size()) +
                                 " vs " + std::to_string(ds_b.size()));

    json pairs = json::array();
    for (std::size_t i = 0; i < ds_a.size(); ++i) {
        const SpectralReport spectral =
            spectral_similarity(ds_a.graphs[i], ds_b.graphs[i], coverage);
        json entry;
        entry["index"] = i;
        entry["spectral_score"] = spectral.score;
        entry["k"] = spectral.k;
        entry["feature_similarity"] = feature_similarity(ds_a.graphs[i], ds_b.graphs[i]);
        entry["ssim"] = nullptr;  // graphs only; no raw images on this path
        pairs.push_back(std::move(entry));
    }
    json report;
    report["pairs"] = std::move(pairs);

    ctx.output_paths.push_back(out.string());
    OutputStager stager;
    write_text(stager.stage_file(out), report.dump(2) + "\n");
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note("wrote " + out.string() + " (" + std::to_string(ds_a.size()) + " pairs)");
    return 0;
}

int run_embed(RunContext& ctx, const fs::path& input, std::size_t layers, std::size_t hidden,
              std::uint64_t seed, const fs::path& out, const fs::path& labels_out) {
    ctx.add_input(input);
    const GraphDataset ds = load_tu_dataset(input);

    EncoderConfig config;
    config.layers = layers;
    config.hidden_dim = hidden;
    config.seed = seed;
    const Encoder enc = init_encoder(config, ds.feature_dim());
    const EmbeddingMatrix emb = embed_dataset(enc, ds);

    ctx.output_paths.push_back(out.string());
    ctx.output_paths.push_back(labels_out.string());
    OutputStager stager;
    write_matrix_csv(emb.rows, stager.stage_file(out));
    write_labels(emb.labels, stager.stage_file(labels_out));
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note("wrote " + out.string() + " (" + std::to_string(emb.rows.rows()) + " x " +
             std::to_string(emb.rows.cols()) + ") and " + labels_out.string());
    return 0;
}

int run_eval_knn(RunContext& ctx, const fs::path& emb_path, const fs::path& labels_path,
                 std::size_t k, std::size_t folds, std::uint64_t seed,
                 const std::optional<fs::path>& report_path) {
    ctx.add_input(emb_path);
    ctx.add_input(labels_path);
    const EmbeddingMatrix emb = load_embedding_matrix(emb_path, labels_path);
    const KnnResult result = knn_accuracy(emb, k, folds, seed);

    json report;
    report["k"] = k;
    report["folds"] = folds;
    report["mean_accuracy"] = result.mean_accuracy;
    report["std_accuracy"] = result.std_accuracy;
    report["fold_accuracies"] = result.fold_accuracies;

    if (report_path) {
        ctx.output_paths.push_back(report_path->string());
        OutputStager stager;
        write_text(stager.stage_file(*report_path), report.dump(2) + "\n");
        stage_manifests(stager, ctx);
        stager.commit();
    }
    ctx.note(report.dump(2));
    return 0;
}

int run_sanity_sim(RunContext& ctx, const fs::path& emb_path, const fs::path& labels_path,
                   const fs::path& out_pgm, const fs::path& report_path) {
    ctx.add_input(emb_path);
    ctx.add_input(labels_path);
    const EmbeddingMatrix emb = load_embedding_matrix(emb_path, labels_path);
    const SimilarityReport sim = similarity_matrix(emb);

    json report;
    report["n"] = sim.matrix.rows();
    report["intra_mean"] = sim.intra_mean;
    report["inter_mean"] = sim.inter_mean;
    report["passes"] = sim.passes;

    ctx.output_paths.push_back(out_pgm.string());
    ctx.output_paths.push_back(report_path.string());
    OutputStager stager;
    write_heatmap_pgm(sim.matrix, stager.stage_file(out_pgm));
    write_text(stager.stage_file(report_path), report.dump(2) + "\n");
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note(report.dump(2));
    return 0;
}

int run_audit_affinity(RunContext& ctx, const fs::path& input, const std::string& op,
                       double ratio, std::uint64_t seed, const fs::path& report_path,
                       const std::optional<fs::path>& embeddings, std::size_t layers,
                       std::size_t hidden, double lr, std::size_t epochs, double l2) {
    const AugmentationSpec spec = make_augmentation_spec(op, ratio, seed);
    const bool needs_table = spec.kind == AugmentKind::SynonymReplace ||
                             spec.kind == AugmentKind::RandomInsert;
    if (needs_table && !embeddings)
        throw UsageError("--embeddings is required for op \"" + op + "\"");

    ctx.add_input(input);
    std::optional<EmbeddingTable> table;
    if (embeddings) {
        ctx.add_input(*embeddings);
        table = load_embedding_table(*embeddings);
    }
    const GraphDataset ds = load_tu_dataset(input);

    EncoderConfig enc_config;
    enc_config.layers = layers;
    enc_config.hidden_dim = hidden;
    enc_config.seed = seed;
    ProbeConfig probe_config;
    probe_config.learning_rate = lr;
    probe_config.epochs = epochs;
    probe_config.l2_lambda = l2;
    probe_config.seed = seed;

    const AffinityReport result =
        affinity_audit(ds, spec, enc_config, probe_config, table ? &*table : nullptr);

    json report;
    report["model"] = "linear probe on frozen random-GIN embeddings";
    report["op"] = op;
    report["ratio"] = ratio;
    report["clean_accuracy"] = result.clean_accuracy;
    report["augmented_accuracy"] = result.augmented_accuracy;
    report["affinity"] = result.affinity;
    report["clean_loss"] = result.clean_loss;
    report["augmented_loss"] = result.augmented_loss;
    report["diversity"] = result.diversity;

    ctx.output_paths.push_back(report_path.string());
    OutputStager stager;
    write_text(stager.stage_file(report_path), report.dump(2) + "\n");
    stage_manifests(stager, ctx);
    stager.commit();
    ctx.note(report.dump(2));
    return 0;
}

int run_diag_nt_xent(RunContext& ctx, const fs::path& a_path, const fs::path& b_path, double tau,
                     const std::optional<fs::path>& report_path) {
    ctx.add_input(a_path);
    ctx.add_input(b_path);
    const Matrix a = read_matrix_csv(a_path);
    const Matrix b = read_matrix_csv(b_path);
    const double loss = nt_xent(a, b, tau);

    json report;
    report["tau"] = tau;
    report["n"] = a.rows();
    report["loss"] = loss;

    if (report_path) {
        ctx.output_paths.push_back(report_path->string());
        OutputStager stager;
        write_text(stager.stage_file(*report_path), report.dump(2) + "\n");
        stage_manifests(stager, ctx);
        stager.commit();
    }
    ctx.note(report.dump(2));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"graph-augmentation and representation-audit toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for every subcommand");

    std::size_t threads = 0;
    bool quiet = false;
    app.add_option("--threads", threads, "worker thread cap (0 = all cores)");
    app.add_flag("--quiet", quiet, "suppress stdout notes");

    const auto ratio_check = CLI::Range(0.0, 1.0);
    const auto op_names = std::string(
        "identity, node-drop, edge-perturb, attr-mask, subgraph, synonym, insert, "
        "delete-rewire, feature-swap, colorize");

    // augment
    std::string aug_input, aug_op, aug_out, aug_embeddings;
    double aug_ratio = 0.0;
    std::uint64_t aug_seed = 0;
    CLI::App* augment = app.add_subcommand("augment", "augment a TU dataset");
    augment->fallthrough();
    augment->add_option("--input", aug_input, "TU dataset directory")->required();
    augment->add_option("--op", aug_op, "one of: " + op_names)->required();
    augment->add_option("--ratio", aug_ratio, "augmentation strength")->check(ratio_check);
    augment->add_option("--seed", aug_seed, "base seed");
    augment->add_option("--out", aug_out, "output dataset directory")->required();
    augment->add_option("--embeddings", aug_embeddings,
                        "word-vector file (synonym/insert ops)");

    // text build-graph / text augment
    CLI::App* text = app.add_subcommand("text", "text corpora as co-occurrence graphs");
    text->require_subcommand(1);
    text->fallthrough();

    std::string tb_corpus, tb_embeddings, tb_out;
    std::size_t tb_window = 4;
    CLI::App* text_build = text->add_subcommand("build-graph", "corpus -> TU dataset");
    text_build->fallthrough();
    text_build->add_option("--corpus", tb_corpus, "TSV: <label>\\t<tokens>")->required();
    text_build->add_option("--embeddings", tb_embeddings, "word-vector file")->required();
    text_build->add_option("--window", tb_window, "co-occurrence window (>= 2)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    text_build->add_option("--out", tb_out, "output dataset directory")->required();

    std::string ta_input, ta_embeddings, ta_config, ta_out;
    std::uint64_t ta_seed = 0;
    CLI::App* text_aug = text->add_subcommand("augment", "context-aware augmentation chain");
    text_aug->fallthrough();
    text_aug->add_option("--input", ta_input, "TU dataset directory")->required();
    text_aug->add_option("--embeddings", ta_embeddings, "word-vector file")->required();
    text_aug->add_option("--config", ta_config,
                         "e.g. synonym=0.05,delete=0.10,insert=0.05,swap=0.05");
    text_aug->add_option("--seed", ta_seed, "base seed");
    text_aug->add_option("--out", ta_out, "output dataset directory")->required();

    // fidelity
    std::string fid_a, fid_b, fid_out;
    double fid_coverage = 0.9;
    CLI::App* fidelity = app.add_subcommand("fidelity", "spectral/feature drift report");
    fidelity->fallthrough();
    fidelity->add_option("--a", fid_a, "TU dataset directory")->required();
    fidelity->add_option("--b", fid_b, "TU dataset directory")->required();
    fidelity->add_option("--coverage", fid_coverage, "spectrum coverage for k")
        ->check(CLI::Range(1e-9, 1.0));
    fidelity->add_option("--out", fid_out, "JSON report path")->required();

    // embed
    std::string emb_input, emb_out, emb_labels_out;
    std::size_t emb_layers = 3, emb_hidden = 32;
    std::uint64_t emb_seed = 0;
    CLI::App* embed_cmd = app.add_subcommand("embed", "random-GIN embeddings");
    embed_cmd->fallthrough();
    embed_cmd->add_option("--input", emb_input, "TU dataset directory")->required();
    embed_cmd->add_option("--layers", emb_layers, "GIN layers")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--hidden", emb_hidden, "hidden width")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--seed", emb_seed, "encoder init seed");
    embed_cmd->add_option("--out", emb_out, "embeddings CSV path")->required();
    embed_cmd->add_option("--labels-out", emb_labels_out, "labels path")->required();

    // eval knn
    CLI::App* eval_cmd = app.add_subcommand("eval", "representation evaluation");
    eval_cmd->require_subcommand(1);
    eval_cmd->fallthrough();
    std::string knn_emb, knn_labels, knn_report;
    std::size_t knn_k = 5, knn_folds = 10;
    std::uint64_t knn_seed = 0;
    CLI::App* eval_knn = eval_cmd->add_subcommand("knn", "stratified-CV kNN accuracy");
    eval_knn->fallthrough();
    eval_knn->add_option("--emb", knn_emb, "embeddings CSV")->required();
    eval_knn->add_option("--labels", knn_labels, "labels file")->required();
    eval_knn->add_option("--k", knn_k, "neighbours")->check(CLI::PositiveNumber);
    eval_knn->add_option("--folds", knn_folds, "CV folds")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    eval_knn->add_option("--seed", knn_seed, "fold shuffle seed");
    eval_knn->add_option("--report", knn_report, "optional JSON report path");

    // sanity sim-matrix
    CLI::App* sanity = app.add_subcommand("sanity", "representation sanity checks");
    sanity->require_subcommand(1);
    sanity->fallthrough();
    std::string sim_emb, sim_labels, sim_out, sim_report;
    CLI::App* sim = sanity->add_subcommand("sim-matrix", "class-sorted cosine matrix");
    sim->fallthrough();
    sim->add_option("--emb", sim_emb, "embeddings CSV")->required();
    sim->add_option("--labels", sim_labels, "labels file")->required();
    sim->add_option("--out", sim_out, "PGM heatmap path")->required();
    sim->add_option("--report", sim_report, "JSON report path")->required();

    // audit affinity
    CLI::App* audit = app.add_subcommand("audit", "augmentation quality audits");
    audit->require_subcommand(1);
    audit->fallthrough();
    std::string aff_input, aff_op, aff_report, aff_embeddings;
    double aff_ratio = 0.0, aff_lr = 0.1, aff_l2 = 1e-3;
    std::uint64_t aff_seed = 0;
    std::size_t aff_layers = 3, aff_hidden = 32, aff_epochs = 500;
    CLI::App* affinity = audit->add_subcommand("affinity", "clean-vs-augmented accuracy gap");
    affinity->fallthrough();
    affinity->add_option("--input", aff_input, "TU dataset directory")->required();
    affinity->add_option("--op", aff_op, "one of: " + op_names)->required();
    affinity->add_option("--ratio", aff_ratio, "augmentation strength")->check(ratio_check);
    affinity->add_option("--seed", aff_seed, "seed (augmentation + encoder)");
    affinity->add_option("--report", aff_report, "JSON report path")->required();
    affinity->add_option("--embeddings", aff_embeddings,
                         "word-vector file (synonym/insert ops)");
    affinity->add_option("--layers", aff_layers, "GIN layers")->check(CLI::PositiveNumber);
    affinity->add_option("--hidden", aff_hidden, "hidden width")->check(CLI::PositiveNumber);
    affinity->add_option("--lr", aff_lr, "probe learning rate")->check(CLI::PositiveNumber);
    affinity->add_option("--epochs", aff_epochs, "probe epochs")->check(CLI::PositiveNumber);
    affinity->add_option("--l2", aff_l2, "probe L2 strength")->check(CLI::PositiveNumber);

    // diag nt-xent
    CLI::App* diag = app.add_subcommand("diag", "loss diagnostics");
    diag->require_subcommand(1);
    diag->fallthrough();
    std::string nt_a, nt_b, nt_report;
    double nt_tau = 0.5;
    CLI::App* nt = diag->add_subcommand("nt-xent", "contrastive loss of two view batches");
    nt->fallthrough();
    nt->add_option("--emb-a", nt_a, "first view CSV")->required();
    nt->add_option("--emb-b", nt_b, "second view CSV")->required();
    nt->add_option("--tau", nt_tau, "temperature")->check(CLI::PositiveNumber);
    nt->add_option("--report", nt_report, "optional JSON report path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    set_thread_cap(threads);
    RunContext ctx;
    ctx.argv = args;
    ctx.quiet = quiet;

    auto opt_path = [](const std::string& s) {
        return s.empty() ? std::optional<fs::path>{} : std::optional<fs::path>{s};
    };

    try {
        if (*augment) {
            ctx.subcommand = "augment";
            ctx.seeds = {aug_seed};
            return run_augment(ctx, aug_input, aug_op, aug_ratio, aug_seed, aug_out,
                               opt_path(aug_embeddings));
        }
        if (*text_build) {
            ctx.subcommand = "text build-graph";
            return run_text_build(ctx, tb_corpus, tb_embeddings, tb_window, tb_out);
        }
        if (*text_aug) {
            ctx.subcommand = "text augment";
            ctx.seeds = {ta_seed};
            return run_text_augment(ctx, ta_input, ta_embeddings, ta_config, ta_seed, ta_out);
        }
        if (*fidelity) {
            ctx.subcommand = "fidelity";
            return run_fidelity(ctx, fid_a, fid_b, fid_coverage, fid_out);
        }
        if (*embed_cmd) {
            ctx.subcommand = "embed";
            ctx.seeds = {emb_seed};
            return run_embed(ctx, emb_input, emb_layers, emb_hidden, emb_seed, emb_out,
                             emb_labels_out);
        }
        if (*eval_knn) {
            ctx.subcommand = "eval knn";
            ctx.seeds = {knn_seed};
            return run_eval_knn(ctx, knn_emb, knn_labels, knn_k, knn_folds, knn_seed,
                                opt_path(knn_report));
        }
        if (*sim) {
            ctx.subcommand = "sanity sim-matrix";
            return run_sanity_sim(ctx, sim_emb, sim_labels, sim_out, sim_report);
        }
        if (*affinity) {
            ctx.subcommand = "audit affinity";
            ctx.seeds = {aff_seed};
            return run_audit_affinity(ctx, aff_input, aff_op, aff_ratio, aff_seed, aff_report,
                                      opt_path(aff_embeddings), aff_layers, aff_hidden, aff_lr,
                                      aff_epochs, aff_l2);
        }
        if (*nt) {
            ctx.subcommand = "diag nt-xent";
            return run_diag_nt_xent(ctx, nt_a, nt_b, nt_tau, opt_path(nt_report));
        }
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace augraph::cli
