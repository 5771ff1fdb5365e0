#include "pbir/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pbir/error.hpp"

namespace pbir::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void read_jsonl(const fs::path& path, std::vector<Document>& docs) {
    std::istringstream lines(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            docs.push_back(make_document(j.at("id").get<std::string>(), j.at("text").get<std::string>()));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::malformed_input,
                        path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void read_path(const fs::path& path, std::vector<Document>& docs) {
    if (path.extension() == ".jsonl")
        read_jsonl(path, docs);
    else
        docs.push_back(make_document(path.stem().string(), read_file(path)));
}

int report_error(const Error& e, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::io ? kExitIo : kExitValidation;
}

void emit(const ComparisonReport& report, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json)
        out << to_json(report).dump(2) << '\n';
    else
        render_tsv(report, out);
}

}  // namespace

std::vector<Document> read_documents(const std::vector<fs::path>& inputs) {
    std::vector<Document> docs;
    for (const auto& input : inputs) {
        std::error_code ec;
        if (fs::is_directory(input, ec)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(input))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) read_path(f, docs);
        } else if (fs::exists(input, ec)) {
            read_path(input, docs);
        } else {
            throw Error(ErrorKind::io, "no such file or directory '" + input.string() + "'");
        }
    }
    return docs;
}

std::vector<ModelId> parse_models(const std::string& text) {
    if (text == "all") return {std::begin(kAllModels), std::end(kAllModels)};
    std::vector<ModelId> models;
    std::istringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        auto m = parse_model_id(name);
        if (!m) throw Error(ErrorKind::invalid_config, "unknown model '" + name + "'");
        if (std::find(models.begin(), models.end(), *m) == models.end()) models.push_back(*m);
    }
    if (models.empty()) throw Error(ErrorKind::invalid_config, "no models selected");
    return models;
}

int cmd_index(const std::vector<fs::path>& inputs, const fs::path& output, std::ostream& out,
              std::ostream& err) {
    try {
        const auto docs = read_documents(inputs);
        const auto index = build_index(docs);
        save_index(index, output);
        out << "documents\t" << index.n_docs() << '\n' << "terms\t" << index.n_terms() << '\n' << "lexicon\t";
        constexpr std::size_t kShown = 20;
        for (std::size_t i = 0; i < std::min(kShown, index.n_terms()); ++i)
            out << (i ? " " : "") << index.lexicon()[i];
        if (index.n_terms() > kShown) out << " ... (+" << index.n_terms() - kShown << ")";
        out << '\n';
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e, err);
    } catch (const fs::filesystem_error& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitIo;
    }
}

int cmd_rank(const fs::path& index_path, const std::string& query, const RunConfig& config, std::ostream& out,
             std::ostream& err) {
    try {
        validate(config);
        const auto index = load_index(index_path);
        const auto stats = query_stats(query, index);
        for (const auto& t : stats.oov_terms) err << "warning: query term '" << t << "' not in lexicon, ignored\n";
        emit(run_rdq(index, stats, config), config.format, out);
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

int cmd_rdd(const fs::path& index_path, const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto index = load_index(index_path);
        emit(run_rdd(index, config), config.format, out);
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

int cmd_reproduce_gf(std::optional<double> tolerance, OutputFormat format, std::ostream& out, std::ostream& err) {
    try {
        const auto repro = reproduce_gf(tolerance);
        if (format == OutputFormat::json)
            out << to_json(repro).dump(2) << '\n';
        else
            render_tsv(repro, out);
        if (!repro.ok()) {
            err << "reproduction failed: " << repro.breaches.size() << " cell(s) outside tolerance";
            for (const auto& b : repro.breaches) err << "\n  " << b.table << " " << b.model << " " << b.target;
            err << '\n';
            return kExitValidation;
        }
        return kExitOk;
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

}  // namespace pbir::cli
