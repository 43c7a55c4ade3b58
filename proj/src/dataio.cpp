#include "exem/dataio.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace exem {

static_assert(std::endian::native == std::endian::little,
              "binary matrix I/O assumes a little-endian host");

namespace {

constexpr char kMatrixMagic[4] = {'E', 'X', 'E', 'M'};
constexpr char kPcaMagic[4] = {'E', 'X', 'P', 'C'};
constexpr char kPredictorMagic[4] = {'E', 'X', 'P', 'D'};
constexpr std::uint32_t kFormatVersion = 1;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

std::ifstream open_input(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ifstream in(path, mode);
    if (!in) fail(path, "cannot open file");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) fail(path, "cannot open file for writing");
    return out;
}

void read_exact(std::ifstream& in, void* dst, std::size_t bytes,
                const std::filesystem::path& path) {
    in.read(static_cast<char*>(dst), static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(in.gcount()) != bytes) {
        fail(path, "unexpected end of file (truncated or corrupt)");
    }
}

void write_bytes(std::ofstream& out, const void* src, std::size_t bytes) {
    out.write(static_cast<const char*>(src), static_cast<std::streamsize>(bytes));
}

void check_magic(std::ifstream& in, const char (&magic)[4], const std::filesystem::path& path,
                 const char* kind) {
    char got[4];
    read_exact(in, got, 4, path);
    if (std::memcmp(got, magic, 4) != 0) {
        fail(path, std::string("bad magic, not a ") + kind + " file");
    }
}

void check_version(std::ifstream& in, const std::filesystem::path& path) {
    std::uint32_t version = 0;
    read_exact(in, &version, sizeof version, path);
    if (version != kFormatVersion) {
        std::ostringstream msg;
        msg << "unsupported format version " << version << " (expected " << kFormatVersion << ")";
        fail(path, msg.str());
    }
}

double parse_double(const std::string& token, const std::filesystem::path& path,
                    std::size_t line_no) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        std::ostringstream msg;
        msg << "line " << line_no << ": cannot parse number '" << token << "'";
        fail(path, msg.str());
    }
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": non-finite entry '" << token << "'";
        fail(path, msg.str());
    }
    return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

Matrix load_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    std::string line;
    if (!std::getline(in, line)) fail(path, "empty file, expected a 'dim_0,...' header");
    line = strip_cr(line);
    const auto header = split(line, ',');
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] != "dim_" + std::to_string(j)) {
            std::ostringstream msg;
            msg << "line 1: malformed header, expected 'dim_" << j << "' got '" << header[j]
                << "'";
            fail(path, msg.str());
        }
    }
    const std::size_t cols = header.size();

    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto tokens = split(line, ',');
        if (tokens.size() != cols) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected " << cols << " values, got "
                << tokens.size();
            fail(path, msg.str());
        }
        for (const auto& t : tokens) values.push_back(parse_double(t, path, line_no));
        ++rows;
    }
    if (rows == 0) fail(path, "no data rows");

    Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Index>(i), static_cast<Index>(j)) = values[i * cols + j];
        }
    }
    return m;
}

Matrix load_matrix_bin(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::binary);
    check_magic(in, kMatrixMagic, path, "matrix");
    check_version(in, path);
    std::uint64_t rows = 0, cols = 0;
    read_exact(in, &rows, sizeof rows, path);
    read_exact(in, &cols, sizeof cols, path);
    if (rows == 0 || cols == 0 || rows > (1ULL << 40) || cols > (1ULL << 40)) {
        fail(path, "implausible matrix dimensions");
    }
    Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
    std::vector<float> buffer(static_cast<std::size_t>(cols));
    for (std::uint64_t i = 0; i < rows; ++i) {
        read_exact(in, buffer.data(), sizeof(float) * buffer.size(), path);
        for (std::uint64_t j = 0; j < cols; ++j) {
            const float f = buffer[static_cast<std::size_t>(j)];
            if (!std::isfinite(f)) {
                std::ostringstream msg;
                msg << "non-finite entry at row " << i << ", col " << j;
                fail(path, msg.str());
            }
            m(static_cast<Index>(i), static_cast<Index>(j)) = static_cast<double>(f);
        }
    }
    return m;
}

void append_csv_row(std::string& out, const double* row, Index cols) {
    char buf[64];
    for (Index j = 0; j < cols; ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
        if (j > 0) out += ',';
        out += buf;
    }
    out += '\n';
}

void write_f64(std::ofstream& out, double v) { write_bytes(out, &v, sizeof v); }

double read_f64(std::ifstream& in, const std::filesystem::path& path) {
    double v = 0.0;
    read_exact(in, &v, sizeof v, path);
    return v;
}

void write_u64(std::ofstream& out, std::uint64_t v) { write_bytes(out, &v, sizeof v); }

std::uint64_t read_u64(std::ifstream& in, const std::filesystem::path& path) {
    std::uint64_t v = 0;
    read_exact(in, &v, sizeof v, path);
    return v;
}

void write_matrix_f64(std::ofstream& out, const Matrix& m) {
    write_u64(out, static_cast<std::uint64_t>(m.rows()));
    write_u64(out, static_cast<std::uint64_t>(m.cols()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) write_f64(out, m(i, j));
    }
}

Matrix read_matrix_f64(std::ifstream& in, const std::filesystem::path& path) {
    const std::uint64_t rows = read_u64(in, path);
    const std::uint64_t cols = read_u64(in, path);
    if (rows > (1ULL << 40) || cols > (1ULL << 40)) fail(path, "implausible matrix dimensions");
    Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = read_f64(in, path);
    }
    require_finite(m, path.string().c_str());
    return m;
}

}  // namespace

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
    return format == MatrixFormat::bin ? load_matrix_bin(path) : load_matrix_csv(path);
}

Matrix load_matrix(const std::filesystem::path& path) {
    std::ifstream probe = open_input(path, std::ios::binary);
    char magic[4] = {};
    probe.read(magic, 4);
    probe.close();
    const bool is_bin = std::memcmp(magic, kMatrixMagic, 4) == 0;
    return load_matrix(path, is_bin ? MatrixFormat::bin : MatrixFormat::csv);
}

void save_matrix(const Matrix& m, const std::filesystem::path& path, MatrixFormat format) {
    require_finite(m, "save_matrix");
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("save_matrix: empty matrix");
    if (format == MatrixFormat::csv) {
        std::ofstream out = open_output(path, std::ios::out);
        std::string text;
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) text += ',';
            text += "dim_" + std::to_string(j);
        }
        text += '\n';
        std::vector<double> row(static_cast<std::size_t>(m.cols()));
        for (Index i = 0; i < m.rows(); ++i) {
            for (Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
            append_csv_row(text, row.data(), m.cols());
        }
        out << text;
        if (!out) fail(path, "write failed");
        return;
    }
    std::ofstream out = open_output(path, std::ios::binary);
    write_bytes(out, kMatrixMagic, 4);
    write_bytes(out, &kFormatVersion, sizeof kFormatVersion);
    write_u64(out, static_cast<std::uint64_t>(m.rows()));
    write_u64(out, static_cast<std::uint64_t>(m.cols()));
    // stored at 32-bit precision; loads widen back to f64
    std::vector<float> buffer(static_cast<std::size_t>(m.cols()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            buffer[static_cast<std::size_t>(j)] = static_cast<float>(m(i, j));
        }
        write_bytes(out, buffer.data(), sizeof(float) * buffer.size());
    }
    if (!out) fail(path, "write failed");
}

std::vector<ClassId> load_class_list(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    std::vector<ClassId> ids;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (!line.empty()) ids.push_back(line);
    }
    return ids;
}

void save_class_list(const std::vector<ClassId>& ids, const std::filesystem::path& path) {
    std::ofstream out = open_output(path, std::ios::out);
    for (const auto& id : ids) out << id << '\n';
    if (!out) fail(path, "write failed");
}

std::pair<std::vector<ClassId>, Matrix> load_id_matrix(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    std::string line;
    if (!std::getline(in, line)) fail(path, "empty file, expected a 'class_id,dim_0,...' header");
    line = strip_cr(line);
    auto header = split(line, ',');
    if (header.empty() || header[0] != "class_id") {
        fail(path, "line 1: malformed header, expected leading 'class_id' column");
    }
    for (std::size_t j = 1; j < header.size(); ++j) {
        if (header[j] != "dim_" + std::to_string(j - 1)) {
            std::ostringstream msg;
            msg << "line 1: malformed header, expected 'dim_" << j - 1 << "' got '" << header[j]
                << "'";
            fail(path, msg.str());
        }
    }
    const std::size_t cols = header.size() - 1;
    if (cols == 0) fail(path, "no data columns");

    std::vector<ClassId> ids;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto tokens = split(line, ',');
        if (tokens.size() != cols + 1) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected " << cols + 1 << " fields, got "
                << tokens.size();
            fail(path, msg.str());
        }
        if (tokens[0].empty()) {
            std::ostringstream msg;
            msg << "line " << line_no << ": empty class id";
            fail(path, msg.str());
        }
        ids.push_back(tokens[0]);
        for (std::size_t j = 1; j < tokens.size(); ++j) {
            values.push_back(parse_double(tokens[j], path, line_no));
        }
    }
    if (ids.empty()) fail(path, "no data rows");

    Matrix m(static_cast<Index>(ids.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Index>(i), static_cast<Index>(j)) = values[i * cols + j];
        }
    }
    return {std::move(ids), std::move(m)};
}

void save_id_matrix(const std::vector<ClassId>& ids, const Matrix& m,
                    const std::filesystem::path& path) {
    if (static_cast<Index>(ids.size()) != m.rows()) {
        throw std::invalid_argument("save_id_matrix: id count != rows");
    }
    require_finite(m, "save_id_matrix");
    std::ofstream out = open_output(path, std::ios::out);
    std::string text = "class_id";
    for (Index j = 0; j < m.cols(); ++j) text += ",dim_" + std::to_string(j);
    text += '\n';
    char buf[64];
    for (Index i = 0; i < m.rows(); ++i) {
        text += ids[static_cast<std::size_t>(i)];
        for (Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            text += ',';
            text += buf;
        }
        text += '\n';
    }
    out << text;
    if (!out) fail(path, "write failed");
}

ExemplarTable load_exemplar_table(const std::filesystem::path& path) {
    auto [ids, m] = load_id_matrix(path);
    ExemplarTable t{std::move(ids), std::move(m)};
    validate(t);
    return t;
}

void save_exemplar_table(const ExemplarTable& t, const std::filesystem::path& path) {
    save_id_matrix(t.class_ids, t.exemplars, path);
}

HierarchyGraph load_hierarchy(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    std::vector<std::pair<ClassId, ClassId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split(line, '\t');
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'child<TAB>parent'";
            fail(path, msg.str());
        }
        edges.emplace_back(fields[0], fields[1]);
    }
    return HierarchyGraph::from_edges(edges);
}

void save_hierarchy(const std::vector<std::pair<ClassId, ClassId>>& edges,
                    const std::filesystem::path& path) {
    std::ofstream out = open_output(path, std::ios::out);
    for (const auto& [child, parent] : edges) out << child << '\t' << parent << '\n';
    if (!out) fail(path, "write failed");
}

GroundTruthLists load_ground_truth_lists(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    GroundTruthLists lists;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split(line, '\t');
        if (fields.size() != 3) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'class<TAB>k<TAB>ids'";
            fail(path, msg.str());
        }
        const long k = std::strtol(fields[1].c_str(), nullptr, 10);
        if (k < 1) {
            std::ostringstream msg;
            msg << "line " << line_no << ": bad k '" << fields[1] << "'";
            fail(path, msg.str());
        }
        const auto ids = split(fields[2], ',');
        if (static_cast<long>(ids.size()) != k) {
            std::ostringstream msg;
            msg << "line " << line_no << ": list has " << ids.size() << " ids, expected " << k;
            fail(path, msg.str());
        }
        lists[fields[0]][static_cast<Index>(k)] = ids;
    }
    return lists;
}

void save_pca(const PcaModel& m, const std::filesystem::path& path) {
    std::ofstream out = open_output(path, std::ios::binary);
    write_bytes(out, kPcaMagic, 4);
    write_bytes(out, &kFormatVersion, sizeof kFormatVersion);
    write_u64(out, static_cast<std::uint64_t>(m.mean.size()));
    for (Index j = 0; j < m.mean.size(); ++j) write_f64(out, m.mean[j]);
    write_matrix_f64(out, m.projection);
    write_u64(out, static_cast<std::uint64_t>(m.eigenvalues.size()));
    for (Index j = 0; j < m.eigenvalues.size(); ++j) write_f64(out, m.eigenvalues[j]);
    if (!out) fail(path, "write failed");
}

PcaModel load_pca(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::binary);
    check_magic(in, kPcaMagic, path, "PCA model");
    check_version(in, path);
    PcaModel m;
    const std::uint64_t dim = read_u64(in, path);
    m.mean.resize(static_cast<Index>(dim));
    for (Index j = 0; j < m.mean.size(); ++j) m.mean[j] = read_f64(in, path);
    m.projection = read_matrix_f64(in, path);
    const std::uint64_t d = read_u64(in, path);
    m.eigenvalues.resize(static_cast<Index>(d));
    for (Index j = 0; j < m.eigenvalues.size(); ++j) m.eigenvalues[j] = read_f64(in, path);
    if (m.projection.cols() != m.mean.size() || m.projection.rows() != m.eigenvalues.size()) {
        fail(path, "inconsistent PCA model shapes");
    }
    return m;
}

void save_predictor(const ExemplarPredictor& p, const std::filesystem::path& path) {
    if (p.models.empty()) throw std::invalid_argument("save_predictor: empty predictor");
    std::ofstream out = open_output(path, std::ios::binary);
    write_bytes(out, kPredictorMagic, 4);
    write_bytes(out, &kFormatVersion, sizeof kFormatVersion);
    write_f64(out, p.hyper.lambda);
    write_f64(out, p.hyper.nu);
    write_f64(out, p.hyper.kernel.gamma);
    write_u64(out, static_cast<std::uint64_t>(p.semantic_dim));
    // shared training points stored once; every model references them
    write_matrix_f64(out, *p.models.front().train_points);
    write_u64(out, p.models.size());
    for (const auto& model : p.models) {
        write_u64(out, static_cast<std::uint64_t>(model.beta.size()));
        for (Index c = 0; c < model.beta.size(); ++c) write_f64(out, model.beta[c]);
        write_f64(out, model.bias);
        write_f64(out, model.epsilon);
    }
    if (!out) fail(path, "write failed");
}

ExemplarPredictor load_predictor(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::binary);
    check_magic(in, kPredictorMagic, path, "predictor");
    check_version(in, path);
    ExemplarPredictor p;
    p.hyper.lambda = read_f64(in, path);
    p.hyper.nu = read_f64(in, path);
    p.hyper.kernel.gamma = read_f64(in, path);
    p.semantic_dim = static_cast<Index>(read_u64(in, path));
    auto points = std::make_shared<const Matrix>(read_matrix_f64(in, path));
    if (points->cols() != p.semantic_dim) fail(path, "inconsistent predictor shapes");
    const std::uint64_t n_models = read_u64(in, path);
    if (n_models == 0 || n_models > (1ULL << 32)) fail(path, "implausible model count");
    p.models.resize(static_cast<std::size_t>(n_models));
    for (auto& model : p.models) {
        const std::uint64_t s = read_u64(in, path);
        if (static_cast<Index>(s) != points->rows()) fail(path, "inconsistent predictor shapes");
        model.train_points = points;
        model.kernel = p.hyper.kernel;
        model.beta.resize(static_cast<Index>(s));
        for (Index c = 0; c < model.beta.size(); ++c) model.beta[c] = read_f64(in, path);
        model.bias = read_f64(in, path);
        model.epsilon = read_f64(in, path);
    }
    validate(p.hyper);
    return p;
}

void save_vector(const Vector& v, const std::filesystem::path& path) {
    require_finite(v, "save_vector");
    std::ofstream out = open_output(path, std::ios::out);
    char buf[64];
    for (Index j = 0; j < v.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", v[j]);
        out << buf << '\n';
    }
    if (!out) fail(path, "write failed");
}

Vector load_vector(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        values.push_back(parse_double(line, path, line_no));
    }
    if (values.empty()) fail(path, "no values");
    Vector v(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Index>(i)] = values[i];
    return v;
}

std::vector<std::vector<ClassId>> load_ranked_predictions(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, std::ios::in);
    std::vector<std::vector<ClassId>> ranked;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto ids = split(line, ',');
        for (const auto& id : ids) {
            if (id.empty()) {
                std::ostringstream msg;
                msg << "line " << line_no << ": empty class id";
                fail(path, msg.str());
            }
        }
        ranked.push_back(std::move(ids));
    }
    return ranked;
}

void save_ranked_predictions(const std::vector<std::vector<ClassId>>& ranked,
                             const std::filesystem::path& path) {
    std::ofstream out = open_output(path, std::ios::out);
    for (const auto& list : ranked) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i > 0) out << ',';
            out << list[i];
        }
        out << '\n';
    }
    if (!out) fail(path, "write failed");
}

void validate(const DatasetBundle& b) {
    if (b.features.rows() != static_cast<Index>(b.labels.size())) {
        throw std::invalid_argument("DatasetBundle: feature rows != label count");
    }
    if (b.semantics.rows() != static_cast<Index>(b.semantic_ids.size())) {
        throw std::invalid_argument("DatasetBundle: semantic rows != semantic id count");
    }
    std::set<ClassId> sem_ids(b.semantic_ids.begin(), b.semantic_ids.end());
    if (sem_ids.size() != b.semantic_ids.size()) {
        throw std::invalid_argument("DatasetBundle: duplicate semantic ids");
    }
    for (const auto& label : b.labels) {
        if (!sem_ids.count(label)) {
            throw std::invalid_argument("DatasetBundle: label '" + label +
                                        "' has no semantic row");
        }
    }
    std::set<ClassId> seen(b.seen.begin(), b.seen.end());
    for (const auto& u : b.unseen) {
        if (seen.count(u)) {
            throw std::invalid_argument("DatasetBundle: class '" + u +
                                        "' is both seen and unseen");
        }
    }
    for (const auto& c : b.seen) {
        if (!sem_ids.count(c)) {
            throw std::invalid_argument("DatasetBundle: seen class '" + c +
                                        "' has no semantic row");
        }
    }
    for (const auto& c : b.unseen) {
        if (!sem_ids.count(c)) {
            throw std::invalid_argument("DatasetBundle: unseen class '" + c +
                                        "' has no semantic row");
        }
    }
}

BundlePaths bundle_paths(const std::filesystem::path& dir) {
    BundlePaths paths;
    paths.features = std::filesystem::exists(dir / "features.bin") ? dir / "features.bin"
                                                                   : dir / "features.csv";
    paths.labels = dir / "labels.txt";
    paths.semantics = dir / "semantics.csv";
    paths.seen = dir / "seen.txt";
    paths.unseen = dir / "unseen.txt";
    if (std::filesystem::exists(dir / "hierarchy.tsv")) paths.hierarchy = dir / "hierarchy.tsv";
    return paths;
}

DatasetBundle load_bundle(const BundlePaths& paths) {
    DatasetBundle bundle;
    bundle.features = load_matrix(paths.features);
    bundle.labels = load_class_list(paths.labels);
    auto [ids, semantics] = load_id_matrix(paths.semantics);
    bundle.semantic_ids = std::move(ids);
    bundle.semantics = std::move(semantics);
    bundle.seen = load_class_list(paths.seen);
    bundle.unseen = load_class_list(paths.unseen);
    if (!paths.hierarchy.empty()) bundle.hierarchy = load_hierarchy(paths.hierarchy);
    validate(bundle);
    return bundle;
}

void save_bundle(const SynthDataset& data, const std::filesystem::path& dir,
                 MatrixFormat features_format) {
    std::filesystem::create_directories(dir);
    save_matrix(data.features, dir / (features_format == MatrixFormat::bin ? "features.bin"
                                                                           : "features.csv"),
                features_format);
    save_class_list(data.labels, dir / "labels.txt");
    save_id_matrix(data.class_ids, data.semantics, dir / "semantics.csv");
    save_class_list(data.seen, dir / "seen.txt");
    save_class_list(data.unseen, dir / "unseen.txt");
    save_id_matrix(data.class_ids, data.true_centers, dir / "centers.csv");
}

}  // namespace exem
