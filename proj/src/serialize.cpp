#include "bilconv/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bilconv {

using nlohmann::json;

namespace {

json matrix_json(const Matrix<Rational>& m) {
    json entries = json::array();
    for (const auto& x : m.data()) entries.push_back(x.str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"domain", "rational"},
                {"entries", entries}};
}

json matrix_json(const Matrix<double>& m) {
    json entries = json::array();
    for (double x : m.data()) entries.push_back(x);
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"domain", "real"},
                {"entries", entries}};
}

json matrix_json(const Matrix<Complex>& m) {
    json entries = json::array();
    for (const auto& x : m.data()) entries.push_back(json::array({x.real(), x.imag()}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"domain", "complex"},
                {"entries", entries}};
}

template <typename T>
Matrix<T> matrix_from(const json& j);

template <>
Matrix<Rational> matrix_from(const json& j) {
    std::vector<Rational> data;
    for (const auto& e : j.at("entries")) data.push_back(Rational::parse(e.get<std::string>()));
    return Matrix<Rational>(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                            std::move(data));
}

template <>
Matrix<double> matrix_from(const json& j) {
    std::vector<double> data;
    for (const auto& e : j.at("entries")) data.push_back(e.get<double>());
    return Matrix<double>(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                          std::move(data));
}

template <>
Matrix<Complex> matrix_from(const json& j) {
    std::vector<Complex> data;
    for (const auto& e : j.at("entries"))
        data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return Matrix<Complex>(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                           std::move(data));
}

ConvVariant variant_from(const json& j) {
    const std::string kind = j.at("variant").get<std::string>();
    const std::size_t r = j.at("r").get<std::size_t>();
    const std::size_t n = j.at("n").get<std::size_t>();
    if (kind == "linear") return ConvVariant::linear(r, n);
    if (kind == "cyclic") return ConvVariant::cyclic(n);
    if (kind == "correlation") return ConvVariant::correlation(r, n);
    throw std::invalid_argument("unknown variant '" + kind + "'");
}

template <typename T>
json algorithm_json(const BilinearAlgorithm<T>& alg) {
    return json{{"variant", alg.variant.name()},
                {"r", alg.variant.r},
                {"n", alg.variant.n},
                {"out", alg.variant.out_len()},
                {"rank", alg.rank()},
                {"provenance", alg.provenance},
                {"A", matrix_json(alg.A)},
                {"B", matrix_json(alg.B)},
                {"C", matrix_json(alg.C)}};
}

template <typename T>
BilinearAlgorithm<T> algorithm_from(const json& j) {
    BilinearAlgorithm<T> alg{matrix_from<T>(j.at("A")), matrix_from<T>(j.at("B")),
                             matrix_from<T>(j.at("C")), variant_from(j),
                             j.value("provenance", std::string{})};
    alg.check();
    return alg;
}

}  // namespace

std::string matrix_to_json(const Matrix<Rational>& m) { return matrix_json(m).dump(); }
std::string matrix_to_json(const Matrix<double>& m) { return matrix_json(m).dump(); }
std::string matrix_to_json(const Matrix<Complex>& m) { return matrix_json(m).dump(); }

std::string algorithm_to_json(const AnyAlgorithm& alg) {
    return std::visit([](const auto& a) { return algorithm_json(a).dump(2); }, alg);
}

AnyAlgorithm algorithm_from_json(const std::string& text) {
    json j = json::parse(text);
    const std::string domain = j.at("A").at("domain").get<std::string>();
    if (domain == "rational") return algorithm_from<Rational>(j);
    if (domain == "real") return algorithm_from<double>(j);
    if (domain == "complex") return algorithm_from<Complex>(j);
    throw std::invalid_argument("unknown matrix domain '" + domain + "'");
}

std::string rank_of(const AnyAlgorithm& alg) {
    return std::visit([](const auto& a) { return std::to_string(a.rank()); }, alg);
}

Tensor<double> read_tensor_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty tensor file");
    std::istringstream hs(header);
    std::vector<std::size_t> dims;
    std::size_t d;
    while (hs >> d) dims.push_back(d);
    if (dims.empty()) throw std::invalid_argument("tensor file missing dims header");
    Tensor<double> t(dims);
    for (auto& x : t.data())
        if (!(in >> x)) throw std::invalid_argument("tensor file has too few entries");
    return t;
}

void write_tensor_text(std::ostream& out, const Tensor<double>& t) {
    for (std::size_t k = 0; k < t.order(); ++k)
        out << (k ? " " : "") << t.dims()[k];
    out << '\n';
    out.precision(17);
    const std::size_t last = t.dims().back();
    for (std::size_t i = 0; i < t.size(); ++i)
        out << t.data()[i] << ((i + 1) % last == 0 ? '\n' : ' ');
}

AnyAlgorithm load_algorithm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algorithm file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return algorithm_from_json(ss.str());
}

void save_algorithm_file(const std::string& path, const AnyAlgorithm& alg) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write algorithm file '" + path + "'");
    out << algorithm_to_json(alg) << '\n';
}

Tensor<double> load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tensor file '" + path + "'");
    return read_tensor_text(in);
}

}  // namespace bilconv
