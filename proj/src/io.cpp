#include "ramsey/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ramsey {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    const auto [ptr, ec] =
        std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
    return std::string(buffer, ptr);
}

double parse_double(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || end != begin + text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return value;
}

std::string variance_csv_header() {
    return "method,k,g,f,fd,t2,n,vh,vh_n,std_error,trials,seed";
}

std::string variance_csv_row(const VarianceReport& r) {
    std::ostringstream oss;
    oss << r.method << ',' << r.max_stage << ',' << r.base_detections << ','
        << r.increment << ',' << format_double(r.visibility) << ','
        << format_double(r.t2_over_tau) << ',' << r.total_time << ','
        << format_double(r.v_h) << ',' << format_double(r.v_h_times_n()) << ','
        << format_double(r.std_error) << ',' << r.trials << ','
        << r.master_seed;
    return oss.str();
}

std::string trace_csv_header() { return "iteration,best,mean,spread"; }

std::string trace_csv_row(const TracePoint& point) {
    std::ostringstream oss;
    oss << point.iteration << ',' << format_double(point.best_value) << ','
        << format_double(point.mean_value) << ','
        << format_double(point.spread);
    return oss.str();
}

void write_policy_file(const std::string& path, const Policy& policy) {
    std::ostringstream oss;
    oss << "ramseyopt-policy v1\n";
    oss << "variant " << to_string(policy.kind()) << '\n';
    oss << "k " << policy.schedule().max_stage() << '\n';
    oss << "g " << policy.schedule().base_detections() << '\n';
    oss << "f " << policy.schedule().increment() << '\n';
    const std::vector<double> parameters = policy.to_vector();
    oss << "parameters " << parameters.size() << '\n';
    for (const double p : parameters) oss << format_double(p) << '\n';
    write_text_file(path, oss.str());
}

Policy read_policy_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open policy file: " + path);
    std::string magic, version;
    in >> magic >> version;
    if (magic != "ramseyopt-policy" || version != "v1")
        throw std::runtime_error("unrecognized policy file: " + path);

    std::string key;
    std::string variant;
    int k = -1, g = -1, f = -1;
    long long count = -1;
    while (in >> key) {
        if (key == "variant") in >> variant;
        else if (key == "k") in >> k;
        else if (key == "g") in >> g;
        else if (key == "f") in >> f;
        else if (key == "parameters") { in >> count; break; }
        else throw std::runtime_error("unexpected key in policy file: " + key);
        if (!in) throw std::runtime_error("malformed policy file: " + path);
    }
    if (!in || variant.empty() || k < 0 || g < 0 || f < 0 || count < 0)
        throw std::runtime_error("malformed policy file: " + path);

    std::vector<double> parameters;
    parameters.reserve(static_cast<std::size_t>(count));
    std::string token;
    for (long long i = 0; i < count; ++i) {
        if (!(in >> token))
            throw std::runtime_error("truncated policy file: " + path);
        parameters.push_back(parse_double(token));
    }

    const Schedule schedule(k, g, f);
    const PolicyKind kind = policy_kind_from_string(variant);
    switch (kind) {
        case PolicyKind::nonadaptive: return Policy::nonadaptive(schedule);
        case PolicyKind::adaptive_homodyne:
            return Policy::adaptive_homodyne(schedule);
        case PolicyKind::cappellaro: return Policy::cappellaro(schedule);
        case PolicyKind::decision_tree:
        case PolicyKind::hybrid:
            return Policy::from_vector(kind, schedule, parameters);
    }
    throw std::logic_error("unreachable");
}

void write_metadata_file(const std::string& path, const KeyValues& entries) {
    std::ostringstream oss;
    for (const auto& [key, value] : entries) oss << key << ' ' << value << '\n';
    write_text_file(path, oss.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

}  // namespace ramsey
