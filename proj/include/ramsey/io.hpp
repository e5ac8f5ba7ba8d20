#ifndef RAMSEY_IO_HPP_
#define RAMSEY_IO_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/eval.hpp"
#include "ramsey/protocol.hpp"
#include "ramsey/pso.hpp"

namespace ramsey {

// Shortest representation that round-trips the exact double; "inf",
// "-inf" and "nan" spelled out.
std::string format_double(double value);
double parse_double(const std::string& text);

// Delimited variance rows:
// method,k,g,f,fd,t2,n,vh,vh_n,std_error,trials,seed
std::string variance_csv_header();
std::string variance_csv_row(const VarianceReport& report);

// Swarm convergence trace rows: iteration,best,mean,spread
std::string trace_csv_header();
std::string trace_csv_row(const TracePoint& point);

// Policy persistence: a small line-oriented document carrying the
// schedule, the variant tag, and the flat parameter array at full
// precision.
void write_policy_file(const std::string& path, const Policy& policy);
Policy read_policy_file(const std::string& path);

// key<space>value metadata lines (the sidecar format).
using KeyValues = std::vector<std::pair<std::string, std::string>>;
void write_metadata_file(const std::string& path, const KeyValues& entries);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ramsey

#endif  // RAMSEY_IO_HPP_
