#ifndef PHIMDP_IO_HPP
#define PHIMDP_IO_HPP

#include <iosfwd>
#include <string>

#include "phimdp/agent.hpp"
#include "phimdp/cost.hpp"
#include "phimdp/history.hpp"
#include "phimdp/suffix_set.hpp"

namespace phimdp {

// History log: '#' header lines carry the alphabets and reward values, then
// one line per cycle with fields t,o,r,a ('-' marks the pending action of the
// final cycle). Parsing failures report the offending line number.
void write_history(std::ostream& out, const History& h);
History read_history(std::istream& in);
void write_history_file(const std::string& path, const History& h);
History read_history_file(const std::string& path);

// Suffix set: sorted members one per line, the empty member spelled "eps".
void write_suffix_set(std::ostream& out, const SuffixSet& s);
SuffixSet read_suffix_set(std::istream& in);
void write_suffix_set_file(const std::string& path, const SuffixSet& s);
SuffixSet read_suffix_set_file(const std::string& path);

// Key-value cost report; bit counts at six decimals, stable field order.
std::string format_cost_report(const CostReport& rep, const CostConfig& cfg,
                               double icost_value);

// Run log: one line per cycle plus a final-map summary block.
void write_run_log(std::ostream& out, const RunLog& log);
std::string format_run_log(const RunLog& log);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace phimdp

#endif
