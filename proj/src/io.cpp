#include "phimdp/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace phimdp {

namespace {

std::string shortest_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return std::string(buf);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(const std::string& s, int line, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        parse_fail(line, "bad " + what + " '" + s + "'");
    return value;
}

} // namespace

void write_history(std::ostream& out, const History& h) {
    const Alphabets& al = h.alphabets();
    out << "# phimdp-history v1\n";
    out << "# alphabet observations=" << al.observations << " actions=" << al.actions
        << " rewards=" << al.rewards() << "\n";
    out << "# reward-values";
    for (double v : al.reward_values) out << ' ' << shortest_double(v);
    out << "\n";
    for (std::size_t t = 1; t <= h.cycles(); ++t) {
        out << t << ',' << h.observation(t) << ',' << h.reward(t) << ',';
        if (t < h.cycles())
            out << h.action(t);
        else
            out << '-';
        out << '\n';
    }
}

History read_history(std::istream& in) {
    std::string line;
    int line_no = 0;
    Alphabets al;
    bool have_alphabet = false, have_values = false;
    std::vector<std::array<int, 3>> cycles; // o, r, a (-1 pending)

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tag;
            hs >> tag;
            if (tag == "alphabet") {
                std::string field;
                while (hs >> field) {
                    const std::size_t eq = field.find('=');
                    if (eq == std::string::npos) parse_fail(line_no, "bad alphabet field");
                    const std::string key = field.substr(0, eq);
                    const int value = parse_int(field.substr(eq + 1), line_no, key);
                    if (key == "observations")
                        al.observations = value;
                    else if (key == "actions")
                        al.actions = value;
                    else if (key != "rewards")
                        parse_fail(line_no, "unknown alphabet field '" + key + "'");
                }
                have_alphabet = true;
            } else if (tag == "reward-values") {
                double v = 0.0;
                while (hs >> v) al.reward_values.push_back(v);
                have_values = true;
            }
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 4) parse_fail(line_no, "expected 4 fields t,o,r,a");
        const int t = parse_int(fields[0], line_no, "cycle index");
        if (t != static_cast<int>(cycles.size()) + 1)
            parse_fail(line_no, "cycle index out of order");
        const int o = parse_int(fields[1], line_no, "observation");
        const int r = parse_int(fields[2], line_no, "reward");
        const int a = fields[3] == "-" ? -1 : parse_int(fields[3], line_no, "action");
        cycles.push_back({o, r, a});
    }
    if (!have_alphabet || !have_values)
        throw std::runtime_error("history file: missing alphabet headers");
    if (cycles.empty()) throw std::runtime_error("history file: no cycles");

    History h{al};
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto [o, r, a] = cycles[i];
        if (i == 0)
            h.append_initial(o, r);
        else
            h.append_cycle(cycles[i - 1][2], o, r);
        const bool last = i + 1 == cycles.size();
        if (!last && a < 0)
            throw std::runtime_error("history file: missing action before the final cycle");
        if (last && a >= 0)
            throw std::runtime_error("history file: final cycle must leave the action pending");
    }
    return h;
}

void write_suffix_set(std::ostream& out, const SuffixSet& s) {
    out << "# phimdp-suffix-set v1\n";
    out << "# alphabet " << s.alphabet_size() << "\n";
    for (const std::string& m : s.members())
        out << (m.empty() ? std::string("eps") : m) << '\n';
}

SuffixSet read_suffix_set(std::istream& in) {
    std::string line;
    int line_no = 0;
    int alphabet = 0;
    std::vector<std::string> members;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tag;
            hs >> tag;
            if (tag == "alphabet" && !(hs >> alphabet))
                parse_fail(line_no, "bad alphabet header");
            continue;
        }
        members.push_back(line == "eps" ? std::string() : line);
    }
    if (alphabet <= 0) throw std::runtime_error("suffix set file: missing alphabet header");
    return SuffixSet(alphabet, std::move(members));
}

std::string format_cost_report(const CostReport& rep, const CostConfig& cfg,
                               double icost_value) {
    std::ostringstream out;
    out << "# phimdp-cost-report v1\n";
    out << "code_mode ";
    switch (cfg.code.mode) {
    case CodeMode::exact: out << "exact"; break;
    case CodeMode::sparse: out << "sparse"; break;
    case CodeMode::combinatorial: out << "combinatorial"; break;
    case CodeMode::incremental: out << "incremental"; break;
    }
    out << "\nreward_model "
        << (cfg.reward_model == RewardModel::full ? "full" : "state-only");
    out << "\nphi_penalty " << (cfg.phi_penalty ? "on" : "off");
    out << "\nstates " << rep.states;
    out << "\ntransitions " << rep.transitions;
    out << "\nstate_bits " << fixed6(rep.state_bits);
    out << "\nreward_bits " << fixed6(rep.reward_bits);
    out << "\nphi_bits " << fixed6(rep.phi_bits);
    out << "\ntotal_bits " << fixed6(rep.total_bits);
    out << "\nicost_bits " << fixed6(icost_value) << "\n";
    for (const auto& [label, bits] : rep.state_blocks)
        out << "state_block " << label << ' ' << fixed6(bits) << '\n';
    for (const auto& [label, bits] : rep.reward_blocks)
        out << "reward_block " << label << ' ' << fixed6(bits) << '\n';
    return out.str();
}

void write_run_log(std::ostream& out, const RunLog& log) {
    out << "# phimdp-run v1\n";
    if (!log.env_name.empty()) out << "# env " << log.env_name << "\n";
    out << "# seed " << log.seed << "\n";
    out << "# columns cycle,o,r,a,states,cost_bits,icost_bits,value\n";
    for (const RunLogRow& row : log.rows)
        out << row.cycle << ',' << row.observation << ',' << row.reward << ','
            << row.action << ',' << row.states << ',' << fixed6(row.cost_bits) << ','
            << fixed6(row.icost_bits) << ',' << fixed6(row.value) << '\n';
    if (log.final_phi) {
        out << "# final-phi alphabet " << log.final_phi->alphabet_size() << "\n";
        for (const std::string& m : log.final_phi->members())
            out << "# member " << (m.empty() ? std::string("eps") : m) << '\n';
    }
}

std::string format_run_log(const RunLog& log) {
    std::ostringstream out;
    write_run_log(out, log);
    return out.str();
}

void write_history_file(const std::string& path, const History& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_history(out, h);
}

History read_history_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    try {
        return read_history(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_suffix_set_file(const std::string& path, const SuffixSet& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_suffix_set(out, s);
}

SuffixSet read_suffix_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    try {
        return read_suffix_set(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

} // namespace phimdp
