#include "supercong/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "supercong/errors.hpp"

namespace sc::report {

using registry::Status;
using registry::VerificationResult;

Format parse_format(const std::string& name) {
    if (name == "json-lines" || name == "jsonl")
        return Format::JsonLines;
    if (name == "csv")
        return Format::Csv;
    if (name == "table")
        return Format::Table;
    throw OutOfRange("unknown format: " + name);
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default: out += c;
        }
    }
    return out;
}

std::string ms_field(const VerificationResult& r, bool timings) {
    if (!timings)
        return "0";
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << r.elapsed_ms;
    return os.str();
}

void write_jsonl(std::ostream& os, const std::vector<VerificationResult>& rs, bool timings) {
    for (const auto& r : rs) {
        os << "{\"id\":\"" << json_escape(r.id) << "\",\"p\":" << r.p << ",\"status\":\""
           << registry::status_name(r.status) << "\",\"modulus\":\"" << r.modulus.get_str()
           << "\",\"lhs\":\"" << r.lhs.get_str() << "\",\"rhs\":\"" << r.rhs.get_str()
           << "\",\"branch\":\"" << json_escape(r.branch) << "\"";
        if (!r.a_sample.empty())
            os << ",\"a\":\"" << json_escape(r.a_sample) << "\"";
        if (r.x != 0)
            os << ",\"x\":\"" << r.x << "\",\"y\":\"" << r.y << "\"";
        os << ",\"elapsed_ms\":\"" << ms_field(r, timings) << "\"}\n";
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& os, const std::vector<VerificationResult>& rs, bool timings) {
    os << "id,p,status,modulus,lhs,rhs,branch,a,x,y,elapsed_ms\n";
    for (const auto& r : rs) {
        os << csv_quote(r.id) << ',' << r.p << ',' << registry::status_name(r.status) << ','
           << r.modulus.get_str() << ',' << r.lhs.get_str() << ',' << r.rhs.get_str() << ','
           << csv_quote(r.branch) << ',' << csv_quote(r.a_sample) << ','
           << (r.x != 0 ? std::to_string(r.x) : "") << ','
           << (r.x != 0 ? std::to_string(r.y) : "") << ',' << ms_field(r, timings) << "\n";
    }
}

void write_table(std::ostream& os, const std::vector<VerificationResult>& rs, bool timings) {
    os << std::left << std::setw(14) << "id" << std::setw(6) << "p" << std::setw(16) << "status"
       << std::setw(28) << "branch" << "residues\n";
    for (const auto& r : rs) {
        std::string res;
        if (r.status == Status::Pass || r.status == Status::Fail)
            res = r.lhs.get_str() + (r.status == Status::Pass ? " == " : " != ") +
                  r.rhs.get_str() + " (mod " + r.modulus.get_str() + ")";
        std::string branch = r.branch.substr(0, 40);
        if (!r.a_sample.empty())
            branch += (branch.empty() ? "a=" : " a=") + r.a_sample;
        if (branch.size() < 27)
            branch.resize(27, ' ');
        os << std::left << std::setw(14) << r.id << std::setw(6) << r.p << std::setw(16)
           << registry::status_name(r.status) << branch << ' ' << res;
        if (timings)
            os << "  [" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms]";
        os << "\n";
    }
    Tally t = tally(rs);
    os << "-- " << t.pass << " pass, " << t.fail << " fail, " << t.not_applicable
       << " not-applicable, " << t.precision_error << " precision-error, " << t.pole
       << " pole\n";
}

} // namespace

void write(std::ostream& os, const std::vector<VerificationResult>& results, Format format,
           bool timings) {
    switch (format) {
    case Format::JsonLines: write_jsonl(os, results, timings); break;
    case Format::Csv: write_csv(os, results, timings); break;
    case Format::Table: write_table(os, results, timings); break;
    }
}

Tally tally(const std::vector<VerificationResult>& results) {
    Tally t;
    for (const auto& r : results) {
        switch (r.status) {
        case Status::Pass: ++t.pass; break;
        case Status::Fail: ++t.fail; break;
        case Status::NotApplicable: ++t.not_applicable; break;
        case Status::PrecisionError: ++t.precision_error; break;
        case Status::Pole: ++t.pole; break;
        }
    }
    return t;
}

int exit_code(const Tally& t) {
    if (t.fail > 0)
        return 1;
    if (t.precision_error > 0 || t.pole > 0)
        return 3;
    return 0;
}

} // namespace sc::report
