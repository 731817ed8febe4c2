#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcf/corpus.hpp"

namespace qcf {

struct VerifyOptions {
    int order = -1;             // formal working order; -1 means the entry default
    int samples = 5;            // points per parameterized entry
    std::uint64_t seed = 42;    // sampling seed
    mpfr_prec_t prec = 256;     // numeric working precision (bits)
    std::string tol = "1e-40";  // numeric acceptance tolerance
    long max_depth = 1L << 16;  // numeric fraction depth budget
};

enum class Status { Pass, Fail, Inconclusive };
std::string status_label(Status s);

// Outcome of checking one entry at one parameter point.
struct Report {
    std::string entry;
    std::string backend;  // "formal" / "exact" / "numeric"
    std::vector<std::pair<std::string, std::string>> params;  // name -> "num/den"
    std::optional<int> order;
    std::optional<int> precision_bits;
    std::optional<std::string> tol;
    Status status = Status::Inconclusive;
    std::optional<int> first_diff_power;  // formal mismatches
    std::optional<std::string> delta;     // numeric (always) / exact (on fail)
    long ms = 0;
};

Report verify_point(const Entry& e, const Params& p, const VerifyOptions& opt);
std::vector<Report> verify_entry(const Entry& e, const VerifyOptions& opt);

// Verify several entries, points slotted in a stable order regardless of the
// number of worker threads (QCF_THREADS overrides the default).
std::vector<Report> run_suite(const std::vector<std::string>& ids, const VerifyOptions& opt);

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);
std::string human_line(const Report& r);

}  // namespace qcf
