#pragma once

// Command-line front end: decompose, verify, witness, batch.
//
// Exit codes: 0 ok, 1 verification or batch failure, 2 usage error,
// 3 capability error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foursq/foursq.hpp"

namespace foursq::cli {

enum exit_code : int { ok = 0, failure = 1, usage = 2, capability = 3 };

using json = nlohmann::ordered_json;

namespace detail {

inline constexpr integer int64_max = std::numeric_limits<std::int64_t>::max();
inline constexpr integer int64_min = std::numeric_limits<std::int64_t>::min();

inline std::int64_t narrow(integer v) {
    if (v > int64_max || v < int64_min) throw capability_error("value " + to_string(v) + " exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

inline json quad_json(const quad& q) {
    return json::array({narrow(q.a), narrow(q.b), narrow(q.c), narrow(q.d)});
}

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

/// Nonnegative decimal integer; nullopt on anything else.
inline std::optional<integer> parse_nonnegative(std::string_view text) {
    if (!text.empty() && text.front() == '-') return std::nullopt;
    auto v = parse_integer(text);
    if (!v || *v < 0) return std::nullopt;
    return v;
}

/// Signed value that fits in 64 bits.
inline std::optional<integer> parse_int64(std::string_view text) {
    auto v = parse_integer(text);
    if (!v || *v > int64_max || *v < int64_min) return std::nullopt;
    return v;
}

struct record {
    std::optional<integer> n;
    std::optional<decomposition> result;
    std::vector<descent_state> trace;
    std::string error;
    bool capability_failure = false;
};

inline record decompose_record(integer n, bool with_trace) {
    record rec;
    rec.n = n;
    try {
        rec.result = four_squares(n);
        if (with_trace && n > 0) {
            for (const auto& [p, e] : factorize(n)) {
                if (p == 2 || e % 2 == 0) continue;
                auto states = trace_descent(p);
                rec.trace.insert(rec.trace.end(), states.begin(), states.end());
            }
        }
    } catch (const capability_error& ex) {
        rec.error = ex.what();
        rec.capability_failure = true;
    }
    return rec;
}

inline bool record_valid(const record& rec) {
    return rec.result && rec.n && norm(rec.result->squares) == *rec.n;
}

inline std::string format_plain(const record& rec) {
    std::ostringstream os;
    const quad& q = rec.result->squares;
    os << to_string(*rec.n) << " = " << to_string(q.a) << "^2 + " << to_string(q.b) << "^2 + "
       << to_string(q.c) << "^2 + " << to_string(q.d) << "^2";
    for (const auto& st : rec.trace) os << "\nm=" << to_string(st.multiplier) << " quad=" << st.q;
    return os.str();
}

inline std::string format_json(const record& rec) {
    json j;
    if (rec.n && *rec.n <= int64_max) {
        j["n"] = narrow(*rec.n);
    } else {
        j["n"] = nullptr;
    }
    if (rec.result) {
        j["squares"] = quad_json(rec.result->squares);
        j["valid"] = record_valid(rec);
    } else {
        j["squares"] = nullptr;
        j["valid"] = false;
    }
    if (!rec.trace.empty()) {
        json trace = json::array();
        for (const auto& st : rec.trace) {
            json item;
            item["m"] = narrow(st.multiplier);
            item["quad"] = quad_json(st.q);
            trace.push_back(std::move(item));
        }
        j["trace"] = std::move(trace);
    }
    if (!rec.error.empty()) j["error"] = rec.error;
    return j.dump();
}

inline bool matrix_relation_holds(const quad& F, const quad& L, const quad& R) {
    const auto mf = matrix_of(F);
    const auto ml = matrix_of(L);
    const auto mr = matrix_of(R);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            integer sum = 0;
            for (int k = 0; k < 4; ++k) sum += ml[k][i] * mr[k][j];
            if (sum != mf[i][j]) return false;
        }
    }
    return true;
}

}  // namespace detail

struct io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline int cmd_decompose(const std::string& arg, bool as_json, bool with_trace, io& s) {
    const auto n = detail::parse_nonnegative(arg);
    if (!n) {
        s.err << "error: '" << arg << "' is not a nonnegative integer\n";
        return usage;
    }
    const auto rec = detail::decompose_record(*n, with_trace);
    if (rec.capability_failure) {
        s.err << "error: " << rec.error << '\n';
        return capability;
    }
    s.out << (as_json ? detail::format_json(rec) : detail::format_plain(rec)) << '\n';
    return ok;
}

inline int cmd_verify(const std::vector<std::string>& args, io& s) {
    const auto n = detail::parse_nonnegative(args.at(0));
    if (!n) {
        s.err << "error: '" << args[0] << "' is not a nonnegative integer\n";
        return usage;
    }
    uinteger sum = 0;
    for (std::size_t i = 1; i < 5; ++i) {
        const auto v = detail::parse_int64(args.at(i));
        if (!v) {
            s.err << "error: '" << args[i] << "' is not a 64-bit integer\n";
            return usage;
        }
        sum += static_cast<uinteger>(*v * *v);
    }
    const bool good = sum == static_cast<uinteger>(*n);
    s.out << (good ? "OK" : "FAIL") << '\n';
    return good ? ok : failure;
}

inline int cmd_witness(const std::vector<std::string>& args, io& s) {
    std::array<integer, 6> v{};
    for (std::size_t i = 0; i < 6; ++i) {
        const auto parsed = detail::parse_int64(args.at(i));
        if (!parsed) {
            s.err << "error: '" << args[i] << "' is not a 64-bit integer\n";
            return usage;
        }
        v[i] = *parsed;
    }
    const integer m = v[0];
    const integer A = v[1];
    const quad F{v[2], v[3], v[4], v[5]};
    if (m < 1 || A < 0) {
        s.err << "error: need m >= 1 and A >= 0\n";
        return usage;
    }
    uinteger f_norm = 0;
    for (integer c : F.components()) f_norm += static_cast<uinteger>(c * c);
    if (f_norm != static_cast<uinteger>(m) * static_cast<uinteger>(A)) {
        s.err << "error: F^2 + G^2 + H^2 + K^2 != m*A\n";
        return usage;
    }
    try {
        const auto w = witness(m, A, F);
        if (!detail::matrix_relation_holds(F, w.left, w.right)) {
            s.err << "error: witness failed verification\n";
            return failure;
        }
        s.out << "L = " << w.left << "  norm " << to_string(norm(w.left)) << '\n';
        s.out << "R = " << w.right << "  norm " << to_string(norm(w.right)) << '\n';
        s.out << "M" << F << " = M" << w.left << "^T * M" << w.right << "  verified\n";
    } catch (const capability_error& ex) {
        s.err << "error: " << ex.what() << '\n';
        return capability;
    }
    return ok;
}

inline int cmd_batch(const std::string& from, bool as_json, io& s) {
    std::ifstream file;
    std::istream* source = &s.in;
    if (!from.empty() && from != "-") {
        file.open(from);
        if (!file) {
            s.err << "error: cannot open '" << from << "'\n";
            return usage;
        }
        source = &file;
    }

    struct job {
        std::size_t line_no;
        std::string text;
    };
    std::vector<job> jobs;
    std::string line;
    for (std::size_t line_no = 1; std::getline(*source, line); ++line_no) {
        auto text = detail::trim(line);
        if (!text.empty()) jobs.push_back({line_no, std::move(text)});
    }
    if (source->bad()) {
        s.err << "error: read failure\n";
        return usage;
    }

    std::vector<std::string> lines(jobs.size());
    std::vector<char> failed(jobs.size(), 0);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            detail::record rec;
            if (auto n = detail::parse_nonnegative(jobs[i].text)) {
                rec = detail::decompose_record(*n, false);
            } else {
                rec.error = "line " + std::to_string(jobs[i].line_no) + ": '" + jobs[i].text +
                            "' is not a nonnegative integer";
            }
            failed[i] = !detail::record_valid(rec);
            if (as_json) {
                lines[i] = detail::format_json(rec);
            } else if (failed[i]) {
                lines[i] = "error: " + rec.error;
            } else {
                lines[i] = detail::format_plain(rec);
            }
        }
    };

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    const std::size_t chunk = (jobs.size() + workers - 1) / std::max<std::size_t>(workers, 1);
    std::vector<std::future<void>> tasks;
    for (std::size_t begin = 0; begin < jobs.size(); begin += chunk) {
        tasks.push_back(std::async(std::launch::async, work, begin, std::min(begin + chunk, jobs.size())));
    }
    for (auto& t : tasks) t.get();

    for (const auto& l : lines) s.out << l << '\n';
    return std::any_of(failed.begin(), failed.end(), [](char f) { return f != 0; }) ? failure : ok;
}

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    io s{in, out, err};
    CLI::App app{"Constructive four-square decompositions", "foursq"};
    app.require_subcommand(1);

    bool json_out = false;
    bool trace = false;
    std::string n_arg;
    auto* decompose = app.add_subcommand("decompose", "Write n as a sum of four squares");
    decompose->add_option("n", n_arg, "Nonnegative integer")->required();
    decompose->add_flag("--json", json_out, "Emit a JSON record");
    decompose->add_flag("--trace", trace, "Include descent states for odd prime factors");

    std::vector<std::string> verify_args;
    auto* verify = app.add_subcommand("verify", "Check n = a^2 + b^2 + c^2 + d^2");
    verify->add_option("values", verify_args, "n a b c d")->required()->expected(5);

    std::vector<std::string> witness_args;
    auto* wit = app.add_subcommand("witness", "Factor M[F] = M[L]^T * M[R] given m*A = norm(F)");
    wit->add_option("values", witness_args, "m A F G H K")
        ->required()
        ->expected(6);

    std::string from;
    bool batch_json = false;
    auto* batch = app.add_subcommand("batch", "Decompose one integer per input line");
    batch->add_option("--from", from, "Input file (default: stdin)");
    batch->add_flag("--json", batch_json, "Emit JSON records");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    if (decompose->parsed()) return cmd_decompose(n_arg, json_out, trace, s);
    if (verify->parsed()) return cmd_verify(verify_args, s);
    if (wit->parsed()) return cmd_witness(witness_args, s);
    if (batch->parsed()) return cmd_batch(from, batch_json, s);
    return usage;
}

}  // namespace foursq::cli
