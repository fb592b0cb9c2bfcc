#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opal/closure.hpp"
#include "opal/ring.hpp"
#include "opal/semistar.hpp"
#include "opal/stdrad.hpp"

namespace opal {

// One parsed declaration or command of the session language. Polynomial and
// closure payloads stay textual until execution, where they are resolved
// against the active ring.
struct SessionItem {
  enum class Kind {
    decl_ring,
    decl_ideal,
    decl_frac,
    decl_closure,
    decl_witnesses,
    cmd_print,
    cmd_check_axioms,
    cmd_check_correspondence,
    cmd_decompose,
  };

  Kind kind;
  int line = 0, col = 0;
  std::string source;  // the raw command text, echoed in output

  std::string name;  // declaration target, when any

  // ring declaration
  std::string field_spec;  // "QQ" or a prime as text
  std::vector<std::string> variables;
  std::vector<std::string> relation_texts;

  // generic payloads
  std::vector<std::string> poly_texts;          // ideal/witness generators
  std::string denominator_text;                 // frac declarations
  std::string closure_text;                     // closure expressions, uninterpreted
  std::string print_kind;                       // which printable form
  std::vector<std::string> args;                // auxiliary arguments
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> decomposition;
};

struct Session {
  std::vector<SessionItem> items;
};

// Parses the session text or fails with parse-error/undefined-name carrying
// line and column.
Session parse_session(std::string_view text);

struct ExecOptions {
  std::string format = "text";  // text | json
  uint64_t seed = 42;
  int degree_bound = 6;
  int axiom_samples = 100;
  bool fail_fast = false;
  std::vector<std::string> extra_witness_texts;
};

struct OutputRecord {
  std::string command;
  std::string status;     // ok | error | check-failed
  std::string exactness;  // exact | under-approximation(..) | semi-decision(..) | assumed-primary
  std::string text;       // human-readable payload
  nlohmann::json payload;
  std::vector<std::string> witnesses;
  uint64_t seed = 0;
};

struct ExecResult {
  std::vector<OutputRecord> records;
  int exit_code = 0;  // 0 iff no command errored and no check failed
};

ExecResult execute(const Session& session, const ExecOptions& options);

std::string render_text(const ExecResult& result);
std::string render_json(const ExecResult& result, const ExecOptions& options);

// Convenience: parse + execute + render.
std::string run_session_text(std::string_view text, const ExecOptions& options, int* exit_code = nullptr);

}  // namespace opal
