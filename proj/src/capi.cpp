// Copyright 2026 The panelcollapse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "panelcollapse/panel_collapse.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "panelcollapse/collapse.hpp"
#include "panelcollapse/complex.hpp"
#include "panelcollapse/dot.hpp"
#include "panelcollapse/error.hpp"
#include "panelcollapse/panels.hpp"
#include "panelcollapse/pocset.hpp"
#include "panelcollapse/random.hpp"
#include "panelcollapse/report.hpp"
#include "panelcollapse/symmetry.hpp"
#include "panelcollapse/text_format.hpp"

struct pc_complex {
  panelcollapse::CubeComplex complex;
};

struct pc_action {
  panelcollapse::GroupAction action;
  std::size_t vertex_count;
};

struct pc_wallspace {
  panelcollapse::Wallspace space;
};

namespace {

using namespace panelcollapse;

thread_local std::string last_error;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

pc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return PC_ERR_PARSE;
    case ErrorKind::kStructure: return PC_ERR_STRUCTURE;
    case ErrorKind::kValidation: return PC_ERR_VALIDATION;
    case ErrorKind::kPrecondition: return PC_ERR_PRECONDITION;
    case ErrorKind::kInvariant: return PC_ERR_INVARIANT;
  }
  return PC_ERR_INTERNAL;
}

template <typename F>
pc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return PC_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Assigns only after every output is ready, so failures leave outputs alone.
void set_string(char** out, const std::string& s) {
  if (out) *out = copy_string(s);
}

const GroupAction& bound_action(const pc_complex* cx, const pc_action* action,
                                std::optional<GroupAction>& storage) {
  if (action == nullptr) {
    storage = GroupAction::trivial(cx->complex);
    return *storage;
  }
  if (action->vertex_count != cx->complex.vertex_count()) {
    throw ArgumentError("action was parsed for a different complex");
  }
  return action->action;
}

std::vector<PanelKey> parse_panel_list(const std::string& text) {
  std::vector<PanelKey> keys;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    keys.push_back(parse_panel_key(text.substr(start, end - start)));
    start = end + 1;
  }
  return keys;
}

}  // namespace

extern "C" {

const char* pc_version(void) { return "1.0.0"; }

const char* pc_status_name(pc_status status) {
  switch (status) {
    case PC_OK: return "ok";
    case PC_ERR_PARSE: return "parse error";
    case PC_ERR_STRUCTURE: return "structural error";
    case PC_ERR_VALIDATION: return "validation error";
    case PC_ERR_PRECONDITION: return "precondition error";
    case PC_ERR_ARGUMENT: return "argument error";
    case PC_ERR_INVARIANT: return "invariant error";
    case PC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pc_last_error(void) { return last_error.c_str(); }

void pc_string_free(char* s) { std::free(s); }

pc_status pc_complex_parse(const char* text, pc_complex** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new pc_complex{parse_complex(text)};
  });
}

void pc_complex_free(pc_complex* cx) { delete cx; }

pc_status pc_complex_serialize(const pc_complex* cx, char** out) {
  return guarded([&] {
    require(cx, "complex");
    require(out, "out");
    *out = copy_string(serialize_complex(cx->complex));
  });
}

pc_status pc_complex_counts(const pc_complex* cx, size_t* vertices, size_t* edges,
                            int* dimension) {
  return guarded([&] {
    require(cx, "complex");
    if (vertices) *vertices = cx->complex.vertex_count();
    if (edges) *edges = cx->complex.edge_count();
    if (dimension) *dimension = cx->complex.dimension();
  });
}

pc_status pc_validate_text(const char* text, int json, int* valid, char** report) {
  return guarded([&] {
    require(text, "text");
    GraphText graph = parse_graph(text);
    const bool ok = validate_graph(graph.names, graph.edges).valid();
    std::string r = validation_report(graph, json != 0);
    if (valid) *valid = ok ? 1 : 0;
    set_string(report, r);
  });
}

pc_status pc_hyperplanes_report(const pc_complex* cx, int json, char** out) {
  return guarded([&] {
    require(cx, "complex");
    require(out, "out");
    *out = copy_string(hyperplanes_report(cx->complex, json != 0));
  });
}

pc_status pc_panels_report(const pc_complex* cx, int json, char** out) {
  return guarded([&] {
    require(cx, "complex");
    require(out, "out");
    *out = copy_string(panels_report(cx->complex, json != 0));
  });
}

pc_status pc_stats_report(const pc_complex* cx, const pc_action* action, int json, char** out) {
  return guarded([&] {
    require(cx, "complex");
    require(out, "out");
    std::optional<GroupAction> storage;
    *out = copy_string(stats_report(cx->complex, bound_action(cx, action, storage), json != 0));
  });
}

pc_status pc_action_parse(const pc_complex* cx, const char* text, pc_action** out) {
  return guarded([&] {
    require(cx, "complex");
    require(text, "text");
    require(out, "out");
    *out = new pc_action{parse_action(text, cx->complex), cx->complex.vertex_count()};
  });
}

pc_status pc_action_trivial(const pc_complex* cx, pc_action** out) {
  return guarded([&] {
    require(cx, "complex");
    require(out, "out");
    *out = new pc_action{GroupAction::trivial(cx->complex), cx->complex.vertex_count()};
  });
}

void pc_action_free(pc_action* action) { delete action; }

size_t pc_action_order(const pc_action* action) { return action ? action->action.order() : 0; }

pc_status pc_collapse(const pc_complex* cx, const char* panels, int json_report, pc_complex** out,
                      char** provenance, char** report) {
  return guarded([&] {
    require(cx, "complex");
    std::vector<Panel> chosen;
    if (panels == nullptr) {
      std::optional<Panel> p = find_extremal_panel(cx->complex);
      if (!p) throw PreconditionError("complex is a tree; there is no extremal panel");
      chosen.push_back(std::move(*p));
    } else {
      for (const PanelKey& key : parse_panel_list(panels)) {
        chosen.push_back(make_panel(cx->complex, key));
      }
    }
    CollapseResult result = collapse(cx->complex, chosen);
    std::string prov = serialize_provenance(result);
    std::string rep = collapse_report(result, json_report != 0);
    set_string(provenance, prov);
    set_string(report, rep);
    if (out) *out = new pc_complex{std::move(result.output)};
  });
}

pc_status pc_run(const pc_complex* cx, const pc_action* action, char** trace_text,
                 char** trace_json, pc_complex** tree) {
  return guarded([&] {
    require(cx, "complex");
    std::optional<GroupAction> storage;
    RunResult run = run_to_tree(cx->complex, bound_action(cx, action, storage));
    std::string text = trace_report(cx->complex, run, false);
    std::string json = trace_report(cx->complex, run, true);
    set_string(trace_text, text);
    set_string(trace_json, json);
    if (tree) *tree = new pc_complex{std::move(run.final_complex)};
  });
}

pc_status pc_wallspace_parse(const char* text, pc_wallspace** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new pc_wallspace{parse_wallspace(text)};
  });
}

void pc_wallspace_free(pc_wallspace* space) { delete space; }

pc_status pc_dualize(const pc_wallspace* space, char** complex_text) {
  return guarded([&] {
    require(space, "wallspace");
    require(complex_text, "out");
    *complex_text = copy_string(dual_text(space->space, dualize(space->space)));
  });
}

pc_status pc_stallings(const pc_wallspace* space, int json, char** report) {
  return guarded([&] {
    require(space, "wallspace");
    require(report, "out");
    *report = copy_string(stallings_report(space->space, stallings_pipeline(space->space), json != 0));
  });
}

pc_status pc_export_dot(const pc_complex* cx, const char* provenance, char** out) {
  return guarded([&] {
    require(cx, "complex");
    require(out, "out");
    if (provenance == nullptr) {
      *out = copy_string(export_dot(cx->complex));
    } else {
      auto crossings = parse_provenance(provenance, cx->complex);
      *out = copy_string(export_dot(cx->complex, &crossings));
    }
  });
}

pc_status pc_fuzz(uint64_t seed, int count, int json, char** report, size_t* failures) {
  return guarded([&] {
    if (count < 0) throw ArgumentError("count is negative");
    FuzzSummary summary = run_fuzz(seed, count);
    set_string(report, fuzz_report(seed, count, summary, json != 0));
    if (failures) *failures = summary.failures;
  });
}

}  // extern "C"
