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

// panelcollapse command-line tool. Uses only the C interface.
//
// Exit status: 0 success, 1 user error (bad input, failed precondition),
// 2 internal invariant breach.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "panelcollapse/panel_collapse.h"

namespace {

namespace fs = std::filesystem;

constexpr int kUserError = 1;
constexpr int kBug = 2;

// Carries an exit code and a message to main.
struct Failure {
  int code;
  std::string message;
};

int exit_code(pc_status status) {
  return status == PC_ERR_INVARIANT || status == PC_ERR_INTERNAL ? kBug : kUserError;
}

void check(pc_status status, const std::string& context) {
  if (status == PC_OK) return;
  throw Failure{exit_code(status), context + ": " + pc_status_name(status) + ": " + pc_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUserError, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kUserError, "cannot write " + path};
}

struct StringDeleter {
  void operator()(char* s) const { pc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

struct ComplexDeleter {
  void operator()(pc_complex* c) const { pc_complex_free(c); }
};
using Complex = std::unique_ptr<pc_complex, ComplexDeleter>;

struct ActionDeleter {
  void operator()(pc_action* a) const { pc_action_free(a); }
};
using Action = std::unique_ptr<pc_action, ActionDeleter>;

struct WallspaceDeleter {
  void operator()(pc_wallspace* w) const { pc_wallspace_free(w); }
};
using Wallspace = std::unique_ptr<pc_wallspace, WallspaceDeleter>;

Complex load_complex(const std::string& path) {
  const std::string text = read_file(path);
  pc_complex* cx = nullptr;
  check(pc_complex_parse(text.c_str(), &cx), path);
  return Complex(cx);
}

Action load_action(const pc_complex* cx, const std::string& path) {
  const std::string text = read_file(path);
  pc_action* action = nullptr;
  check(pc_action_parse(cx, text.c_str(), &action), path);
  return Action(action);
}

Wallspace load_wallspace(const std::string& path) {
  const std::string text = read_file(path);
  pc_wallspace* space = nullptr;
  check(pc_wallspace_parse(text.c_str(), &space), path);
  return Wallspace(space);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
  }
}

// Result of processing one file: text for stdout and an exit code.
struct Outcome {
  std::string text;
  int code = 0;
  std::string error;
};

Outcome capture(const std::function<std::string()>& body) {
  try {
    return {body(), 0, {}};
  } catch (const Failure& f) {
    return {{}, f.code, f.message};
  }
}

// Runs body on one file, or on every regular file of a directory in name
// order. Directory entries are processed concurrently; output order is fixed.
int for_each_input(const std::string& file, const std::string& each,
                   const std::function<Outcome(const std::string&)>& body) {
  if (each.empty()) {
    if (file.empty()) throw Failure{kUserError, "an input file or --each <dir> is required"};
    Outcome o = body(file);
    std::cout << o.text;
    if (o.code) std::cerr << o.error << "\n";
    return o.code;
  }
  std::error_code ec;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(each, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  }
  if (ec) throw Failure{kUserError, "cannot list " + each + ": " + ec.message()};
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const std::string& f : files) jobs.push_back(std::async(std::launch::async, body, f));
  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome o = jobs[i].get();
    const std::string name = fs::path(files[i]).filename().string();
    if (o.code) {
      std::cerr << o.error << "\n";
    } else {
      std::cout << "== " << name << "\n" << o.text;
    }
    code = std::max(code, o.code);
  }
  return code;
}

struct Options {
  std::string file;
  std::string second;
  std::string each;
  std::string output;
  std::string provenance;
  std::string trace;
  std::string panel;
  bool json = false;
  bool automatic = false;
  int count = 100;
  std::optional<std::uint64_t> seed;
};

Outcome validate_one(const std::string& path, bool json) {
  return capture([&] {
    const std::string text = read_file(path);
    int valid = 0;
    char* report = nullptr;
    check(pc_validate_text(text.c_str(), json, &valid, &report), path);
    std::string out = take(report);
    if (!valid) throw Failure{kUserError, path + ": " + (out.empty() ? "" : out.substr(0, out.size() - 1))};
    return out;
  });
}

using ComplexReport = pc_status (*)(const pc_complex*, int, char**);

Outcome report_one(const std::string& path, bool json, ComplexReport report) {
  return capture([&] {
    Complex cx = load_complex(path);
    char* out = nullptr;
    check(report(cx.get(), json, &out), path);
    return take(out);
  });
}

int cmd_stats(const Options& o) {
  return for_each_input(o.file, o.each, [&](const std::string& path) {
    return capture([&] {
      Complex cx = load_complex(path);
      Action action;
      if (!o.second.empty()) action = load_action(cx.get(), o.second);
      char* out = nullptr;
      check(pc_stats_report(cx.get(), action.get(), o.json, &out), path);
      return take(out);
    });
  });
}

int cmd_collapse(const Options& o) {
  if (!o.panel.empty() && o.automatic) throw Failure{kUserError, "--panel and --auto are exclusive"};
  Complex cx = load_complex(o.file);
  pc_complex* result = nullptr;
  char* provenance = nullptr;
  char* report = nullptr;
  check(pc_collapse(cx.get(), o.panel.empty() ? nullptr : o.panel.c_str(), o.json, &result,
                    &provenance, &report),
        o.file);
  Complex out(result);
  const std::string prov = take(provenance);
  const std::string summary = take(report);
  char* text = nullptr;
  check(pc_complex_serialize(out.get(), &text), "serialize");
  const std::string serialized = take(text);
  std::string prov_path = o.provenance;
  if (prov_path.empty() && !o.output.empty()) prov_path = o.output + ".prov";
  if (!o.output.empty()) {
    write_file(o.output, serialized);
    std::cout << summary;
  } else {
    std::cout << serialized;
  }
  if (!prov_path.empty()) write_file(prov_path, prov);
  return 0;
}

int cmd_run(const Options& o) {
  Complex cx = load_complex(o.file);
  Action action;
  if (!o.second.empty()) action = load_action(cx.get(), o.second);
  char* text = nullptr;
  char* json = nullptr;
  pc_complex* tree = nullptr;
  check(pc_run(cx.get(), action.get(), &text, &json, &tree), o.file);
  Complex final_tree(tree);
  const std::string trace_text = take(text);
  const std::string trace_json = take(json);
  std::cout << (o.json ? trace_json : trace_text);
  if (!o.trace.empty()) write_file(o.trace, trace_json);
  if (!o.output.empty()) {
    char* serialized = nullptr;
    check(pc_complex_serialize(final_tree.get(), &serialized), "serialize");
    write_file(o.output, take(serialized));
  }
  return 0;
}

int cmd_dualize(const Options& o) {
  Wallspace space = load_wallspace(o.file);
  char* out = nullptr;
  check(pc_dualize(space.get(), &out), o.file);
  emit(take(out), o.output);
  return 0;
}

int cmd_stallings(const Options& o) {
  return for_each_input(o.file, o.each, [&](const std::string& path) {
    return capture([&] {
      Wallspace space = load_wallspace(path);
      char* out = nullptr;
      check(pc_stallings(space.get(), o.json, &out), path);
      return take(out);
    });
  });
}

int cmd_export_dot(const Options& o) {
  Complex cx = load_complex(o.file);
  std::string prov;
  if (!o.provenance.empty()) prov = read_file(o.provenance);
  char* out = nullptr;
  check(pc_export_dot(cx.get(), o.provenance.empty() ? nullptr : prov.c_str(), &out), o.file);
  emit(take(out), o.output);
  return 0;
}

int cmd_fuzz(const Options& o) {
  std::uint64_t seed = 0;
  if (o.seed) {
    seed = *o.seed;
  } else if (const char* env = std::getenv("PANELCOLLAPSE_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{kUserError, "PANELCOLLAPSE_SEED is not an unsigned integer"};
    }
  }
  char* out = nullptr;
  std::size_t failures = 0;
  check(pc_fuzz(seed, o.count, o.json, &out, &failures), "fuzz");
  std::cout << take(out);
  return failures ? kBug : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Panel collapse for finite CAT(0) cube complexes", "panelcollapse"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* cmd) { cmd->add_option("file", o.file, "Input file")->required(); };
  auto batch = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Input file");
    cmd->add_option("--each", o.each, "Process every file in a directory");
  };
  auto json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "Machine-readable output"); };

  CLI::App* validate = app.add_subcommand("validate", "Check that a graph is a CAT(0) 1-skeleton");
  batch(validate);
  json(validate);
  CLI::App* hyperplanes = app.add_subcommand("hyperplanes", "List hyperplanes");
  batch(hyperplanes);
  json(hyperplanes);
  CLI::App* panels = app.add_subcommand("panels", "List extremal panels");
  batch(panels);
  json(panels);
  CLI::App* stats = app.add_subcommand("stats", "Summary statistics");
  batch(stats);
  stats->add_option("action", o.second, "Action file");
  json(stats);
  CLI::App* collapse = app.add_subcommand("collapse", "Collapse one or more extremal panels");
  input(collapse);
  collapse->add_option("--panel", o.panel, "Panels as H,E,side; several separated by ';'");
  collapse->add_flag("--auto", o.automatic, "Pick an extremal panel (default)");
  collapse->add_option("-o,--output", o.output, "Write the output complex here");
  collapse->add_option("--provenance", o.provenance, "Write the provenance sidecar here");
  json(collapse);
  CLI::App* run = app.add_subcommand("run", "Collapse equivariantly down to a tree");
  input(run);
  run->add_option("action", o.second, "Action file (default: trivial group)");
  run->add_option("--trace", o.trace, "Write the JSON trace here");
  run->add_option("-o,--output", o.output, "Write the final tree here");
  json(run);
  CLI::App* dualize = app.add_subcommand("dualize", "Dual cube complex of a wallspace");
  input(dualize);
  dualize->add_option("-o,--output", o.output, "Output file");
  CLI::App* stallings = app.add_subcommand("stallings", "Dualize a wallspace and collapse to a tree");
  batch(stallings);
  json(stallings);
  CLI::App* dot = app.add_subcommand("export-dot", "Graphviz rendering of a complex");
  input(dot);
  dot->add_option("--provenance", o.provenance, "Provenance sidecar from collapse");
  dot->add_option("-o,--output", o.output, "Output file");
  CLI::App* fuzz = app.add_subcommand("fuzz", "Run the collapse driver on random complexes");
  fuzz->add_option("--count", o.count, "Number of instances")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", o.seed, "Seed (default: $PANELCOLLAPSE_SEED, else 0)");
  json(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "panelcollapse: " << e.what() << "\n\n" << app.help();
    return kUserError;
  }

  try {
    if (validate->parsed()) {
      return for_each_input(o.file, o.each, [&](const std::string& p) { return validate_one(p, o.json); });
    }
    if (hyperplanes->parsed()) {
      return for_each_input(o.file, o.each, [&](const std::string& p) {
        return report_one(p, o.json, pc_hyperplanes_report);
      });
    }
    if (panels->parsed()) {
      return for_each_input(o.file, o.each, [&](const std::string& p) {
        return report_one(p, o.json, pc_panels_report);
      });
    }
    if (stats->parsed()) return cmd_stats(o);
    if (collapse->parsed()) return cmd_collapse(o);
    if (run->parsed()) return cmd_run(o);
    if (dualize->parsed()) return cmd_dualize(o);
    if (stallings->parsed()) return cmd_stallings(o);
    if (dot->parsed()) return cmd_export_dot(o);
    if (fuzz->parsed()) return cmd_fuzz(o);
  } catch (const Failure& f) {
    std::cerr << "panelcollapse: " << f.message << "\n";
    return f.code;
  }
  return kUserError;
}
