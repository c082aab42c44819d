// hilbworst: generators, families and verification reports for the local
// equations of the Hilbert scheme of n+1 points in A^n at the square of the
// maximal ideal. Links only the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hilbworst/hilbworst.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { hw_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Common {
  int n = 0;
  std::string format = "text";
  bool json = false;
  std::string out;

  hw_format fmt() const {
    if (json || format == "json") return HW_FORMAT_JSON;
    return format == "cas" ? HW_FORMAT_CAS : HW_FORMAT_TEXT;
  }
};

int report_error(hw_status s, const char* what) {
  std::cerr << "hilbworst: " << what << ": " << hw_last_error() << "\n";
  switch (s) {
    case HW_ERR_INVALID_ARGUMENT:
    case HW_ERR_INDEX_OUT_OF_RANGE:
    case HW_ERR_PARSE:
    case HW_ERR_NULL_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

bool emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    std::cerr << "hilbworst: cannot write " << c.out << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

void add_common(CLI::App* sub, Common& c, bool needs_n, const std::string& default_format) {
  c.format = default_format;
  auto* opt = sub->add_option("--n", c.n, "ambient dimension n (3..40)")->check(CLI::Range(3, 40));
  if (needs_n) opt->required();
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text", "cas"}));
  sub->add_flag("--json", c.json, "same as --format json");
  sub->add_option("--out", c.out, "write to this file instead of stdout");
}

int cmd_gens(const Common& c, const std::string& flavor, const std::string& presentation) {
  hw_ideal* ideal = nullptr;
  if (hw_status s = hw_ideal_create(c.n, flavor.c_str(), presentation.c_str(), &ideal); s != HW_OK)
    return report_error(s, "gens");
  std::unique_ptr<hw_ideal, decltype(&hw_ideal_free)> guard(ideal, hw_ideal_free);
  Owned text;
  if (hw_status s = hw_ideal_render(ideal, c.fmt(), &text.p); s != HW_OK) return report_error(s, "gens");
  return emit(c, text.str()) ? kExitOk : kExitFailed;
}

int cmd_family(const Common& c, const std::string& flavor) {
  Owned text;
  if (hw_status s = hw_family_render(c.n, flavor.c_str(), c.fmt(), &text.p); s != HW_OK) return report_error(s, "family");
  return emit(c, text.str()) ? kExitOk : kExitFailed;
}

int cmd_export(const Common& c, const std::string& flavor) {
  Owned text;
  if (hw_status s = hw_export_render(c.n, flavor.c_str(), c.fmt(), &text.p); s != HW_OK) return report_error(s, "export");
  return emit(c, text.str()) ? kExitOk : kExitFailed;
}

int cmd_verify(const Common& c, const std::string& flavor, const std::string& route, std::uint64_t seed,
               std::size_t samples, bool oracle_lines) {
  if (c.fmt() == HW_FORMAT_CAS) {
    std::cerr << "hilbworst: verify reports are json or text\n";
    return kExitUsage;
  }
  std::string routes = route;
  if (oracle_lines && routes != "all" && routes.find("oracle") == std::string::npos) routes += ",oracle";
  hw_report* report = nullptr;
  if (hw_status s = hw_verify(c.n, flavor.c_str(), routes.c_str(), seed, samples, &report); s != HW_OK)
    return report_error(s, "verify");
  std::unique_ptr<hw_report, decltype(&hw_report_free)> guard(report, hw_report_free);

  Owned text, lines, first;
  int passed = 0;
  if (hw_status s = hw_report_render(report, c.fmt(), &text.p); s != HW_OK) return report_error(s, "verify");
  hw_report_passed(report, &passed);
  std::string body = text.str();
  if (oracle_lines) {
    if (hw_status s = hw_report_sample_lines(report, &lines.p); s != HW_OK) return report_error(s, "verify");
    body += lines.str();
  }
  if (!emit(c, body)) return kExitFailed;
  if (!passed) {
    hw_report_first_failure(report, &first.p);
    std::cerr << "hilbworst: verification failed at " << first.str() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_subspaces(const Common& c, std::size_t list) {
  Owned text;
  if (hw_status s = hw_subspaces_render(c.n, list, c.fmt() == HW_FORMAT_JSON ? HW_FORMAT_JSON : HW_FORMAT_TEXT, &text.p);
      s != HW_OK)
    return report_error(s, "subspaces");
  return emit(c, text.str()) ? kExitOk : kExitFailed;
}

int cmd_table(const Common& c, const std::string& in) {
  std::string input;
  if (in == "-") {
    input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(in, std::ios::binary);
    if (!f) {
      std::cerr << "hilbworst: cannot read " << in << "\n";
      return kExitUsage;
    }
    input.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  Owned text;
  int assoc = 0;
  if (hw_status s = hw_table_render(input.c_str(), c.fmt() == HW_FORMAT_JSON ? HW_FORMAT_JSON : HW_FORMAT_TEXT, &assoc, &text.p);
      s != HW_OK)
    return report_error(s, "table");
  if (!emit(c, text.str())) return kExitFailed;
  if (!assoc) {
    std::cerr << "hilbworst: the table is not associative\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local equations of Hilb^n_{n+1} at the square of the maximal ideal", "hilbworst"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hw_version()));

  Common gens_c, family_c, verify_c, sub_c, table_c, export_c;
  std::string gens_flavor = "hilbert", presentation = "main";
  auto* gens = app.add_subcommand("gens", "generators of the ideal J");
  add_common(gens, gens_c, true, "text");
  gens->add_option("--flavor", gens_flavor)->check(CLI::IsMember({"hilbert", "miniversal", "based_algebra"}));
  gens->add_option("--presentation", presentation)->check(CLI::IsMember({"main", "alternate"}));

  std::string family_flavor = "hilbert";
  auto* family = app.add_subcommand("family", "the universal family over J");
  add_common(family, family_c, true, "text");
  family->add_option("--flavor", family_flavor)->check(CLI::IsMember({"hilbert", "miniversal"}));

  std::string verify_flavor = "hilbert", route = "all";
  std::uint64_t seed = 20261016;
  std::size_t samples = 100;
  bool oracle_lines = false;
  auto* ver = app.add_subcommand("verify", "run the verification routes");
  add_common(ver, verify_c, true, "text");
  ver->add_option("--flavor", verify_flavor)->check(CLI::IsMember({"hilbert", "miniversal"}));
  ver->add_option("--route", route, "classical|dgla|based|oracle|all, or a comma separated list");
  ver->add_option("--seed", seed);
  ver->add_option("--samples", samples)->check(CLI::Range(1, 100000));
  ver->add_flag("--oracle", oracle_lines, "append one JSON line per oracle sample");

  std::size_t list = 0;
  auto* sub = app.add_subcommand("subspaces", "maximal linear subspaces L_{A,B}");
  add_common(sub, sub_c, true, "text");
  sub->add_option("--list", list, "enumerate up to this many optimal (A,B)");

  std::string table_in = "-";
  auto* table = app.add_subcommand("table", "multiplication table of the family at a t-point");
  add_common(table, table_c, false, "text");
  table->add_option("--in", table_in, "JSON file {\"n\":..,\"t\":[[i,j,k,\"p/q\"],..]} or - for stdin");

  std::string export_flavor = "hilbert";
  auto* exp = app.add_subcommand("export", "ideal and family for other computer algebra systems");
  add_common(exp, export_c, true, "cas");
  exp->add_option("--flavor", export_flavor)->check(CLI::IsMember({"hilbert", "miniversal"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gens->parsed()) return cmd_gens(gens_c, gens_flavor, presentation);
  if (family->parsed()) return cmd_family(family_c, family_flavor);
  if (ver->parsed()) return cmd_verify(verify_c, verify_flavor, route, seed, samples, oracle_lines);
  if (sub->parsed()) return cmd_subspaces(sub_c, list);
  if (table->parsed()) return cmd_table(table_c, table_in);
  if (exp->parsed()) return cmd_export(export_c, export_flavor);
  return kExitUsage;
}
