// Command-line front end: build named families, verify anchor sets against
// circuit files, reproduce the summary table, and export demo geometry.

#include "nncirc/constructions.hpp"
#include "nncirc/families.hpp"
#include "nncirc/serialize.hpp"
#include "nncirc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nncirc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct BuildResult {
  Json circuit;
  AnchorSet anchors;
};

std::vector<IntVec> int_rows(const Json& j) {
  std::vector<IntVec> rows;
  for (const auto& r : j) {
    IntVec row;
    for (const auto& v : r) row.push_back(Int(v.get<long long>()));
    rows.push_back(std::move(row));
  }
  return rows;
}

BuildResult build_family(const std::string& family, size_t m, size_t n,
                         const std::string& circuit_path) {
  if (family == "and-eq") {
    Depth2Circuit c = family_and_eq(m, n);
    std::vector<IntVec> rows;
    IntVec b;
    for (const auto& g : c.gates) {
      rows.push_back(g.weights);
      b.push_back(0);
    }
    return {circuit_to_json(c), construct_equality_system(rows, b, c.n())};
  }
  if (family == "or-eq") {
    Depth2Circuit c = family_or_eq(m, n);
    return {circuit_to_json(c), construct_sym_elt(c)};
  }
  if (family == "parity-eq") {
    Depth2Circuit c = family_parity_eq(m, n);
    return {circuit_to_json(c), construct_sym_elt(c)};
  }
  if (family == "parity-comp") {
    Depth2Circuit c = family_parity_comp(m, n);
    return {circuit_to_json(c), construct_sym_lt(c)};
  }
  if (family == "ip2") {
    Depth2Circuit c = family_ip2(n);
    return {circuit_to_json(c), construct_sym_lt(c)};
  }
  if (family == "omb-eq") {
    DecisionList l = family_omb_eq(m, n);
    return {circuit_to_json(l), construct_edl(l)};
  }
  if (family == "ldl-file" || family == "edl-file") {
    CircuitDoc doc = circuit_from_json(read_json(circuit_path));
    auto* list = std::get_if<DecisionList>(&doc);
    if (!list) throw std::runtime_error("circuit file does not hold a decision list");
    Json echo = circuit_to_json(*list);
    if (family == "edl-file") return {echo, construct_edl(*list)};
    AnchorSet set;
    try {
      set = construct_ldl_regular(*list);
    } catch (const RegularityViolated&) {
      set = construct_ldl_general(*list);
    } catch (const XStarNotFound&) {
      set = construct_ldl_general(*list);
    }
    return {echo, set};
  }
  if (family == "polytope-file") {
    Json j = read_json(circuit_path);
    std::vector<IntVec> rows = int_rows(j.at("A"));
    IntVec b;
    for (const auto& v : j.at("b")) b.push_back(Int(v.get<long long>()));
    if (rows.empty()) throw std::runtime_error("empty polytope");
    return {j, construct_polytope(rows, b, rows[0].size())};
  }
  throw std::runtime_error("unknown family: " + family);
}

int cmd_build(const std::string& family, size_t m, size_t n, std::string circuit_path,
              std::string anchors_path, const std::string& format) {
  if (circuit_path.empty()) circuit_path = family + ".circuit.json";
  if (anchors_path.empty())
    anchors_path = family + (format == "csv" ? ".anchors.csv" : ".anchors.json");
  BuildResult r = build_family(family, m, n, circuit_path);
  if (family != "ldl-file" && family != "edl-file" && family != "polytope-file")
    write_text(circuit_path, r.circuit.dump(2) + "\n");
  if (format == "csv")
    write_text(anchors_path, anchors_to_csv(r.anchors));
  else
    write_text(anchors_path, anchors_to_json(r.anchors).dump(2) + "\n");
  auto [size, res] = size_and_resolution(r.anchors);
  std::cout << "family=" << family << " size=" << size << " resolution=" << res << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& circuit_path, const std::string& anchors_path,
               const std::string& out_path, int max_bits) {
  CircuitDoc doc = circuit_from_json(read_json(circuit_path));
  AnchorSet set = anchors_from_json(read_json(anchors_path));
  VerificationReport rep = verify_exhaustive(set, make_oracle(doc), max_bits);
  Json j = report_to_json(rep);
  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return rep.pass ? kExitPass : kExitFail;
}

struct TableRow {
  std::string family;
  size_t m, n;
  std::function<uint64_t()> closed_form;
};

int cmd_table(size_t max_m, size_t max_n) {
  std::cout << "family        m  n  constructed  closed-form  match  resolution  verified\n";
  bool all_ok = true;
  auto emit = [&](const std::string& family, size_t m, size_t n, uint64_t closed) {
    BuildResult r = build_family(family, m, n, "");
    CircuitDoc doc = circuit_from_json(r.circuit);
    VerificationReport rep = verify_exhaustive(r.anchors, make_oracle(doc));
    auto [size, res] = size_and_resolution(r.anchors);
    bool match = size == closed;
    all_ok = all_ok && match && rep.pass;
    std::printf("%-13s %-2zu %-2zu %-12zu %-12llu %-6s %-11d %s\n", family.c_str(), m, n, size,
                static_cast<unsigned long long>(closed), match ? "yes" : "NO", res,
                rep.pass ? "pass" : "FAIL");
  };
  for (size_t m = 1; m <= max_m; ++m)
    for (size_t n = 1; n <= max_n; ++n) {
      if (2 * n * m > 14) continue;  // keep the exhaustive sweep at desk scale
      emit("and-eq", m, n, 2 * m + 1);
      emit("or-eq", m, n, (m + 2) * (uint64_t(1) << (m - 1)));
      emit("parity-eq", m, n, [&] {
        uint64_t p = 1;
        for (size_t i = 0; i < m; ++i) p *= 3;
        return p;
      }());
      emit("parity-comp", m, n, uint64_t(1) << m);
      emit("omb-eq", m, n, (m + 1) * (uint64_t(1) << m));
    }
  for (size_t n = 1; n <= 3; ++n) emit("ip2", n, n, uint64_t(1) << n);
  return all_ok ? kExitPass : kExitFail;
}

int cmd_demo(const std::string& family, std::string out_path) {
  if (out_path.empty()) out_path = family + ".demo.csv";
  AnchorSet set;
  Oracle oracle;
  if (family == "and2") {
    set.anchors = RatMatrix(2, 2);
    set.anchors(0, 0) = Rat(1, 2);
    set.anchors(0, 1) = Rat(1, 2);
    set.anchors(1, 0) = 1;
    set.anchors(1, 1) = 1;
    set.labels = {0, 1};
    oracle = [](const Bits& x) { return x[0] & x[1]; };
  } else if (family == "or2") {
    set.anchors = RatMatrix(2, 2);
    set.anchors(1, 0) = Rat(1, 2);
    set.anchors(1, 1) = Rat(1, 2);
    set.labels = {0, 1};
    oracle = [](const Bits& x) { return x[0] | x[1]; };
  } else if (family == "polytope-2d") {
    std::vector<IntVec> rows = {{-1, 0}, {0, -1}, {1, 1}, {2, -1}, {-1, 2}};
    IntVec b = {0, 0, 1, 2, 2};
    set = construct_polytope(rows, b, 2);
    oracle = [rows, b](const Bits& x) {
      for (size_t i = 0; i < rows.size(); ++i) {
        Int s = 0;
        for (size_t j = 0; j < 2; ++j)
          if (x[j]) s += rows[i][j];
        if (s > b[i]) return 0;
      }
      return 1;
    };
  } else {
    throw std::runtime_error("unknown demo family: " + family);
  }

  std::ostringstream csv;
  csv << "section,x1,x2,value\n";
  for (size_t i = 0; i < set.size(); ++i)
    csv << "anchor," << rat_to_string(set.anchors(i, 0)) << "," << rat_to_string(set.anchors(i, 1))
        << "," << set.labels[i] << "\n";
  for (uint64_t idx = 0; idx < 4; ++idx) {
    Bits x = index_to_bits(idx, 2);
    csv << "vertex," << x[0] << "," << x[1] << "," << oracle(x) << "\n";
  }
  // perpendicular bisectors between cross-label anchor pairs, as
  // coefficients (p, q, r) of p*x1 + q*x2 = r
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j) {
      if (set.labels[i] == set.labels[j]) continue;
      Rat p = 2 * (set.anchors(j, 0) - set.anchors(i, 0));
      Rat q = 2 * (set.anchors(j, 1) - set.anchors(i, 1));
      Rat r = 0;
      for (size_t k = 0; k < 2; ++k)
        r += set.anchors(j, k) * set.anchors(j, k) - set.anchors(i, k) * set.anchors(i, k);
      csv << "bisector," << rat_to_string(p) << "," << rat_to_string(q) << "," << rat_to_string(r)
          << "\n";
    }
  write_text(out_path, csv.str());
  std::cout << "wrote " << out_path << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nearest-neighbor representations of depth-2 threshold circuits"};
  app.require_subcommand(1);

  std::string family, circuit_path, anchors_path, out_path, format = "json";
  size_t m = 1, n = 1;
  int max_bits = 24;

  auto* build = app.add_subcommand("build", "construct an anchor set for a named family");
  build->add_option("--family", family)->required();
  build->add_option("--m", m);
  build->add_option("--n", n);
  build->add_option("--circuit", circuit_path, "circuit JSON (output, or input for *-file families)");
  build->add_option("--anchors", anchors_path, "anchor set output path");
  build->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "exhaustively verify anchors against a circuit");
  verify->add_option("--circuit", circuit_path)->required();
  verify->add_option("--anchors", anchors_path)->required();
  verify->add_option("--out", out_path, "report JSON path");
  verify->add_option("--max-bits", max_bits, "input-cube cap");

  size_t table_m = 3, table_n = 2;
  auto* table = app.add_subcommand("table", "reproduce and verify the size table");
  table->add_option("--m", table_m)->check(CLI::Range(size_t(1), size_t(4)));
  table->add_option("--n", table_n)->check(CLI::Range(size_t(1), size_t(3)));

  auto* demo = app.add_subcommand("demo", "export 2-d anchor geometry as CSV");
  demo->add_option("--family", family)->required();
  demo->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(family, m, n, circuit_path, anchors_path, format);
    if (verify->parsed()) return cmd_verify(circuit_path, anchors_path, out_path, max_bits);
    if (table->parsed()) return cmd_table(table_m, table_n);
    if (demo->parsed()) return cmd_demo(family, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
