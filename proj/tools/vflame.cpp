#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "vflame/bubbles.hpp"
#include "vflame/flame.hpp"
#include "vflame/io.hpp"
#include "vflame/menger.hpp"
#include "vflame/oracle.hpp"

namespace {

using namespace vflame;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Input problems map to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

RootedDigraph load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return io::parse(text, io::detect_format(path, text));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Vertex vertex_arg(const RootedDigraph& d, const std::string& id) {
  auto v = d.find(id);
  if (!v) throw UsageError("unknown vertex '" + id + "'");
  if (*v == d.root()) throw UsageError("the vertex must differ from the root");
  return *v;
}

std::vector<Vertex> parse_order(const RootedDigraph& d, const std::string& text) {
  std::vector<Vertex> order;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (v != d.root()) order.push_back(v);
  if (text.empty()) return order;
  if (text.starts_with("seed:")) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(text.substr(5));
    } catch (const std::exception&) {
      throw UsageError("bad order seed '" + text + "'");
    }
    std::shuffle(order.begin(), order.end(), std::mt19937_64(seed));
    return order;
  }
  order.clear();
  std::stringstream in(text);
  for (std::string id; std::getline(in, id, ',');) order.push_back(vertex_arg(d, id));
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.size() + 1 != d.vertex_count())
    throw UsageError("--order must list every non-root vertex exactly once");
  return order;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

int flame_build(const std::string& input, const std::string& order_text, const std::string& cert_path,
                const std::string& dot_path) {
  const RootedDigraph d = load(input);
  const std::vector<Vertex> order = parse_order(d, order_text);
  io::RunReport report;
  report.vertices = d.vertex_count();
  report.edges = d.edge_count();

  auto t = std::chrono::steady_clock::now();
  const RootedDigraph reduced = lovasz_reduce(d);
  report.timing_ms["reduce"] = elapsed_ms(t);
  t = std::chrono::steady_clock::now();
  const OmegaResult omega = omega_construct(reduced, order);
  report.timing_ms["omega"] = elapsed_ms(t);
  t = std::chrono::steady_clock::now();
  const FlameCertificate cert = certify(d, omega.flame);
  report.timing_ms["certify"] = elapsed_ms(t);
  t = std::chrono::steady_clock::now();
  const CertificateReport verdict = verify_certificate(cert);
  report.timing_ms["verify"] = elapsed_ms(t);

  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (v == d.root()) continue;
    const std::size_t k = omega.flame.in_degree(v);
    report.kappa[d.name(v)] = k;
    report.kappa_sum += k;
  }
  report.edges_kept = omega.flame.edge_count();
  report.edges_deleted = d.edge_count() - omega.flame.edge_count();
  for (const VertexVerdict& v : verdict.vertices) {
    std::string status = "pass";
    if (!v.ok()) {
      status.clear();
      for (const std::string& reason : v.reasons) status += (status.empty() ? "" : "; ") + reason;
    }
    report.certificate[d.name(v.vertex)] = status;
  }
  if (!cert_path.empty()) write_file(cert_path, io::to_json(cert).dump(2) + "\n");
  if (!dot_path.empty()) write_file(dot_path, io::to_dot(d, &omega.flame, &cert));
  std::cout << io::to_json(report).dump(2) << "\n";
  for (const std::string& reason : verdict.global_reasons) std::cerr << "certificate: " << reason << "\n";
  return verdict.ok() ? kOk : kFailure;
}

int flame_verify(const std::string& input, const std::string& cert_path) {
  const RootedDigraph d = load(input);
  FlameCertificate cert;
  try {
    cert = io::certificate_from_json(io::Json::parse(read_file(cert_path)), d);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(cert_path + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(cert_path + ": " + e.what());
  }
  const CertificateReport report = verify_certificate(cert);
  std::cout << io::to_json(report, d).dump(2) << "\n";
  return report.ok() ? kOk : kFailure;
}

int analyze_seps(const std::string& input, const std::string& id) {
  const RootedDigraph d = load(input);
  const Vertex v = vertex_arg(d, id);
  const ExtremeSeparations ext = extreme_separations(d, v);
  std::cout << "kappa=" << kappa(d, v) << "\n"
            << "S=" << format_set(d, ext.near_root.set) << "\n"
            << "T=" << format_set(d, ext.near_sink.set) << "\n";
  return kOk;
}

int analyze_bubbles(const std::string& input, const std::string& id) {
  const RootedDigraph d = load(input);
  const Vertex v = vertex_arg(d, id);
  const RegionWitness b = largest_bubble(d, v);
  const RegionWitness a = smallest_anti_bubble(d, v);
  const RootedDigraph reduced = without_root_edge(d, v);
  std::cout << "B=" << format_set(d, b.set) << " ent=" << format_set(d, boundary(reduced, b.set).entrance)
            << "\n"
            << "A=" << format_set(d, a.set) << " ent=" << format_set(d, boundary(reduced, a.set).entrance)
            << "\n";
  return kOk;
}

int gen_random(std::size_t n, double p, std::uint64_t seed, const std::string& format) {
  const RootedDigraph d = oracle::gen_random(n, p, seed);
  std::cout << io::serialize(d, format == "edgelist" ? io::Format::kEdgeList : io::Format::kJson);
  return kOk;
}

int oracle_check(const std::string& lemma, std::size_t n, std::size_t seeds) {
  std::vector<oracle::LemmaId> ids;
  if (lemma == "all") {
    ids = oracle::all_lemmas();
  } else if (auto id = oracle::lemma_from_string(lemma)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown lemma '" + lemma + "'");
  }
  bool ok = true;
  for (oracle::LemmaId id : ids) {
    const oracle::SuiteResult result = oracle::run_lemma_suite(id, n, seeds);
    std::cout << oracle::to_string(id) << ": checked=" << result.checked
              << " failed=" << result.failures.size() << " seeds=" << result.seeds_tried << "\n";
    for (const auto& [instance, outcome] : result.failures)
      std::cerr << io::counterexample_json(instance, outcome).dump() << "\n";
    if (!result.failures.empty()) ok = false;
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large vertex-flames with per-vertex certificates"};
  app.require_subcommand(1);

  auto* flame = app.add_subcommand("flame", "build or verify large vertex-flames");
  flame->require_subcommand(1);
  std::string input, cert_in, order, cert_out, dot_out;
  auto* build = flame->add_subcommand("build", "reduce, run the omega construction and certify");
  build->add_option("input", input, "digraph (.json or edge list)")->required();
  build->add_option("--order", order, "comma-separated vertex ids or seed:N");
  build->add_option("--emit-cert", cert_out, "write the certificate JSON here");
  build->add_option("--emit-dot", dot_out, "write a DOT rendering here");
  auto* verify = flame->add_subcommand("verify", "check a certificate against its base digraph");
  verify->add_option("input", input, "base digraph")->required();
  verify->add_option("cert", cert_in, "certificate JSON")->required();

  auto* analyze = app.add_subcommand("analyze", "inspect separations and bubbles at a vertex");
  analyze->require_subcommand(1);
  std::string vertex;
  auto* seps = analyze->add_subcommand("seps", "smallest and largest Erdos-Menger separations");
  seps->add_option("input", input)->required();
  seps->add_option("vertex", vertex)->required();
  auto* bubbles = analyze->add_subcommand("bubbles", "largest bubble and smallest anti-bubble");
  bubbles->add_option("input", input)->required();
  bubbles->add_option("vertex", vertex)->required();

  auto* gen = app.add_subcommand("gen", "generate inputs");
  gen->require_subcommand(1);
  std::size_t n = 10;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::string format = "json";
  auto* random = gen->add_subcommand("random", "seeded random rooted digraph");
  random->add_option("--n", n, "vertex count")->check(CLI::PositiveNumber);
  random->add_option("--p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", seed, "seed");
  random->add_option("--format", format, "json or edgelist")->check(CLI::IsMember({"json", "edgelist"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force lemma checks");
  oracle_cmd->require_subcommand(1);
  std::string lemma;
  std::size_t oracle_n = 8, oracle_seeds = 20;
  auto* check = oracle_cmd->add_subcommand("check", "run a lemma suite on random instances");
  check->add_option("--lemma", lemma, "lemma id or 'all'")->required();
  check->add_option("--n", oracle_n, "maximum vertex count");
  check->add_option("--seeds", oracle_seeds, "number of instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return flame_build(input, order, cert_out, dot_out);
    if (*verify) return flame_verify(input, cert_in);
    if (*seps) return analyze_seps(input, vertex);
    if (*bubbles) return analyze_bubbles(input, vertex);
    if (*random) return gen_random(n, p, seed, format);
    if (*check) return oracle_check(lemma, oracle_n, oracle_seeds);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kTooLarge ? kUsage : kFailure;
  }
  return kUsage;
}
