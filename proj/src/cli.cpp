#include "harmonic/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "harmonic/faces.hpp"
#include "harmonic/oracles.hpp"
#include "harmonic/volume.hpp"

namespace harmonic {

namespace {

using Json = nlohmann::ordered_json;

Json bigToJson(const BigInt& v) {
  if (fitsInt64(v)) return Json(static_cast<long long>(v));
  return Json(v.str());
}

std::string csvEscape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void csvRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csvEscape(fields[i]);
  }
  out << "\r\n";
}

struct Request {
  int n = 0;
  std::string format = "json";
  int threads = 1;
  int cap = 0; // 0 = keep default
  bool slow = false;
  std::string g, gp, gammaText;
};

Caps capsFor(const Request& req, int Caps::*slot) {
  Caps caps = Caps::fromEnv();
  if (req.cap > 0 && slot != nullptr) caps.*slot = req.cap;
  return caps;
}

int runFVector(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::fvectorN);
  FVector fv = fVectorViaTables(req.n, caps);
  if (req.format == "csv") {
    csvRow(out, {"d", "f"});
    for (std::size_t i = 0; i < fv.entries.size(); ++i)
      csvRow(out, {std::to_string(static_cast<int>(i) - 1), fv.entries[i].str()});
    return 0;
  }
  Json j;
  j["n"] = req.n;
  j["fvector"] = Json::array();
  for (const auto& e : fv.entries) j["fvector"].push_back(bigToJson(e));
  out << j.dump() << "\n";
  return 0;
}

int runVertices(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::tripleN);
  requireCap(req.n, caps.tripleN, "vertices");
  std::vector<VertexPoint> vertices;
  enumerateFineTriples(req.n, [&](const HarmonicTriple& t) {
    vertices.push_back(vertexCoordinates(t));
    return true;
  });
  std::sort(vertices.begin(), vertices.end());
  if (req.format == "csv") {
    std::vector<std::string> header;
    for (int i = 1; i <= req.n; ++i) header.push_back("x" + std::to_string(i));
    for (int i = 1; i <= req.n; ++i) header.push_back("y" + std::to_string(i));
    csvRow(out, header);
    for (const auto& v : vertices) {
      std::vector<std::string> row;
      for (int c : v.x) row.push_back(std::to_string(c));
      for (int c : v.y) row.push_back(std::to_string(c));
      csvRow(out, row);
    }
    return 0;
  }
  Json j;
  j["n"] = req.n;
  j["vertices"] = Json::array();
  for (const auto& v : vertices)
    j["vertices"].push_back(Json::array({Json(v.x), Json(v.y)}));
  out << j.dump() << "\n";
  return 0;
}

int runFacets(const Request& req, std::ostream& out) {
  auto facets = facetSystem(req.n);
  if (req.format == "csv") {
    csvRow(out, {"S", "T", "rhs"});
    for (const auto& f : facets)
      csvRow(out, {blockToString(maskElements(f.S), req.n >= 10),
                   blockToString(maskElements(f.T), req.n >= 10),
                   std::to_string(f.rhs)});
    return 0;
  }
  Json j;
  j["n"] = req.n;
  j["equal_sum"] = equalitySumValue(req.n);
  j["facets"] = Json::array();
  for (const auto& f : facets) {
    Json row;
    row["S"] = maskElements(f.S);
    row["T"] = maskElements(f.T);
    row["rhs"] = f.rhs;
    j["facets"].push_back(row);
  }
  out << j.dump() << "\n";
  return 0;
}

int runTriples(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::tripleN);
  struct Row {
    int dim;
    std::string K, pi1, pi2, serial;
  };
  std::vector<Row> rows;
  enumerateTriples(req.n, caps, [&](const HarmonicTriple& t) {
    rows.push_back({polytopeFaceDim(t), blockToString(maskElements(t.K), req.n >= 10),
                    t.pi1.toString(), t.pi2.toString(), t.toString()});
    return true;
  });
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.serial < b.serial;
  });
  if (req.format == "csv") {
    csvRow(out, {"dim", "K", "pi1", "pi2"});
    for (const auto& r : rows)
      csvRow(out, {std::to_string(r.dim), r.K, r.pi1, r.pi2});
    return 0;
  }
  Json j;
  j["n"] = req.n;
  j["count"] = rows.size();
  j["triples"] = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["K"] = r.K;
    row["pi1"] = r.pi1;
    row["pi2"] = r.pi2;
    row["dim"] = r.dim;
    j["triples"].push_back(row);
  }
  out << j.dump() << "\n";
  return 0;
}

int runVolume(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::volumeN);
  Rational vol = harmonicVolume(req.n, caps, req.threads);
  if (req.format == "csv") {
    csvRow(out, {"n", "volume"});
    csvRow(out, {std::to_string(req.n), ratToString(vol)});
    return 0;
  }
  Json j;
  j["n"] = req.n;
  j["volume"] = ratToString(vol);
  out << j.dump() << "\n";
  return 0;
}

int runMixedVolume(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::trimmedQ);
  auto g = LabeledGraph::parse(req.g, req.n);
  auto gp = LabeledGraph::parse(req.gp, req.n);
  BigInt mv = scaledMixedVolume(g, gp, caps);
  if (req.format == "csv") {
    csvRow(out, {"scaled_mv"});
    csvRow(out, {mv.str()});
    return 0;
  }
  Json j;
  j["scaled_mv"] = bigToJson(mv);
  out << j.dump() << "\n";
  return 0;
}

int runNonzeroCount(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::nonzeroN);
  BigInt a = nonzeroMixedVolumeCount(req.n, caps);
  if (req.format == "csv") {
    csvRow(out, {"n", "a_n"});
    csvRow(out, {std::to_string(req.n), a.str()});
    return 0;
  }
  Json j;
  j["n"] = req.n;
  j["a_n"] = bigToJson(a);
  out << j.dump() << "\n";
  return 0;
}

int runGamma(const Request& req, std::ostream& out) {
  Caps caps = capsFor(req, &Caps::trimmedQ);
  if (req.gammaText.empty() == (req.g.empty() && req.gp.empty()))
    throw DomainError("gamma: give either --gamma or both --g and --gp");
  BipartiteMultigraph gamma =
      !req.gammaText.empty()
          ? BipartiteMultigraph::parse(req.gammaText, req.n)
          : BipartiteMultigraph::fromGraphs(LabeledGraph::parse(req.g, req.n),
                                            LabeledGraph::parse(req.gp, req.n));
  long long trimmed = trimmedLatticeCount(gamma, Side::Right, caps);
  BigInt weight = degreeWeight(gamma);
  if (req.format == "csv") {
    csvRow(out, {"gamma", "i_trimmed", "weight"});
    csvRow(out, {gamma.toString(), std::to_string(trimmed), weight.str()});
    return 0;
  }
  Json j;
  j["gamma"] = gamma.toString();
  j["i_trimmed"] = trimmed;
  j["weight"] = bigToJson(weight);
  out << j.dump() << "\n";
  return 0;
}

int runVerifyCmd(const Request& req, std::ostream& out) {
  Caps caps = Caps::fromEnv();
  auto checks = runVerify(req.n, caps, req.slow, req.threads);
  bool allOk = true;
  if (req.format == "csv") {
    csvRow(out, {"check", "n", "expected", "actual", "status"});
    for (const auto& c : checks) {
      csvRow(out, {c.check, std::to_string(c.n), c.expected, c.actual,
                   c.ok ? "ok" : "mismatch"});
      allOk = allOk && c.ok;
    }
  } else {
    Json j = Json::array();
    for (const auto& c : checks) {
      Json row;
      row["check"] = c.check;
      row["n"] = c.n;
      row["expected"] = c.expected;
      row["actual"] = c.actual;
      row["status"] = c.ok ? "ok" : "mismatch";
      j.push_back(row);
      allOk = allOk && c.ok;
    }
    out << j.dump() << "\n";
  }
  return allOk ? 0 : 4;
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact combinatorics and volumes of the harmonic polytope"};
  app.require_subcommand(1);

  Request req;
  std::function<int(const Request&, std::ostream&)> action;

  auto addCommon = [&](CLI::App* cmd, bool needsN) {
    if (needsN) cmd->add_option("--n", req.n, "ground set size")->required();
    cmd->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", req.threads, "worker pool size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap", req.cap, "override this command's size cap")
        ->check(CLI::PositiveNumber);
  };

  auto* fvector = app.add_subcommand("fvector", "face numbers of H_{n,n}");
  addCommon(fvector, true);
  fvector->callback([&] { action = runFVector; });

  auto* vertices = app.add_subcommand("vertices", "vertex coordinates");
  addCommon(vertices, true);
  vertices->callback([&] { action = runVertices; });

  auto* facets = app.add_subcommand("facets", "facet inequalities");
  addCommon(facets, true);
  facets->callback([&] { action = runFacets; });

  auto* triples = app.add_subcommand("triples", "harmonic triples with dimensions");
  addCommon(triples, true);
  triples->callback([&] { action = runTriples; });

  auto* volume = app.add_subcommand("volume", "exact normalized volume");
  addCommon(volume, true);
  volume->callback([&] { action = runVolume; });

  auto* mixed = app.add_subcommand("mixed-volume",
                                   "(2n-2)! times the mixed volume of two graphs");
  addCommon(mixed, true);
  mixed->add_option("--g", req.g, "first edge list, e.g. 1-2,3-4");
  mixed->add_option("--gp", req.gp, "second edge list");
  mixed->callback([&] { action = runMixedVolume; });

  auto* nonzero = app.add_subcommand("nonzero-count",
                                     "number of non-zero mixed volumes a_n");
  addCommon(nonzero, true);
  nonzero->callback([&] { action = runNonzeroCount; });

  auto* gamma = app.add_subcommand("gamma",
                                   "trimmed lattice count and weight of Gamma");
  addCommon(gamma, true);
  gamma->add_option("--g", req.g, "first edge list");
  gamma->add_option("--gp", req.gp, "second edge list");
  gamma->add_option("--gamma", req.gammaText, "partition pair I;J");
  gamma->callback([&] { action = runGamma; });

  auto* verify = app.add_subcommand("verify", "run the oracle cross-checks");
  verify->add_option("--n", req.n, "ground set size")->required();
  verify->add_option("--format", req.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--threads", req.threads, "worker pool size")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--slow,--slow-tests", req.slow,
                   "include the expensive cross-checks");
  verify->callback([&] { action = runVerifyCmd; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action(req, out);
  } catch (const CapError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace harmonic
